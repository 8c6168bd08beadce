#include "ncprob/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

void check_enum_args(int n, int cap) {
  if (n < 1) throw InvalidInputError("partition enumeration needs n >= 1");
  if (cap < 1) throw InvalidInputError("enumeration cap must be >= 1");
  if (n > cap)
    throw SizeLimitError("enumeration size n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
}

}  // namespace

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.n = static_cast<int>(labels.size());
  int max_label = -1;
  for (int lbl : labels) max_label = std::max(max_label, lbl);
  p.blocks.assign(max_label + 1, {});
  for (int i = 0; i < p.n; ++i) p.blocks[labels[i]].push_back(i + 1);
  return p;  // first-appearance labels already order blocks by least element
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    out += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b[i]);
    }
    out += "}";
  }
  return out;
}

std::string MonotonePartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < base.blocks.size(); ++i) {
    const auto& b = base.blocks[i];
    out += "{";
    for (size_t j = 0; j < b.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(b[j]);
    }
    out += "}:" + std::to_string(order[i]);
  }
  return out;
}

bool is_nested(const std::vector<int>& inner, const std::vector<int>& outer) {
  if (inner.empty() || outer.empty()) throw InvalidInputError("is_nested: empty block");
  for (int x : inner)
    if (std::find(outer.begin(), outer.end(), x) != outer.end())
      throw InvalidInputError("is_nested: blocks overlap");
  auto [imin, imax] = std::minmax_element(inner.begin(), inner.end());
  auto [omin, omax] = std::minmax_element(outer.begin(), outer.end());
  return *omin < *imin && *imax < *omax;
}

bool is_noncrossing(const Partition& p) {
  // Two blocks cross iff their merged ownership sequence has >= 4 runs
  // (an ...a b a b... pattern).
  const auto& bs = p.blocks;
  for (size_t i = 0; i < bs.size(); ++i) {
    for (size_t j = i + 1; j < bs.size(); ++j) {
      const auto& a = bs[i];
      const auto& b = bs[j];
      size_t ia = 0, ib = 0;
      int runs = 0, last = -1;
      while (ia < a.size() || ib < b.size()) {
        int who;
        if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
          who = 0;
          ++ia;
        } else {
          who = 1;
          ++ib;
        }
        if (who != last) {
          ++runs;
          last = who;
        }
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

void for_each_set_partition(int n, const PartitionVisitor& visit, int cap) {
  check_enum_args(n, cap);
  std::vector<int> labels(n, 0);
  std::vector<int> maxes(n, 0);  // maxes[i] = max(labels[0..i])
  // iterate restricted-growth strings in lexicographic order
  for (;;) {
    visit(Partition::from_labels(labels));
    int i = n - 1;
    while (i > 0 && labels[i] == maxes[i - 1] + 1) --i;
    if (i == 0) break;
    ++labels[i];
    maxes[i] = std::max(maxes[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

namespace {

// Backtracking generator for non-crossing partitions: pick the block of the
// first free element of the current segment; the complement splits into
// independent contiguous gaps.
struct NoncrossingEnum {
  int n;
  const PartitionVisitor& visit;
  std::vector<std::vector<int>> blocks;

  void run() {
    std::vector<std::pair<int, int>> segments{{1, n}};
    recurse(segments);
  }

  void recurse(std::vector<std::pair<int, int>>& segments) {
    if (segments.empty()) {
      Partition p;
      p.n = n;
      p.blocks = blocks;
      std::sort(p.blocks.begin(), p.blocks.end(),
                [](const auto& a, const auto& b) { return a.front() < b.front(); });
      visit(p);
      return;
    }
    auto [lo, hi] = segments.back();
    segments.pop_back();
    int tail = hi - lo;  // elements after lo in this segment
    for (unsigned long mask = 0; mask < (1ul << tail); ++mask) {
      std::vector<int> block{lo};
      for (int t = 0; t < tail; ++t)
        if (mask & (1ul << t)) block.push_back(lo + 1 + t);
      size_t added = 0;
      for (size_t i = 0; i + 1 < block.size(); ++i)
        if (block[i] + 1 <= block[i + 1] - 1) {
          segments.push_back({block[i] + 1, block[i + 1] - 1});
          ++added;
        }
      if (block.back() < hi) {
        segments.push_back({block.back() + 1, hi});
        ++added;
      }
      blocks.push_back(std::move(block));
      recurse(segments);
      blocks.pop_back();
      segments.resize(segments.size() - added);
    }
    segments.push_back({lo, hi});
  }
};

}  // namespace

void for_each_noncrossing(int n, const PartitionVisitor& visit, int cap) {
  check_enum_args(n, cap);
  NoncrossingEnum e{n, visit, {}};
  e.run();
}

void for_each_interval(int n, const PartitionVisitor& visit, int cap) {
  check_enum_args(n, cap);
  // cut set between positions i and i+1 <-> bit i
  for (unsigned long cuts = 0; cuts < (1ul << (n - 1)); ++cuts) {
    Partition p;
    p.n = n;
    std::vector<int> block{1};
    for (int i = 1; i < n; ++i) {
      if (cuts & (1ul << (i - 1))) {
        p.blocks.push_back(std::move(block));
        block = {i + 1};
      } else {
        block.push_back(i + 1);
      }
    }
    p.blocks.push_back(std::move(block));
    visit(p);
  }
}

std::vector<int> nesting_parents(const Partition& nc) {
  const auto& bs = nc.blocks;
  std::vector<int> parent(bs.size(), -1);
  for (size_t i = 0; i < bs.size(); ++i) {
    // innermost enclosing block = enclosing block with the largest min
    int best = -1;
    for (size_t j = 0; j < bs.size(); ++j) {
      if (i == j) continue;
      if (bs[j].front() < bs[i].front() && bs[i].back() < bs[j].back()) {
        if (best < 0 || bs[j].front() > bs[best].front()) best = static_cast<int>(j);
      }
    }
    parent[i] = best;
  }
  return parent;
}

Int compatible_order_count(const Partition& nc) {
  auto parent = nesting_parents(nc);
  size_t k = parent.size();
  std::vector<int> subtree(k, 1);
  // children come later in min-element order, so accumulate right to left
  for (size_t i = k; i-- > 0;)
    if (parent[i] >= 0) subtree[parent[i]] += subtree[i];
  Int count = 1;
  for (size_t i = 2; i <= k; ++i) count *= static_cast<long>(i);
  for (size_t i = 0; i < k; ++i) count /= subtree[i];
  return count;
}

void for_each_monotone(int n, const MonotoneVisitor& visit, int cap) {
  check_enum_args(n, cap);
  for_each_noncrossing(
      n,
      [&](const Partition& p) {
        auto parent = nesting_parents(p);
        size_t k = parent.size();
        std::vector<int> order(k, 0);
        std::vector<char> labeled(k, 0);
        // assign ranks 1..k outer-first
        std::function<void(int)> assign = [&](int rank) {
          if (rank > static_cast<int>(k)) {
            MonotonePartition mp{p, order};
            visit(mp);
            return;
          }
          for (size_t i = 0; i < k; ++i) {
            if (labeled[i]) continue;
            if (parent[i] >= 0 && !labeled[parent[i]]) continue;
            labeled[i] = 1;
            order[i] = rank;
            assign(rank + 1);
            labeled[i] = 0;
            order[i] = 0;
          }
        };
        assign(1);
      },
      cap);
}

std::vector<Partition> enum_set_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_set_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<Partition> enum_noncrossing(int n, int cap) {
  std::vector<Partition> out;
  for_each_noncrossing(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<Partition> enum_interval(int n, int cap) {
  std::vector<Partition> out;
  for_each_interval(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<MonotonePartition> enum_monotone(int n, int cap) {
  std::vector<MonotonePartition> out;
  for_each_monotone(n, [&](const MonotonePartition& mp) { out.push_back(mp); }, cap);
  return out;
}

}  // namespace ncprob
