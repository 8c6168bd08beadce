#include "ncprob/cumulants.hpp"

#include <map>
#include <mutex>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

std::vector<PartitionTypeRow> build_table(Flavor flavor, int n, int cap) {
  std::map<std::vector<int>, Rat> acc;
  auto add = [&](const Partition& p, const Rat& w) { acc[p.block_sizes()] += w; };
  switch (flavor) {
    case Flavor::Classical:
      for_each_set_partition(n, [&](const Partition& p) { add(p, Rat(1)); }, cap);
      break;
    case Flavor::Free:
      for_each_noncrossing(n, [&](const Partition& p) { add(p, Rat(1)); }, cap);
      break;
    case Flavor::Boolean:
      for_each_interval(n, [&](const Partition& p) { add(p, Rat(1)); }, cap);
      break;
    case Flavor::Monotone:
      // weight = (#compatible orders)/k! = 1/prod(subtree sizes)
      for_each_noncrossing(
          n,
          [&](const Partition& p) {
            auto parent = nesting_parents(p);
            std::vector<int> subtree(parent.size(), 1);
            for (size_t i = parent.size(); i-- > 0;)
              if (parent[i] >= 0) subtree[parent[i]] += subtree[i];
            Int hooks = 1;
            for (int s : subtree) hooks *= s;
            add(p, Rat(Int(1), hooks));
          },
          cap);
      break;
  }
  std::vector<PartitionTypeRow> rows;
  rows.reserve(acc.size());
  for (auto& [sizes, weight] : acc) rows.push_back({sizes, weight});
  return rows;
}

}  // namespace

const std::vector<PartitionTypeRow>& partition_type_table(Flavor flavor, int n, int cap) {
  if (n < 1) throw InvalidInputError("partition_type_table: order must be >= 1");
  if (n > cap)
    throw SizeLimitError("moment-cumulant order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<PartitionTypeRow>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(flavor), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(flavor, n, cap)).first;
  return it->second;
}

MomentSeq moments_from_cumulants(const CumulantSeq& c, int order, int cap) {
  if (order < 1) throw InvalidInputError("moments_from_cumulants: order must be >= 1");
  if (c.order() < order)
    throw InvalidInputError("moments_from_cumulants: cumulant sequence has order " +
                            std::to_string(c.order()) + ", need " + std::to_string(order));
  return MomentSeq(mcf_moments(c.values, order, c.flavor, cap));
}

CumulantSeq cumulants_from_moments(const MomentSeq& m, Flavor flavor, int cap) {
  // The full-block partition enters with weight 1 in every flavor, so the
  // system is triangular: peel f_n = m_n - (lower-order terms).
  int order = m.order();
  if (order < 1) throw InvalidInputError("cumulants_from_moments: empty moment sequence");
  std::vector<Rat> f;
  f.reserve(order);
  for (int n = 1; n <= order; ++n) {
    const auto& rows = partition_type_table(flavor, n, cap);
    Rat lower(0);
    for (const auto& row : rows) {
      if (row.sizes.size() == 1) continue;  // the f_n term itself
      Rat prod(1);
      for (int s : row.sizes) prod *= f[s - 1];
      lower += row.weight * prod;
    }
    f.push_back(m.values[n - 1] - lower);
  }
  return CumulantSeq(flavor, std::move(f));
}

CumulantSeq convolve_cumulants(const CumulantSeq& x, const CumulantSeq& y) {
  if (x.flavor != y.flavor)
    throw InvalidInputError("convolve_cumulants: flavors differ (" + flavor_name(x.flavor) +
                            " vs " + flavor_name(y.flavor) + ")");
  if (x.flavor == Flavor::Monotone)
    throw UnsupportedOperationError(
        "monotone convolution is not cumulant-additive; use measure-level F-composition");
  if (x.order() != y.order())
    throw InvalidInputError("convolve_cumulants: orders differ");
  std::vector<Rat> sum(x.values);
  for (int i = 0; i < y.order(); ++i) sum[i] += y.values[i];
  return CumulantSeq(x.flavor, std::move(sum));
}

CumulantSeq power_cumulants(const CumulantSeq& x, const Rat& t) {
  if (t < 0) throw InvalidInputError("power_cumulants: exponent must be nonnegative");
  std::vector<Rat> scaled(x.values);
  for (auto& v : scaled) v *= t;
  return CumulantSeq(x.flavor, std::move(scaled));
}

CumulantSeq dilate_cumulants(const CumulantSeq& x, const Rat& s) {
  std::vector<Rat> scaled(x.values);
  Rat p(1);
  for (auto& v : scaled) {
    p *= s;
    v *= p;
  }
  return CumulantSeq(x.flavor, std::move(scaled));
}

CumulantSeq bp_map(const CumulantSeq& x, Flavor target_flavor) {
  return CumulantSeq(target_flavor, x.values);
}

}  // namespace ncprob
