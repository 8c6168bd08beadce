#ifndef NCPROB_PARTITIONS_HPP
#define NCPROB_PARTITIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

// Default ceiling for all partition enumerations and moment-cumulant orders.
// Bell(14) is around 1.9e8, the upper end of what a desk run should attempt.
inline constexpr int kDefaultEnumerationCap = 14;

// Partition of {1..n}. Blocks hold ascending elements and are ordered by
// their least element.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  // labels[i] = block label of element i+1, labels by first appearance (a
  // restricted-growth string).
  static Partition from_labels(const std::vector<int>& labels);

  std::vector<int> block_sizes() const;  // sorted descending
  std::string to_string() const;         // "{1,3}{2}"
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& rhs) const { return blocks < rhs.blocks; }
};

// Non-crossing partition paired with a block order; order[i] is the 1-based
// rank of blocks[i]. Whenever block V nests inside block W, W's rank is
// smaller.
struct MonotonePartition {
  Partition base;
  std::vector<int> order;

  std::string to_string() const;  // "{1,4}:1{2,3}:2"
  bool operator==(const MonotonePartition&) const = default;
};

// min(outer) < min(inner) && max(inner) < max(outer). Blocks must be disjoint.
bool is_nested(const std::vector<int>& inner, const std::vector<int>& outer);

// No a<b<c<d with a,c in one block and b,d in another.
bool is_noncrossing(const Partition& p);

using PartitionVisitor = std::function<void(const Partition&)>;
using MonotoneVisitor = std::function<void(const MonotonePartition&)>;

void for_each_set_partition(int n, const PartitionVisitor& visit,
                            int cap = kDefaultEnumerationCap);
void for_each_noncrossing(int n, const PartitionVisitor& visit,
                          int cap = kDefaultEnumerationCap);
void for_each_interval(int n, const PartitionVisitor& visit,
                       int cap = kDefaultEnumerationCap);
void for_each_monotone(int n, const MonotoneVisitor& visit,
                       int cap = kDefaultEnumerationCap);

std::vector<Partition> enum_set_partitions(int n, int cap = kDefaultEnumerationCap);
std::vector<Partition> enum_noncrossing(int n, int cap = kDefaultEnumerationCap);
std::vector<Partition> enum_interval(int n, int cap = kDefaultEnumerationCap);
std::vector<MonotonePartition> enum_monotone(int n, int cap = kDefaultEnumerationCap);

// Index of the innermost enclosing block per block, -1 for outermost.
// Requires a non-crossing partition.
std::vector<int> nesting_parents(const Partition& nc);

// Number of nesting-compatible block orders, via the hook-length formula for
// the nesting forest.
Int compatible_order_count(const Partition& nc);

}  // namespace ncprob

#endif
