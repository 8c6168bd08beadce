#ifndef NCPROB_CUMULANTS_HPP
#define NCPROB_CUMULANTS_HPP

#include <vector>

#include "ncprob/partitions.hpp"
#include "ncprob/sequences.hpp"

namespace ncprob {

// One aggregated moment-cumulant term: every partition of the flavor's family
// whose block sizes form `sizes` contributes the same product, so the family
// collapses to a weight per size multiset. The weight is the partition count
// for classical/free/boolean and the sum of (compatible orders)/|pi|! for
// monotone.
struct PartitionTypeRow {
  std::vector<int> sizes;  // descending
  Rat weight;
};

// Rows for order n, deterministic order, cached per (flavor, n).
const std::vector<PartitionTypeRow>& partition_type_table(Flavor flavor, int n,
                                                          int cap = kDefaultEnumerationCap);

// m_n as a function of cumulants f_1..f_n over any commutative ring that
// supports Ring+Ring, Ring*Ring and Rat*Ring (exact rationals and Q[sqrt(n)]
// both qualify).
template <class Ring>
Ring mcf_moment(const std::vector<Ring>& cumulants, int n, Flavor flavor,
                int cap = kDefaultEnumerationCap) {
  const auto& rows = partition_type_table(flavor, n, cap);
  Ring total = Ring(Rat(0));
  for (const auto& row : rows) {
    Ring prod = Ring(Rat(1));
    for (int s : row.sizes) prod = prod * cumulants[s - 1];
    total = total + row.weight * prod;
  }
  return total;
}

template <class Ring>
std::vector<Ring> mcf_moments(const std::vector<Ring>& cumulants, int order, Flavor flavor,
                              int cap = kDefaultEnumerationCap) {
  std::vector<Ring> out;
  out.reserve(order);
  for (int n = 1; n <= order; ++n) out.push_back(mcf_moment(cumulants, n, flavor, cap));
  return out;
}

MomentSeq moments_from_cumulants(const CumulantSeq& c, int order,
                                 int cap = kDefaultEnumerationCap);
CumulantSeq cumulants_from_moments(const MomentSeq& m, Flavor flavor,
                                   int cap = kDefaultEnumerationCap);

// Componentwise sum; classical/free/boolean only (monotone convolution is not
// cumulant-additive).
CumulantSeq convolve_cumulants(const CumulantSeq& x, const CumulantSeq& y);

// t-th convolution power at cumulant level: values scaled by t >= 0.
CumulantSeq power_cumulants(const CumulantSeq& x, const Rat& t);

// Law of s*X: n-th value scaled by s^n.
CumulantSeq dilate_cumulants(const CumulantSeq& x, const Rat& s);

// Bercovici-Pata bijection at truncated-cumulant level: a flavor retag.
CumulantSeq bp_map(const CumulantSeq& x, Flavor target_flavor);

}  // namespace ncprob

#endif
