#ifndef NCPROB_EXPERIMENTS_HPP
#define NCPROB_EXPERIMENTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncprob/cumulants.hpp"
#include "ncprob/laws.hpp"
#include "ncprob/levy.hpp"

#include "json.hpp"

namespace ncprob {

// Cumulants with coefficients in Q[sqrt(n)]; normalized sums S_n/sqrt(n) live
// here so that odd orders stay exact.
struct SqrtCumulantSeq {
  Flavor flavor = Flavor::Classical;
  long long radicand = 1;
  std::vector<SqrtExt> values;

  int order() const { return static_cast<int>(values.size()); }
};

// Cumulants of (X_1 + ... + X_n)/sqrt(n) for iid copies of the base law:
// value_m = n^(1-m/2) * base_m. Base must have mean 0 and variance 1.
SqrtCumulantSeq clt_sequence(Flavor flavor, const CumulantSeq& base, long long n);

std::vector<SqrtExt> sqrt_moments(const SqrtCumulantSeq& c, int order,
                                  int cap = kDefaultEnumerationCap);

// Moments of Y_n = (X_n - n)/sqrt(n), X_n Poisson with rate n: classical
// cumulants c_1 = 0, c_m = n^(1-m/2) for m >= 2.
std::vector<SqrtExt> poisson_to_normal_moments(long long n, int order);

struct ReportRow {
  long long n = 0;
  std::vector<SqrtExt> moments;
  Rat fourth_moment;
  double distance = 0.0;
  std::optional<JacobiParams> jacobi;
};

struct ExperimentReport {
  std::string label;
  std::vector<std::string> notes;
  std::optional<JacobiParams> target_jacobi;
  std::vector<ReportRow> rows;

  nlohmann::ordered_json to_json(int precision = 12) const;
  std::string to_csv(int precision = 12) const;
  std::string to_pretty(int precision = 12) const;
};

using CumulantFamily = std::function<CumulantSeq(long long)>;

// kappa_m(n) = kappa_m * (1 + 1/n): the canonical 1/n-decay perturbation of a
// target cumulant sequence.
CumulantFamily decay_perturbation_family(CumulantSeq target);

ExperimentReport clt_report(Flavor flavor, const CumulantSeq& base,
                            const std::vector<long long>& ns, const GridSpec& grid = {});

ExperimentReport poisson_to_normal_report(const std::vector<long long>& ns, int order = 8,
                                          const GridSpec& grid = {});

// Rows pair the member's fourth moment with its grid distance to the limit
// law; members must be mean-0 variance-1.
ExperimentReport fourth_moment_report(const CumulantFamily& family, Flavor flavor,
                                      const LawDescriptor& limit_law,
                                      const std::vector<long long>& ns, int order,
                                      const GridSpec& grid = {});

// Same machinery with the flavor's Poisson law (unit cumulants) as target.
ExperimentReport poisson_criterion_report(const CumulantFamily& family, Flavor flavor,
                                          const std::vector<long long>& ns, int order = 8,
                                          const GridSpec& grid = {});

// Convergence to a compound Poisson with k-atomic jump distribution tracks
// 2k+2 moments and the Jacobi levels 0..k of each member and of the target.
ExperimentReport compound_poisson_report(const CumulantFamily& family, Flavor flavor,
                                         const Rat& lambda, const AtomicMeasure& nu,
                                         const std::vector<long long>& ns,
                                         const GridSpec& grid = {});

// Free compound Poisson with rate 2 and symmetric Bernoulli jumps, with a
// quadrature cross-check of the target moments against the commutator density.
ExperimentReport tetilla_report(const std::vector<long long>& ns, const GridSpec& grid = {});

}  // namespace ncprob

#endif
