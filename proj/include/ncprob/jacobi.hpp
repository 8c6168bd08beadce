#ifndef NCPROB_JACOBI_HPP
#define NCPROB_JACOBI_HPP

#include <complex>
#include <optional>

#include "ncprob/measures.hpp"
#include "ncprob/sequences.hpp"

#include "json.hpp"

namespace ncprob {

// Coefficients of the monic three-term recursion of a probability measure.
// Shapes:
//   terminating  |gamma| == |beta|, gamma ends in 0 (rank = |beta| atoms),
//                or a single beta with no gamma (rank 1);
//   truncation   |gamma| in {|beta|-1, |beta|}, all gammas > 0.
// gammas are nonnegative, and a zero may only appear in the last slot.
struct JacobiParams {
  std::vector<Rat> beta;
  std::vector<Rat> gamma;

  void validate() const;
  bool terminated() const;
  int rank() const;  // terminating only

  nlohmann::ordered_json to_json() const;
  static JacobiParams from_json(const nlohmann::json& j);
  bool operator==(const JacobiParams&) const = default;
};

// Exact orthogonalization of 1, x, x^2, ... against the moment data. The
// default shape from order-M input is beta_0..beta_n, gamma_0..gamma_{n-1}
// with n = floor((M-2)/2), except that a vanishing next gamma terminates the
// sequence early (with the zero recorded). Fails with an
// InvalidMomentSequenceError when the data is not a probability moment
// sequence.
JacobiParams jacobi_from_moments(const MomentSeq& m);

// Explicit level counts: beta_0..beta_{nb-1} and gamma_0..gamma_{ng-1}
// (needs moments of order 2nb-1 and 2ng respectively; ng <= nb).
JacobiParams jacobi_from_moments(const MomentSeq& m, int beta_levels, int gamma_levels);

// Expansion of the (finite or truncated) continued fraction at infinity.
// Terminating parameters determine every order; a truncation with b betas and
// g gammas is faithful through order 2g+1 (g == b-1) or 2g (g == b), beyond
// which an OrderLimitError is raised.
MomentSeq moments_from_jacobi(const JacobiParams& J, int order);

// Smallest m with gamma_{m-1} == 0, if any computed gamma vanishes.
std::optional<int> finite_support_rank(const JacobiParams& J);

// Finite continued fraction -> rational G -> measure.
AtomicMeasure atomic_from_terminating_jacobi(
    const JacobiParams& J, const Rat& isolation_width = default_isolation_width());

// The exact rational Cauchy transform of the finite fraction. Truncations with
// |gamma| == |beta| get one extra zero beta level so the last gamma
// participates (equivalent to a point-mass tail).
RationalFunction rational_G_from_jacobi(const JacobiParams& J);

// Bottom-up evaluation of the continued fraction at z with Im z >= 1. The
// optional tail stands in for the unknown continuation G_nu(z) and must be a
// plausible Cauchy-transform value (Im <= 0, modulus <= 1); it is multiplied
// by the last gamma, so it needs |gamma| == |beta|. Absent tail = 0.
std::complex<double> cauchy_cf_eval(const JacobiParams& J, std::complex<double> z,
                                    std::optional<std::complex<double>> tail = std::nullopt);

}  // namespace ncprob

#endif
