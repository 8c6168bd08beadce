#ifndef NCPROB_LEVY_HPP
#define NCPROB_LEVY_HPP

#include "ncprob/measures.hpp"
#include "ncprob/sequences.hpp"

namespace ncprob {

struct LevyPair;

// Finite nonnegative measure sigma with exact transform data. The kernel
// sum m_i (1+b_i^2)/(z - b_i) and the first moment sum m_i b_i are carried as
// exact rationals even when the atoms are irrational; together with the drift
// these determine the generating pair's cumulants of every order.
class FiniteKernelMeasure {
 public:
  FiniteKernelMeasure() = default;  // zero measure
  static FiniteKernelMeasure from_points(const std::vector<Rat>& atoms,
                                         const std::vector<Rat>& masses);

  const RationalFunction& kernel() const { return kernel_; }
  const Rat& first_moment() const { return first_moment_; }
  const Rat& total_mass() const { return total_mass_; }
  const std::vector<RealEnclosure>& atoms() const { return atoms_; }
  const std::vector<RealEnclosure>& masses() const { return masses_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  bool is_zero() const { return kernel_.is_zero() && atoms_.empty(); }

 private:
  friend LevyPair boolean_levy_pair(const AtomicMeasure& mu);

  RationalFunction kernel_;
  Rat first_moment_ = Rat(0);
  Rat total_mass_ = Rat(0);
  std::vector<RealEnclosure> atoms_;
  std::vector<RealEnclosure> masses_;
};

// Generating pair (drift, finite measure) of an infinitely divisible law; the
// same pair yields the cumulants of every flavor, which is what makes the
// Bercovici-Pata maps act as retags.
struct LevyPair {
  Rat gamma;
  FiniteKernelMeasure sigma;
};

// value_1 = gamma + sum m_i b_i; value_n = sum m_i b_i^{n-2} (1+b_i^2) for
// n >= 2, read off the kernel's expansion at infinity.
CumulantSeq levy_pair_to_cumulants(const LevyPair& pair, Flavor flavor, int order);

// value_n = lambda * m_n(nu).
CumulantSeq compound_poisson_cumulants(const Rat& lambda, const AtomicMeasure& nu, Flavor flavor,
                                       int order);

// Reparametrizes (lambda, nu) as a generating pair; inverse direction of the
// kernel expansion, so levy_pair_to_cumulants(result) reproduces the compound
// Poisson cumulants.
LevyPair levy_pair_from_compound_poisson(const Rat& lambda, const AtomicMeasure& nu);

// Boolean generating pair of an arbitrary atomic probability measure, via the
// partial-fraction data of the self-energy K = z - 1/G. A k-atomic measure
// yields sigma with exactly k-1 atoms.
LevyPair boolean_levy_pair(const AtomicMeasure& mu);

}  // namespace ncprob

#endif
