#ifndef NCPROB_MEASURES_HPP
#define NCPROB_MEASURES_HPP

#include <vector>

#include "ncprob/rational_function.hpp"
#include "ncprob/sequences.hpp"

#include "json.hpp"

namespace ncprob {

// A certified real value: exact rational when lo == hi, otherwise an enclosure
// of an isolated algebraic number.
struct RealEnclosure {
  Rat lo, hi;

  RealEnclosure() = default;
  RealEnclosure(Rat point) : lo(point), hi(std::move(point)) {}  // NOLINT(google-explicit-constructor)
  RealEnclosure(Rat lo_, Rat hi_);

  bool exact() const { return lo == hi; }
  Rat midpoint() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  double to_double() const { return ncprob::to_double(midpoint()); }
};

// Default certification width for irrational atoms.
const Rat& default_isolation_width();  // 10^-30

// Finitely supported probability measure. The exact carrier is the Cauchy
// transform G (a reduced rational function); atoms and weights are certified
// views derived from it, exact whenever the poles are rational. Moment-level
// work always goes through G and never leaves the rationals.
class AtomicMeasure {
 public:
  AtomicMeasure(const std::vector<Rat>& atoms, const std::vector<Rat>& weights);
  static AtomicMeasure point_mass(const Rat& c);
  static AtomicMeasure symmetric_bernoulli();  // (δ_-1 + δ_1)/2

  const RationalFunction& cauchy() const { return cauchy_; }
  const std::vector<RealEnclosure>& atoms() const { return atoms_; }
  const std::vector<RealEnclosure>& weights() const { return weights_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  bool exact() const;
  std::vector<Rat> exact_atoms() const;    // InvalidInputError unless exact
  std::vector<Rat> exact_weights() const;

  MomentSeq moments(int order) const;

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    return a.cauchy_ == b.cauchy_;
  }

  nlohmann::ordered_json to_json() const;
  static AtomicMeasure from_json(const nlohmann::json& j);

 private:
  AtomicMeasure() = default;
  friend AtomicMeasure measure_from_rational_G(const RationalFunction&, const Rat&);

  RationalFunction cauchy_;
  std::vector<RealEnclosure> atoms_;
  std::vector<RealEnclosure> weights_;
};

RationalFunction cauchy_of_atomic(const AtomicMeasure& mu);

// Recovers the measure from a rational Cauchy transform: poles become atoms,
// residues the weights. Rejects transforms with complex or multiple poles or
// nonpositive residues.
AtomicMeasure measure_from_rational_G(const RationalFunction& G,
                                      const Rat& isolation_width = default_isolation_width());

// Exact moments from the expansion G = sum m_n z^{-n-1}; no root-finding.
MomentSeq moments_of_rational_G(const RationalFunction& G, int order);

AtomicMeasure boolean_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2);
AtomicMeasure monotone_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2);
AtomicMeasure classical_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2);

}  // namespace ncprob

#endif
