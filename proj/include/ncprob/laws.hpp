#ifndef NCPROB_LAWS_HPP
#define NCPROB_LAWS_HPP

#include <complex>
#include <functional>
#include <memory>
#include <string>

#include "ncprob/jacobi.hpp"
#include "ncprob/measures.hpp"

namespace ncprob {

// Sampling grid for the weak-convergence distance: points x + i with
// x in [-half_width, half_width].
struct GridSpec {
  double half_width = 10.0;
  int points = 201;
};

// A probability law in whichever representation the computation supports:
// exact atomic data, closed-form transforms, a numeric density, or a moment
// prefix (evaluated through its Jacobi continued fraction).
class LawDescriptor {
 public:
  enum class Kind { Atomic, Semicircle, Arcsine, BernoulliSym, Normal, Density, MomentsOnly };

  static LawDescriptor atomic(AtomicMeasure mu);
  static LawDescriptor semicircle(double mean, double variance);
  static LawDescriptor arcsine(double mean, double variance);
  static LawDescriptor bernoulli_sym();
  static LawDescriptor normal(double mean, double variance);
  // pdf over [lo, hi]; must integrate to 1 within 1e-10
  static LawDescriptor density(std::function<double(double)> pdf, double lo, double hi,
                               std::string name);
  static LawDescriptor from_moments(const MomentSeq& m);
  // free commutator of two standard semicircles = free compound Poisson with
  // rate 2 and symmetric Bernoulli jumps
  static LawDescriptor tetilla();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  const AtomicMeasure& atomic_measure() const;
  const MomentSeq& moment_data() const;
  const JacobiParams& jacobi_data() const;

  bool has_density() const;
  double density_at(double x) const;
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

 private:
  LawDescriptor() = default;

  Kind kind_ = Kind::BernoulliSym;
  std::string name_;
  double mean_ = 0.0;
  double variance_ = 1.0;
  double support_lo_ = 0.0;
  double support_hi_ = 0.0;
  std::function<double(double)> pdf_;
  std::shared_ptr<const AtomicMeasure> measure_;
  std::shared_ptr<const MomentSeq> moments_;
  std::shared_ptr<const JacobiParams> jacobi_;
};

// G(z) for Im z >= 1. Closed forms for the named laws, exact rational
// evaluation for atomic measures, adaptive Gauss-Kronrod quadrature for
// density-defined laws, continued-fraction evaluation for moment data.
std::complex<double> cauchy_eval(const LawDescriptor& law, std::complex<double> z);

// max |G1 - G2| over the grid line Im z = 1; a deterministic lower bound of
// the sup metric.
double weak_distance(const LawDescriptor& a, const LawDescriptor& b, const GridSpec& grid = {});

// Moments 1..order of a density-backed law by adaptive quadrature.
std::vector<double> quadrature_moments(const LawDescriptor& law, int order,
                                       double absolute_tolerance = 1e-9);

// Exact moment prefix of a law whose moments are rational (every kind except
// Density).
MomentSeq exact_moment_sequence(const LawDescriptor& law, int order);

// Adaptive Gauss-Kronrod integration with an absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double absolute_tolerance);

}  // namespace ncprob

#endif
