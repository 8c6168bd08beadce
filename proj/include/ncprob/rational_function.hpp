#ifndef NCPROB_RATIONAL_FUNCTION_HPP
#define NCPROB_RATIONAL_FUNCTION_HPP

#include <complex>
#include <utility>
#include <vector>

#include "ncprob/polynomial.hpp"

namespace ncprob {

// Quotient of polynomials, stored reduced with monic denominator. The unique
// normal form makes equality exact.
class RationalFunction {
 public:
  RationalFunction() : den_(Rat(1)) {}  // zero
  RationalFunction(Poly num, Poly den);
  static RationalFunction constant(const Rat& c);
  static RationalFunction x();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  bool operator==(const RationalFunction&) const = default;

  RationalFunction reciprocal() const;
  // this ∘ inner
  RationalFunction compose(const RationalFunction& inner) const;

  std::complex<double> eval(std::complex<double> z) const;
  Rat eval(const Rat& x) const;  // pole -> InvalidInputError

  // f = polynomial part + strictly proper remainder
  std::pair<Poly, RationalFunction> split_polynomial_part() const;

  // s_0..s_{count-1} with f(z) = sum s_k z^{-k-1} near infinity; requires
  // deg num < deg den.
  std::vector<Rat> series_at_infinity(int count) const;

 private:
  Poly num_, den_;
};

}  // namespace ncprob

#endif
