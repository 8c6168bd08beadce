#ifndef NCPROB_POLYNOMIAL_HPP
#define NCPROB_POLYNOMIAL_HPP

#include <complex>
#include <utility>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

// Dense univariate polynomial over exact rationals, ascending coefficients,
// no trailing zeros (zero polynomial = empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);
  static Poly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;  // 0 beyond degree
  Rat lead() const;        // 0 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rat& s, const Poly& p);
  bool operator==(const Poly&) const = default;

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  Poly derivative() const;
  Poly monic() const;

  Rat eval(const Rat& x) const;
  std::complex<double> eval(std::complex<double> z) const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly poly_gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
// g, s, t with s*a + t*b = g (g monic unless both inputs zero).
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& modulus);
// Inverse of a modulo m; requires gcd(a, m) constant.
Poly poly_mod_inverse(const Poly& a, const Poly& modulus);
Poly square_free_part(const Poly& p);

// Power sums p_0..p_{count-1} of the roots of a monic polynomial (with
// multiplicity), by Newton's identities.
std::vector<Rat> root_power_sums(const Poly& monic, int count);

// Sum of f_num(r)/f_den(r) over the roots r of square-free B, computed as the
// trace of multiplication by f_num*f_den^{-1} in Q[x]/(B). f_den must be
// coprime to B.
Rat trace_over_roots(const Poly& f_num, const Poly& f_den, const Poly& B);

struct RatInterval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  Rat midpoint() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

// Interval extension of polynomial evaluation (Horner with endpoint cases).
RatInterval eval_on_interval(const Poly& p, const RatInterval& x);

// Sturm chain of a square-free polynomial; counts real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const Poly& square_free);
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // number of roots in (a, b]
  int count_in(const Rat& a, const Rat& b) const;
  int count_all() const;

 private:
  std::vector<Poly> chain_;
};

// Bound B with all real roots in (-B, B).
Rat cauchy_root_bound(const Poly& p);

// An isolated real root: either an exact rational (point interval) or a
// certified open enclosure with sign change at the endpoints.
struct IsolatedRoot {
  RatInterval interval;
  bool exact() const { return interval.is_point(); }
  const Rat& value() const { return interval.lo; }  // exact roots only
  double to_double() const;
};

// Isolates every real root of a square-free polynomial, refines enclosures to
// the given width, and identifies rational roots exactly (simplest-rational
// candidates verified by exact evaluation). Ascending order.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& square_free, const Rat& width);

}  // namespace ncprob

#endif
