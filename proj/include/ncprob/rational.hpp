#ifndef NCPROB_RATIONAL_HPP
#define NCPROB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ncprob/errors.hpp"

namespace ncprob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.template convert_to<double>(); }

Rat rat_pow(const Rat& base, long exponent);

// "p" when integral, "p/q" otherwise. Round-trips through rat_from_string.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& text);

std::vector<Rat> rat_list_from_string(const std::string& csv);
std::string rat_list_to_string(const std::vector<Rat>& values);

Int int_floor(const Rat& x);
Int int_ceil(const Rat& x);

// Rational r with the smallest denominator satisfying lo <= r <= hi.
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

// Rational s with |s - sqrt(x)| <= 10^-digits, x >= 0.
Rat approx_sqrt(const Rat& x, int digits);

// Element a + b*sqrt(rad) of the quadratic extension Q[sqrt(rad)], rad >= 0.
// Perfect-square radicands collapse into the rational part, so values produced
// with rad in {0, 1, 4, 9, ...} compare equal to plain rationals. Mixing two
// irrational radicands is rejected.
class SqrtExt {
 public:
  SqrtExt() : rad_(1) {}
  SqrtExt(Rat rational) : a_(std::move(rational)), rad_(1) {}  // NOLINT(google-explicit-constructor)
  SqrtExt(Rat a, Rat b, long long radicand);

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  long long radicand() const { return rad_; }
  bool is_rational() const { return b_ == 0; }
  // Throws InvalidInputError when the radical part is nonzero.
  const Rat& as_rational() const;
  double to_double() const;
  std::string to_string() const;  // "p/q" or "p/q+r/s*sqrt(n)"

  SqrtExt& operator+=(const SqrtExt& rhs);
  SqrtExt& operator-=(const SqrtExt& rhs);
  SqrtExt& operator*=(const SqrtExt& rhs);
  friend SqrtExt operator+(SqrtExt lhs, const SqrtExt& rhs) { return lhs += rhs; }
  friend SqrtExt operator-(SqrtExt lhs, const SqrtExt& rhs) { return lhs -= rhs; }
  friend SqrtExt operator*(SqrtExt lhs, const SqrtExt& rhs) { return lhs *= rhs; }
  friend SqrtExt operator*(const Rat& s, SqrtExt rhs) { return rhs *= SqrtExt(s); }
  friend bool operator==(const SqrtExt& lhs, const SqrtExt& rhs);

 private:
  long long common_radicand(const SqrtExt& rhs) const;

  Rat a_;
  Rat b_;
  long long rad_;
};

}  // namespace ncprob

#endif
