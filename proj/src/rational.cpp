#include "ncprob/rational.hpp"

#include <cmath>
#include <sstream>

namespace ncprob {

Rat rat_pow(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (exponent < 0) {
    if (base == 0) throw InvalidInputError("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(base, -exponent);
  }
  Rat acc(1);
  Rat b = base;
  long e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInputError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InvalidInputError("rational literal with zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInputError("bad rational literal: " + text);
  }
}

std::vector<Rat> rat_list_from_string(const std::string& csv) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(rat_from_string(item));
  if (out.empty()) throw InvalidInputError("empty rational list");
  return out;
}

std::string rat_list_to_string(const std::vector<Rat>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(values[i]);
  }
  return out;
}

Int int_floor(const Rat& x) {
  Int n = numerator(x);
  Int d = denominator(x);  // > 0 by cpp_rational normalization
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int int_ceil(const Rat& x) { return -int_floor(-x); }

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw InvalidInputError("simplest_rational_in: empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo < hi: any integer in range wins, else continued-fraction descent
  Int c = int_ceil(lo);
  if (Rat(c) <= hi) return Rat(c);
  Int fl = c - 1;  // floor(lo) == floor(hi)
  Rat inner = simplest_rational_in(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
  return Rat(fl) + Rat(1) / inner;
}

Rat approx_sqrt(const Rat& x, int digits) {
  if (x < 0) throw InvalidInputError("approx_sqrt of negative value");
  if (x == 0) return Rat(0);
  // integer sqrt of x * 10^(2*digits), rounded down
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int target = (numerator(x) * scale * scale) / denominator(x);
  Int r = boost::multiprecision::sqrt(target);
  return Rat(r, scale);
}

SqrtExt::SqrtExt(Rat a, Rat b, long long radicand) : a_(std::move(a)), b_(std::move(b)), rad_(radicand) {
  if (rad_ < 0) throw InvalidInputError("SqrtExt: negative radicand");
  long long root = std::llround(std::sqrt(static_cast<double>(rad_)));
  while (root * root > rad_) --root;
  while ((root + 1) * (root + 1) <= rad_) ++root;
  if (root * root == rad_) {  // perfect square: collapse
    a_ += b_ * root;
    b_ = 0;
    rad_ = 1;
  }
  if (b_ == 0) rad_ = 1;
}

const Rat& SqrtExt::as_rational() const {
  if (!is_rational()) throw InvalidInputError("SqrtExt value is irrational: " + to_string());
  return a_;
}

double SqrtExt::to_double() const {
  return ncprob::to_double(a_) + ncprob::to_double(b_) * std::sqrt(static_cast<double>(rad_));
}

std::string SqrtExt::to_string() const {
  if (is_rational()) return rat_to_string(a_);
  std::string out;
  if (a_ != 0) out += rat_to_string(a_);
  if (b_ > 0 && a_ != 0) out += "+";
  out += rat_to_string(b_) + "*sqrt(" + std::to_string(rad_) + ")";
  return out;
}

long long SqrtExt::common_radicand(const SqrtExt& rhs) const {
  if (b_ == 0) return rhs.rad_;
  if (rhs.b_ == 0) return rad_;
  if (rad_ != rhs.rad_)
    throw InvalidInputError("SqrtExt: mixing radicands " + std::to_string(rad_) + " and " +
                            std::to_string(rhs.rad_));
  return rad_;
}

SqrtExt& SqrtExt::operator+=(const SqrtExt& rhs) {
  rad_ = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  if (b_ == 0) rad_ = 1;
  return *this;
}

SqrtExt& SqrtExt::operator-=(const SqrtExt& rhs) {
  rad_ = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  if (b_ == 0) rad_ = 1;
  return *this;
}

SqrtExt& SqrtExt::operator*=(const SqrtExt& rhs) {
  long long rad = common_radicand(rhs);
  Rat a = a_ * rhs.a_ + b_ * rhs.b_ * rad;
  Rat b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  rad_ = (b_ == 0) ? 1 : rad;
  return *this;
}

bool operator==(const SqrtExt& lhs, const SqrtExt& rhs) {
  if (lhs.a_ != rhs.a_) return false;
  if (lhs.b_ == 0 && rhs.b_ == 0) return true;
  return lhs.b_ == rhs.b_ && lhs.rad_ == rhs.rad_;
}

}  // namespace ncprob
