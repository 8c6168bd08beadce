#include "ncprob/rational_function.hpp"

#include "ncprob/errors.hpp"

namespace ncprob {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInputError("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rat scale = Rat(1) / den_.lead();
  num_ = scale * num_;
  den_ = scale * den_;
}

RationalFunction RationalFunction::constant(const Rat& c) { return RationalFunction(Poly(c), Poly(Rat(1))); }

RationalFunction RationalFunction::x() { return RationalFunction(Poly::x(), Poly(Rat(1))); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw InvalidInputError("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw InvalidInputError("RationalFunction: reciprocal of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  // N(p/q)/D(p/q) with the common q^d cleared
  const Poly& p = inner.num_;
  const Poly& q = inner.den_;
  int d = std::max(num_.degree(), den_.degree());
  if (d < 0) return RationalFunction();
  auto lift = [&](const Poly& f) {
    Poly acc;
    Poly p_pow(Rat(1));
    std::vector<Poly> q_pows(d + 1, Poly(Rat(1)));
    for (int i = 1; i <= d; ++i) q_pows[i] = q_pows[i - 1] * q;
    for (int k = 0; k <= f.degree(); ++k) {
      acc += f.coeff(k) * (p_pow * q_pows[d - k]);
      p_pow = p_pow * p;
    }
    return acc;
  };
  return RationalFunction(lift(num_), lift(den_));
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
  return num_.eval(z) / den_.eval(z);
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw InvalidInputError("RationalFunction: evaluation at a pole");
  return num_.eval(x) / d;
}

std::pair<Poly, RationalFunction> RationalFunction::split_polynomial_part() const {
  auto [q, r] = divmod(num_, den_);
  return {q, RationalFunction(r, den_)};
}

std::vector<Rat> RationalFunction::series_at_infinity(int count) const {
  if (count < 0) throw InvalidInputError("series_at_infinity: negative count");
  std::vector<Rat> s;
  s.reserve(count);
  if (is_zero()) {
    s.assign(count, Rat(0));
    return s;
  }
  int dn = num_.degree();
  int dd = den_.degree();
  if (dn >= dd)
    throw InvalidInputError("series_at_infinity: function does not vanish at infinity");
  // reversed coefficients: f(1/u)*u = u * nt(u)/dt(u) with dt(0) = lead(den) != 0
  std::vector<Rat> nt(dd, Rat(0));
  for (int k = 0; k < dd; ++k) nt[k] = num_.coeff(dd - 1 - k);
  std::vector<Rat> dt(dd + 1, Rat(0));
  for (int k = 0; k <= dd; ++k) dt[k] = den_.coeff(dd - k);
  for (int k = 0; k < count; ++k) {
    Rat v = k < static_cast<int>(nt.size()) ? nt[k] : Rat(0);
    for (int j = 0; j < k; ++j) {
      int idx = k - j;
      if (idx <= dd) v -= s[j] * dt[idx];
    }
    s.push_back(v / dt[0]);
  }
  return s;
}

}  // namespace ncprob
