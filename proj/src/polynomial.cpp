#include "ncprob/polynomial.hpp"

#include <algorithm>

#include "ncprob/errors.hpp"

namespace ncprob {

Poly::Poly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[i];
}

Rat Poly::lead() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  Poly out = p;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw InvalidInputError("polynomial division by zero");
  Poly rem = num;
  if (num.degree() < den.degree()) return {Poly(), rem};
  std::vector<Rat> quo(num.degree() - den.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rat factor = rem.lead() / den.lead();
    quo[shift] = factor;
    std::vector<Rat> sub(shift + den.degree() + 1, Rat(0));
    for (int i = 0; i <= den.degree(); ++i) sub[shift + i] = factor * den.coeff(i);
    rem -= Poly(std::move(sub));
  }
  return {Poly(std::move(quo)), rem};
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return (Rat(1) / lead()) * (*this);
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + to_double(coeffs_[i]);
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();  // monic keeps coefficient growth down
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0(Rat(1)), s1;
  Poly t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {Poly(), s0, t0};
  Rat scale = Rat(1) / r0.lead();
  return {scale * r0, scale * s0, scale * t0};
}

Poly poly_mod(const Poly& a, const Poly& modulus) { return divmod(a, modulus).second; }

Poly poly_mod_inverse(const Poly& a, const Poly& modulus) {
  auto [g, s, t] = poly_xgcd(a, modulus);
  (void)t;
  if (g.degree() != 0)
    throw InvalidInputError("poly_mod_inverse: operand shares a factor with the modulus");
  return (Rat(1) / g.coeff(0)) * poly_mod(s, modulus);
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return divmod(p, g).first.monic();
}

std::vector<Rat> root_power_sums(const Poly& monic, int count) {
  int d = monic.degree();
  if (d < 0 || monic.lead() != 1)
    throw InvalidInputError("root_power_sums: polynomial must be monic");
  // e_i = (-1)^i * coeff(d-i)
  std::vector<Rat> e(d + 1);
  e[0] = Rat(1);
  for (int i = 1; i <= d; ++i) e[i] = (i % 2 ? Rat(-1) : Rat(1)) * monic.coeff(d - i);
  std::vector<Rat> p;
  p.reserve(count);
  for (int k = 0; k < count; ++k) {
    if (k == 0) {
      p.push_back(Rat(d));
      continue;
    }
    Rat pk(0);
    for (int i = 1; i < k && i <= d; ++i)
      pk += (i % 2 ? Rat(1) : Rat(-1)) * e[i] * p[k - i];
    if (k <= d) pk += (k % 2 ? Rat(1) : Rat(-1)) * Rat(k) * e[k];
    p.push_back(pk);
  }
  return p;
}

Rat trace_over_roots(const Poly& f_num, const Poly& f_den, const Poly& B) {
  if (B.degree() < 1) throw InvalidInputError("trace_over_roots: modulus must be nonconstant");
  Poly monic = B.monic();
  Poly f = poly_mod(poly_mod(f_num, monic) * poly_mod_inverse(f_den, monic), monic);
  auto sums = root_power_sums(monic, monic.degree());
  Rat trace(0);
  for (int k = 0; k <= f.degree(); ++k) trace += f.coeff(k) * sums[k];
  return trace;
}

RatInterval eval_on_interval(const Poly& p, const RatInterval& x) {
  RatInterval acc{Rat(0), Rat(0)};
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    // acc * x, all endpoint products
    Rat c1 = acc.lo * x.lo, c2 = acc.lo * x.hi, c3 = acc.hi * x.lo, c4 = acc.hi * x.hi;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    acc.lo = lo + p.coeffs()[i];
    acc.hi = hi + p.coeffs()[i];
  }
  return acc;
}

SturmChain::SturmChain(const Poly& square_free) {
  if (square_free.is_zero()) throw InvalidInputError("SturmChain of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(square_free.derivative());
  while (chain_.back().degree() > 0) {
    Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;  // input not square-free; chain still valid for counting distinct roots
    // normalize by a positive scalar to control growth
    Rat scale = Rat(1) / (r.lead() > 0 ? r.lead() : -r.lead());
    chain_.push_back(scale * (-r));
  }
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_of(p.eval(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sign_of(p.lead());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sign_of(p.lead()));
  return count_variations(signs);
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

Rat cauchy_root_bound(const Poly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat lead = p.lead();
  if (lead < 0) lead = -lead;
  Rat max(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat c = p.coeff(i);
    if (c < 0) c = -c;
    if (c > max) max = c;
  }
  return Rat(1) + max / lead;
}

double IsolatedRoot::to_double() const {
  return ncprob::to_double(interval.midpoint());
}

namespace {

// Shrink an enclosure with a sign change until the root is identified as an
// exact rational or the width target is met.
IsolatedRoot sharpen(const Poly& p, Rat lo, Rat hi, const Rat& width) {
  int sign_lo = sign_of(p.eval(lo));
  for (;;) {
    Rat cand = simplest_rational_in(lo, hi);
    if (p.eval(cand) == 0) return {{cand, cand}};
    if (hi - lo <= width) break;
    Rat mid = (lo + hi) / 2;
    int sign_mid = sign_of(p.eval(mid));
    if (sign_mid == 0) return {{mid, mid}};
    if (sign_mid == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {{lo, hi}};
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Poly& square_free, const Rat& width) {
  if (square_free.is_zero())
    throw InvalidInputError("isolate_real_roots: zero polynomial");
  if (width <= 0) throw InvalidInputError("isolate_real_roots: width must be positive");
  std::vector<IsolatedRoot> roots;
  if (square_free.degree() < 1) return roots;

  SturmChain chain(square_free);
  Rat bound = cauchy_root_bound(square_free);
  // stack of (a, b] with cached variation counts
  struct Span {
    Rat a, b;
    int va, vb;
  };
  std::vector<Span> work{{-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    int count = s.va - s.vb;
    if (count == 0) continue;
    if (count == 1) {
      if (square_free.eval(s.b) == 0) {
        roots.push_back({{s.b, s.b}});
        continue;
      }
      // make the left endpoint sign-definite while keeping the root inside
      Rat a = s.a;
      if (square_free.eval(a) == 0) {
        Rat step = s.b - s.a;
        for (;;) {
          step /= 2;
          Rat cand = s.a + step;
          if (square_free.eval(cand) != 0 && chain.variations_at(cand) - s.vb == 1) {
            a = cand;
            break;
          }
        }
      }
      roots.push_back(sharpen(square_free, a, s.b, width));
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    int vm = chain.variations_at(mid);
    work.push_back({s.a, mid, s.va, vm});
    work.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.interval.lo < y.interval.lo; });
  return roots;
}

}  // namespace ncprob
