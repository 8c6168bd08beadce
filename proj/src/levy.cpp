#include "ncprob/levy.hpp"

#include <algorithm>

#include "ncprob/errors.hpp"

namespace ncprob {

FiniteKernelMeasure FiniteKernelMeasure::from_points(const std::vector<Rat>& atoms,
                                                     const std::vector<Rat>& masses) {
  if (atoms.size() != masses.size())
    throw InvalidInputError("FiniteKernelMeasure: atom/mass count mismatch");
  FiniteKernelMeasure out;
  std::vector<size_t> idx(atoms.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return atoms[a] < atoms[b]; });
  RationalFunction kernel;
  for (size_t k = 0; k < idx.size(); ++k) {
    const Rat& b = atoms[idx[k]];
    const Rat& m = masses[idx[k]];
    if (m < 0) throw InvalidInputError("FiniteKernelMeasure: negative mass");
    if (m == 0) continue;
    if (!out.atoms_.empty() && out.atoms_.back().lo == b)
      throw InvalidInputError("FiniteKernelMeasure: duplicate atom");
    out.atoms_.emplace_back(b);
    out.masses_.emplace_back(m);
    out.first_moment_ += m * b;
    out.total_mass_ += m;
    kernel = kernel + RationalFunction(Poly(m * (Rat(1) + b * b)), Poly(std::vector<Rat>{-b, Rat(1)}));
  }
  out.kernel_ = kernel;
  return out;
}

CumulantSeq levy_pair_to_cumulants(const LevyPair& pair, Flavor flavor, int order) {
  if (order < 1) throw InvalidInputError("levy_pair_to_cumulants: order must be >= 1");
  std::vector<Rat> values;
  values.reserve(order);
  values.push_back(pair.gamma + pair.sigma.first_moment());
  if (order > 1) {
    std::vector<Rat> tail;
    if (pair.sigma.kernel().is_zero())
      tail.assign(order - 1, Rat(0));
    else
      tail = pair.sigma.kernel().series_at_infinity(order - 1);
    for (int n = 2; n <= order; ++n) values.push_back(tail[n - 2]);
  }
  return CumulantSeq(flavor, std::move(values));
}

CumulantSeq compound_poisson_cumulants(const Rat& lambda, const AtomicMeasure& nu, Flavor flavor,
                                       int order) {
  if (lambda <= 0) throw InvalidInputError("compound_poisson_cumulants: rate must be positive");
  MomentSeq jumps = nu.moments(order);
  std::vector<Rat> values(jumps.values);
  for (auto& v : values) v *= lambda;
  return CumulantSeq(flavor, std::move(values));
}

LevyPair levy_pair_from_compound_poisson(const Rat& lambda, const AtomicMeasure& nu) {
  if (lambda <= 0) throw InvalidInputError("levy_pair_from_compound_poisson: rate must be positive");
  auto atoms = nu.exact_atoms();
  auto weights = nu.exact_weights();
  std::vector<Rat> sigma_atoms, sigma_masses;
  Rat gamma(0);
  for (size_t i = 0; i < atoms.size(); ++i) {
    const Rat& b = atoms[i];
    Rat scaled = lambda * weights[i] / (Rat(1) + b * b);
    gamma += scaled * b;
    if (b != 0) {
      sigma_atoms.push_back(b);
      sigma_masses.push_back(scaled * b * b);
    }
  }
  return LevyPair{gamma, FiniteKernelMeasure::from_points(sigma_atoms, sigma_masses)};
}

LevyPair boolean_levy_pair(const AtomicMeasure& mu) {
  RationalFunction K = RationalFunction::x() - mu.cauchy().reciprocal();
  auto [alpha_poly, H] = K.split_polynomial_part();
  if (alpha_poly.degree() > 0)
    throw InternalInvariantError("boolean_levy_pair: self-energy grows at infinity");
  Rat alpha = alpha_poly.coeff(0);

  FiniteKernelMeasure sigma;
  if (!H.is_zero()) {
    const Poly& A = H.num();
    const Poly& B = H.den();
    if (poly_gcd(B, B.derivative()).degree() > 0)
      throw InternalInvariantError("boolean_levy_pair: multiple pole in the self-energy");
    SturmChain chain(B);
    if (chain.count_all() != B.degree())
      throw InternalInvariantError("boolean_levy_pair: nonreal pole in the self-energy");

    Poly dB = B.derivative();
    Poly one_plus_sq(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    sigma.kernel_ = H;
    sigma.first_moment_ = trace_over_roots(A * Poly::x(), dB * one_plus_sq, B);
    sigma.total_mass_ = trace_over_roots(A, dB * one_plus_sq, B);

    auto roots = isolate_real_roots(B, default_isolation_width());
    for (const auto& root : roots) {
      if (root.exact()) {
        const Rat& p = root.value();
        Rat rho = A.eval(p) / dB.eval(p);
        if (rho <= 0)
          throw InternalInvariantError("boolean_levy_pair: nonpositive residue at pole " +
                                       rat_to_string(p));
        sigma.atoms_.emplace_back(p);
        sigma.masses_.emplace_back(rho / (Rat(1) + p * p));
      } else {
        RatInterval iv = root.interval;
        for (;;) {
          RatInterval a_range = eval_on_interval(A, iv);
          RatInterval d_range = eval_on_interval(dB, iv);
          if ((a_range.lo > 0 || a_range.hi < 0) && (d_range.lo > 0 || d_range.hi < 0)) {
            bool positive = (a_range.lo > 0) == (d_range.lo > 0);
            if (!positive)
              throw InternalInvariantError("boolean_levy_pair: nonpositive residue");
            Rat c1 = a_range.lo / d_range.lo, c2 = a_range.lo / d_range.hi;
            Rat c3 = a_range.hi / d_range.lo, c4 = a_range.hi / d_range.hi;
            Rat rho_lo = std::min(std::min(c1, c2), std::min(c3, c4));
            Rat rho_hi = std::max(std::max(c1, c2), std::max(c3, c4));
            Rat sq_lo = iv.lo * iv.lo, sq_hi = iv.hi * iv.hi;
            Rat sq_min = (iv.lo < 0 && iv.hi > 0) ? Rat(0) : std::min(sq_lo, sq_hi);
            Rat sq_max = std::max(sq_lo, sq_hi);
            sigma.atoms_.emplace_back(iv.lo, iv.hi);
            sigma.masses_.emplace_back(
                RealEnclosure(rho_lo / (Rat(1) + sq_max), rho_hi / (Rat(1) + sq_min)));
            break;
          }
          Rat mid = iv.midpoint();
          if (B.eval(mid) == 0) {
            Rat rho = A.eval(mid) / dB.eval(mid);
            if (rho <= 0) throw InternalInvariantError("boolean_levy_pair: nonpositive residue");
            sigma.atoms_.emplace_back(mid);
            sigma.masses_.emplace_back(rho / (Rat(1) + mid * mid));
            break;
          }
          if ((B.eval(iv.lo) > 0) != (B.eval(mid) > 0))
            iv.hi = mid;
          else
            iv.lo = mid;
        }
      }
    }
  }
  return LevyPair{alpha - sigma.first_moment_, std::move(sigma)};
}

}  // namespace ncprob
