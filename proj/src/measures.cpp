#include "ncprob/measures.hpp"

#include <algorithm>
#include <map>

#include "ncprob/errors.hpp"

namespace ncprob {

RealEnclosure::RealEnclosure(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw InvalidInputError("RealEnclosure: lo > hi");
}

const Rat& default_isolation_width() {
  static const Rat width = rat_pow(Rat(10), -30);
  return width;
}

namespace {

RationalFunction transform_of_points(const std::vector<Rat>& atoms, const std::vector<Rat>& weights) {
  // sum w_i/(z - b_i) over a common denominator
  Poly den(Rat(1));
  for (const auto& b : atoms) den = den * Poly(std::vector<Rat>{-b, Rat(1)});
  Poly num;
  for (size_t i = 0; i < atoms.size(); ++i) {
    Poly others(weights[i]);
    for (size_t j = 0; j < atoms.size(); ++j)
      if (j != i) others = others * Poly(std::vector<Rat>{-atoms[j], Rat(1)});
    num += others;
  }
  return RationalFunction(num, den);
}

}  // namespace

AtomicMeasure::AtomicMeasure(const std::vector<Rat>& atoms, const std::vector<Rat>& weights) {
  if (atoms.empty()) throw InvalidInputError("AtomicMeasure: needs at least one atom");
  if (atoms.size() != weights.size())
    throw InvalidInputError("AtomicMeasure: atom/weight count mismatch");
  std::vector<size_t> idx(atoms.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return atoms[a] < atoms[b]; });
  Rat total(0);
  std::vector<Rat> sorted_atoms, sorted_weights;
  for (size_t i = 0; i < idx.size(); ++i) {
    const Rat& b = atoms[idx[i]];
    const Rat& w = weights[idx[i]];
    if (i > 0 && b == sorted_atoms.back())
      throw InvalidInputError("AtomicMeasure: duplicate atom " + rat_to_string(b));
    if (w <= 0)
      throw InvalidInputError("AtomicMeasure: nonpositive weight at atom " + rat_to_string(b));
    total += w;
    sorted_atoms.push_back(b);
    sorted_weights.push_back(w);
  }
  if (total != 1)
    throw InvalidInputError("AtomicMeasure: weights sum to " + rat_to_string(total) + ", not 1");
  cauchy_ = transform_of_points(sorted_atoms, sorted_weights);
  for (size_t i = 0; i < sorted_atoms.size(); ++i) {
    atoms_.emplace_back(sorted_atoms[i]);
    weights_.emplace_back(sorted_weights[i]);
  }
}

AtomicMeasure AtomicMeasure::point_mass(const Rat& c) { return AtomicMeasure({c}, {Rat(1)}); }

AtomicMeasure AtomicMeasure::symmetric_bernoulli() {
  return AtomicMeasure({Rat(-1), Rat(1)}, {Rat(1, 2), Rat(1, 2)});
}

bool AtomicMeasure::exact() const {
  for (const auto& a : atoms_)
    if (!a.exact()) return false;
  for (const auto& w : weights_)
    if (!w.exact()) return false;
  return true;
}

std::vector<Rat> AtomicMeasure::exact_atoms() const {
  std::vector<Rat> out;
  for (const auto& a : atoms_) {
    if (!a.exact()) throw InvalidInputError("AtomicMeasure: atom is not exactly rational");
    out.push_back(a.lo);
  }
  return out;
}

std::vector<Rat> AtomicMeasure::exact_weights() const {
  std::vector<Rat> out;
  for (const auto& w : weights_) {
    if (!w.exact()) throw InvalidInputError("AtomicMeasure: weight is not exactly rational");
    out.push_back(w.lo);
  }
  return out;
}

MomentSeq AtomicMeasure::moments(int order) const { return moments_of_rational_G(cauchy_, order); }

nlohmann::ordered_json AtomicMeasure::to_json() const {
  nlohmann::ordered_json j;
  j["atoms"] = nlohmann::ordered_json::array();
  j["weights"] = nlohmann::ordered_json::array();
  for (const auto& a : atoms_) j["atoms"].push_back(rat_to_string(a.midpoint()));
  for (const auto& w : weights_) j["weights"].push_back(rat_to_string(w.midpoint()));
  return j;
}

AtomicMeasure AtomicMeasure::from_json(const nlohmann::json& j) {
  if (!j.contains("atoms") || !j.contains("weights"))
    throw InvalidInputError("measure JSON needs \"atoms\" and \"weights\"");
  std::vector<Rat> atoms, weights;
  for (const auto& a : j.at("atoms")) atoms.push_back(rat_from_string(a.get<std::string>()));
  for (const auto& w : j.at("weights")) weights.push_back(rat_from_string(w.get<std::string>()));
  return AtomicMeasure(atoms, weights);
}

RationalFunction cauchy_of_atomic(const AtomicMeasure& mu) { return mu.cauchy(); }

AtomicMeasure measure_from_rational_G(const RationalFunction& G, const Rat& isolation_width) {
  if (G.is_zero()) throw InvalidInputError("measure_from_rational_G: zero function");
  const Poly& num = G.num();
  const Poly& den = G.den();
  if (num.degree() != den.degree() - 1)
    throw InvalidInputError("measure_from_rational_G: need deg(num) = deg(den) - 1");
  if (num.lead() != 1)
    throw InvalidInputError("measure_from_rational_G: G must behave like 1/z at infinity");

  Poly dden = den.derivative();
  if (poly_gcd(den, dden).degree() > 0)
    throw NotAMeasureError("measure_from_rational_G: multiple pole");
  SturmChain chain(den);
  if (chain.count_all() != den.degree())
    throw NotAMeasureError("measure_from_rational_G: complex pole");

  auto roots = isolate_real_roots(den, isolation_width);
  AtomicMeasure out;
  out.cauchy_ = G;
  Rat exact_weight_total(0);
  bool all_exact = true;
  for (const auto& root : roots) {
    if (root.exact()) {
      const Rat& p = root.value();
      Rat w = num.eval(p) / dden.eval(p);
      if (w <= 0)
        throw NotAMeasureError("measure_from_rational_G: nonpositive residue at pole " +
                               rat_to_string(p));
      out.atoms_.emplace_back(p);
      out.weights_.emplace_back(w);
      exact_weight_total += w;
    } else {
      all_exact = false;
      // certify the residue's sign, refining until numerator and derivative
      // are sign-definite on the enclosure
      RatInterval iv = root.interval;
      for (;;) {
        RatInterval n_range = eval_on_interval(num, iv);
        RatInterval d_range = eval_on_interval(dden, iv);
        bool n_def = n_range.lo > 0 || n_range.hi < 0;
        bool d_def = d_range.lo > 0 || d_range.hi < 0;
        if (n_def && d_def) {
          Rat c1 = n_range.lo / d_range.lo, c2 = n_range.lo / d_range.hi;
          Rat c3 = n_range.hi / d_range.lo, c4 = n_range.hi / d_range.hi;
          Rat wlo = std::min(std::min(c1, c2), std::min(c3, c4));
          Rat whi = std::max(std::max(c1, c2), std::max(c3, c4));
          if (whi <= 0)
            throw NotAMeasureError("measure_from_rational_G: nonpositive residue");
          if (wlo > 0) {
            out.atoms_.emplace_back(iv.lo, iv.hi);
            out.weights_.emplace_back(RealEnclosure(wlo, whi));
            break;
          }
        }
        // bisect, keeping the half with the sign change
        Rat mid = iv.midpoint();
        Rat at_mid = den.eval(mid);
        if (at_mid == 0) {
          // the root turned out rational after all
          Rat w = num.eval(mid) / dden.eval(mid);
          if (w <= 0) throw NotAMeasureError("measure_from_rational_G: nonpositive residue");
          out.atoms_.emplace_back(mid);
          out.weights_.emplace_back(w);
          exact_weight_total += w;
          break;
        }
        if ((den.eval(iv.lo) > 0) != (at_mid > 0))
          iv.hi = mid;
        else
          iv.lo = mid;
      }
    }
  }
  if (all_exact && exact_weight_total != 1)
    throw NotAMeasureError("measure_from_rational_G: residues sum to " +
                           rat_to_string(exact_weight_total) + ", not 1");
  return out;
}

MomentSeq moments_of_rational_G(const RationalFunction& G, int order) {
  if (order < 1) throw InvalidInputError("moments_of_rational_G: order must be >= 1");
  if (G.is_zero() || G.num().degree() != G.den().degree() - 1 || G.num().lead() != 1)
    throw InvalidInputError("moments_of_rational_G: G must behave like 1/z at infinity");
  auto s = G.series_at_infinity(order + 1);  // s[0] = m_0 = 1 by the lead check
  return MomentSeq(std::vector<Rat>(s.begin() + 1, s.end()));
}

namespace {

RationalFunction self_energy(const AtomicMeasure& mu) {
  // K = z - F = z - 1/G
  return RationalFunction::x() - mu.cauchy().reciprocal();
}

}  // namespace

AtomicMeasure boolean_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2) {
  RationalFunction K = self_energy(mu1) + self_energy(mu2);
  RationalFunction F = RationalFunction::x() - K;
  try {
    return measure_from_rational_G(F.reciprocal());
  } catch (const NotAMeasureError& e) {
    throw InternalInvariantError(std::string("boolean_convolve produced a non-measure: ") +
                                 e.what());
  }
}

AtomicMeasure monotone_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2) {
  RationalFunction F1 = mu1.cauchy().reciprocal();
  RationalFunction F2 = mu2.cauchy().reciprocal();
  RationalFunction F = F1.compose(F2);
  try {
    return measure_from_rational_G(F.reciprocal());
  } catch (const NotAMeasureError& e) {
    throw InternalInvariantError(std::string("monotone_convolve produced a non-measure: ") +
                                 e.what());
  }
}

AtomicMeasure classical_convolve(const AtomicMeasure& mu1, const AtomicMeasure& mu2) {
  auto a1 = mu1.exact_atoms();
  auto w1 = mu1.exact_weights();
  auto a2 = mu2.exact_atoms();
  auto w2 = mu2.exact_weights();
  std::map<Rat, Rat> sum;
  for (size_t i = 0; i < a1.size(); ++i)
    for (size_t j = 0; j < a2.size(); ++j) sum[a1[i] + a2[j]] += w1[i] * w2[j];
  std::vector<Rat> atoms, weights;
  for (auto& [b, w] : sum) {
    atoms.push_back(b);
    weights.push_back(w);
  }
  return AtomicMeasure(atoms, weights);
}

}  // namespace ncprob
