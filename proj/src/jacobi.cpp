#include "ncprob/jacobi.hpp"

#include <cmath>

#include "ncprob/errors.hpp"

namespace ncprob {

void JacobiParams::validate() const {
  if (beta.empty()) throw InvalidInputError("JacobiParams: needs at least one beta level");
  size_t b = beta.size(), g = gamma.size();
  if (g + 1 != b && g != b)
    throw InvalidInputError("JacobiParams: gamma count must be |beta| or |beta|-1");
  for (size_t i = 0; i < g; ++i) {
    if (gamma[i] < 0) throw InvalidInputError("JacobiParams: negative gamma");
    if (gamma[i] == 0 && i + 1 != g)
      throw InvalidInputError("JacobiParams: interior zero gamma");
  }
  if (!gamma.empty() && gamma.back() == 0 && g != b)
    throw InvalidInputError("JacobiParams: terminating data must pair each beta with a gamma");
}

bool JacobiParams::terminated() const {
  validate();
  if (beta.size() == 1 && gamma.empty()) return true;
  return !gamma.empty() && gamma.back() == 0;
}

int JacobiParams::rank() const {
  if (!terminated()) throw InvalidInputError("JacobiParams: rank of non-terminating data");
  return gamma.empty() ? 1 : static_cast<int>(gamma.size());
}

nlohmann::ordered_json JacobiParams::to_json() const {
  nlohmann::ordered_json j;
  j["beta"] = nlohmann::ordered_json::array();
  j["gamma"] = nlohmann::ordered_json::array();
  for (const auto& b : beta) j["beta"].push_back(rat_to_string(b));
  for (const auto& g : gamma) j["gamma"].push_back(rat_to_string(g));
  return j;
}

JacobiParams JacobiParams::from_json(const nlohmann::json& j) {
  if (!j.contains("beta") || !j.contains("gamma"))
    throw InvalidInputError("Jacobi JSON needs \"beta\" and \"gamma\"");
  JacobiParams out;
  for (const auto& b : j.at("beta")) out.beta.push_back(rat_from_string(b.get<std::string>()));
  for (const auto& g : j.at("gamma")) out.gamma.push_back(rat_from_string(g.get<std::string>()));
  out.validate();
  return out;
}

namespace {

// sigma[k][l] = integral of P_k(x) x^l; the recursion peels one level per k.
struct Orthogonalizer {
  std::vector<Rat> m;  // m[0] = 1, m[1..M]
  std::vector<std::vector<Rat>> sigma;
  std::vector<Rat> beta, gamma;
  bool terminated = false;

  explicit Orthogonalizer(const MomentSeq& ms) {
    m.push_back(Rat(1));
    for (const auto& v : ms.values) m.push_back(v);
    sigma.push_back(m);  // row 0
  }

  int order() const { return static_cast<int>(m.size()) - 1; }

  // Extends rows/levels until beta has nb entries and gamma ng entries; stops
  // early on termination. Requirements on the moment order were checked by
  // the caller.
  void run(int nb, int ng) {
    beta.push_back(m[1]);  // beta_0
    for (int k = 1; !terminated && (static_cast<int>(gamma.size()) < ng ||
                                    static_cast<int>(beta.size()) < nb);
         ++k) {
      // row k needs sigma_{k-1, l} for l <= M-k+1
      const auto& prev = sigma[k - 1];
      std::vector<Rat> row(m.size(), Rat(0));
      int max_l = order() - k;
      for (int l = k; l <= max_l; ++l) {
        Rat v = prev[l + 1] - beta[k - 1] * prev[l];
        if (k >= 2) v -= gamma[k - 2] * sigma[k - 2][l];
        row[l] = v;
      }
      sigma.push_back(std::move(row));
      if (static_cast<int>(gamma.size()) < ng) {
        Rat norm = sigma[k][k];
        Rat prev_norm = sigma[k - 1][k - 1];
        if (norm < 0)
          throw InvalidMomentSequenceError(
              "not a probability moment sequence (negative Gram pivot at level " +
              std::to_string(k) + ")");
        gamma.push_back(norm / prev_norm);
        if (norm == 0) {
          terminated = true;
          // drop betas beyond the rank
          beta.resize(gamma.size());
          break;
        }
      }
      if (static_cast<int>(beta.size()) < nb)
        beta.push_back(sigma[k][k + 1] / sigma[k][k] -
                       sigma[k - 1][k] / sigma[k - 1][k - 1]);
    }
  }
};

}  // namespace

JacobiParams jacobi_from_moments(const MomentSeq& m, int beta_levels, int gamma_levels) {
  int M = m.order();
  if (beta_levels < 1) throw InvalidInputError("jacobi_from_moments: need at least one beta level");
  if (gamma_levels < beta_levels - 1 || gamma_levels > beta_levels)
    throw InvalidInputError(
        "jacobi_from_moments: gamma levels must be beta levels or one less (beta_k needs the "
        "level-k Gram pivot)");
  if (2 * beta_levels - 1 > M)
    throw OrderLimitError("jacobi_from_moments: beta_" + std::to_string(beta_levels - 1) +
                          " needs moments of order " + std::to_string(2 * beta_levels - 1));
  if (2 * gamma_levels > M)
    throw OrderLimitError("jacobi_from_moments: gamma_" + std::to_string(gamma_levels - 1) +
                          " needs moments of order " + std::to_string(2 * gamma_levels));
  Orthogonalizer ortho(m);
  ortho.run(beta_levels, gamma_levels);
  JacobiParams J{std::move(ortho.beta), std::move(ortho.gamma)};
  J.validate();
  if (J.terminated()) {
    // degenerate Gram data pins every remaining moment; verify the tail
    MomentSeq expected = moments_from_jacobi(J, M);
    if (!(expected == m))
      throw InvalidMomentSequenceError(
          "not a probability moment sequence (moments continue past the detected finite support)");
  }
  return J;
}

JacobiParams jacobi_from_moments(const MomentSeq& m) {
  int M = m.order();
  if (M < 1) throw InvalidInputError("jacobi_from_moments: empty moment sequence");
  int n = M >= 2 ? (M - 2) / 2 : 0;
  int nb = n + 1;
  int ng = M >= 2 ? n : 0;
  bool probe = 2 * (ng + 1) <= M;
  JacobiParams J = jacobi_from_moments(m, nb, probe ? ng + 1 : ng);
  if (probe && !J.terminated() && static_cast<int>(J.gamma.size()) == ng + 1) {
    J.gamma.pop_back();  // probe found a positive gamma: keep the default shape
  }
  return J;
}

RationalFunction rational_G_from_jacobi(const JacobiParams& J) {
  J.validate();
  std::vector<Rat> betas = J.beta;
  std::vector<Rat> gammas = J.gamma;
  if (J.terminated()) {
    int r = J.rank();
    betas.resize(r);
    gammas.resize(r - 1);  // drop the trailing zero
  } else if (gammas.size() == betas.size()) {
    betas.push_back(Rat(0));  // point-mass tail so the last gamma participates
  }
  // bottom-up: G_j = 1/(x - beta_j - gamma_j * G_{j+1})
  RationalFunction acc;  // zero tail
  for (size_t j = betas.size(); j-- > 0;) {
    RationalFunction den =
        RationalFunction::x() - RationalFunction::constant(betas[j]) -
        (j < gammas.size() ? RationalFunction::constant(gammas[j]) * acc : RationalFunction());
    acc = den.reciprocal();
  }
  return acc;
}

MomentSeq moments_from_jacobi(const JacobiParams& J, int order) {
  if (order < 1) throw InvalidInputError("moments_from_jacobi: order must be >= 1");
  J.validate();
  if (!J.terminated()) {
    size_t b = J.beta.size(), g = J.gamma.size();
    int cap = (g + 1 == b) ? static_cast<int>(2 * g + 1) : static_cast<int>(2 * g);
    if (order > cap)
      throw OrderLimitError("moments_from_jacobi: truncated data determines moments only up to order " +
                            std::to_string(cap));
  }
  return moments_of_rational_G(rational_G_from_jacobi(J), order);
}

std::optional<int> finite_support_rank(const JacobiParams& J) {
  J.validate();
  if (J.beta.size() == 1 && J.gamma.empty()) return 1;
  for (size_t i = 0; i < J.gamma.size(); ++i)
    if (J.gamma[i] == 0) return static_cast<int>(i) + 1;
  return std::nullopt;
}

AtomicMeasure atomic_from_terminating_jacobi(const JacobiParams& J, const Rat& isolation_width) {
  if (!J.terminated())
    throw InvalidInputError("atomic_from_terminating_jacobi: parameters do not terminate");
  return measure_from_rational_G(rational_G_from_jacobi(J), isolation_width);
}

std::complex<double> cauchy_cf_eval(const JacobiParams& J, std::complex<double> z,
                                    std::optional<std::complex<double>> tail) {
  J.validate();
  if (z.imag() < 1.0) throw DomainError("cauchy_cf_eval: needs Im z >= 1");
  size_t b = J.beta.size(), g = J.gamma.size();
  std::complex<double> acc(0.0, 0.0);
  if (tail.has_value()) {
    if (g != b)
      throw InvalidInputError(
          "cauchy_cf_eval: a tail value needs a gamma for every beta level");
    if (tail->imag() > 1e-12 || std::abs(*tail) > 1.0 + 1e-12)
      throw DomainError("cauchy_cf_eval: tail is not a plausible Cauchy-transform value");
    acc = to_double(J.gamma[b - 1]) * (*tail);
  } else if (g == b) {
    acc = 0.0;  // pure truncation: the bottom gamma multiplies a zero tail
  }
  std::complex<double> val(0.0, 0.0);
  for (size_t j = b; j-- > 0;) {
    std::complex<double> den = z - to_double(J.beta[j]) - acc;
    val = 1.0 / den;
    if (j > 0) acc = to_double(J.gamma[j - 1]) * val;
  }
  return val;
}

}  // namespace ncprob
