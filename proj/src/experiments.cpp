#include "ncprob/experiments.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

std::string format_double(double x, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

Rat sqrtext_to_rat_approx(const SqrtExt& v, int digits) {
  if (v.is_rational()) return v.rational_part();
  return v.rational_part() + v.radical_part() * approx_sqrt(Rat(v.radicand()), digits);
}

// Largest even order <= limit at which the prefix is a valid probability
// moment sequence with all Jacobi levels through gamma_{K/2-1}; rethrows the
// deepest failure if even order 2 does not work.
int max_valid_even_order(const MomentSeq& m, int limit) {
  int K = std::min(limit, m.order());
  if (K % 2) --K;
  for (; K >= 2; K -= 2) {
    try {
      (void)jacobi_from_moments(m.truncated(K), K / 2, K / 2);
      return K;
    } catch (const InvalidMomentSequenceError&) {
      if (K == 2) throw;
    }
  }
  throw InvalidInputError("moment sequence too short for a distance representation");
}

// Both laws evaluated through the same route: truncated Jacobi data of the
// same even order, continued fraction with a point-mass tail.
double equal_depth_distance(const MomentSeq& member, const MomentSeq& target, int order,
                            const GridSpec& grid) {
  return weak_distance(LawDescriptor::from_moments(member.truncated(order)),
                       LawDescriptor::from_moments(target.truncated(order)), grid);
}

int common_depth(const std::vector<MomentSeq>& members, const MomentSeq& target, int order) {
  int depth = max_valid_even_order(target, order);
  for (const auto& m : members) depth = std::min(depth, max_valid_even_order(m, order));
  return depth;
}

std::vector<SqrtExt> lift_rational(const std::vector<Rat>& values) {
  return std::vector<SqrtExt>(values.begin(), values.end());
}

Rat fourth_of(const MomentSeq& m) {
  if (m.order() < 4) throw InvalidInputError("report needs moments through order 4");
  return m.values[3];
}

void check_normalized(const CumulantSeq& c) {
  if (c.order() < 2 || c.values[0] != 0 || c.values[1] != 1)
    throw InvalidInputError("family member must have mean 0 and variance 1");
}

const char* kGridNote = "distance = max |G1-G2| on the grid line Im z = 1 (lower bound of the sup metric)";
const char* kFamilyNote =
    "family is one representative 1/n-decay instance; the criteria quantify over all "
    "infinitely divisible sequences";

}  // namespace

SqrtCumulantSeq clt_sequence(Flavor flavor, const CumulantSeq& base, long long n) {
  if (n < 1) throw InvalidInputError("clt_sequence: n must be >= 1");
  check_normalized(base);
  SqrtCumulantSeq out;
  out.flavor = flavor;
  out.radicand = n;
  out.values.reserve(base.order());
  for (int m = 1; m <= base.order(); ++m) {
    const Rat& c = base.values[m - 1];
    if (m % 2 == 0) {
      out.values.emplace_back(rat_pow(Rat(n), 1 - m / 2) * c);
    } else {
      out.values.emplace_back(SqrtExt(Rat(0), rat_pow(Rat(n), (1 - m) / 2) * c, n));
    }
  }
  return out;
}

std::vector<SqrtExt> sqrt_moments(const SqrtCumulantSeq& c, int order, int cap) {
  if (order > c.order())
    throw InvalidInputError("sqrt_moments: sequence order too small");
  return mcf_moments(c.values, order, c.flavor, cap);
}

std::vector<SqrtExt> poisson_to_normal_moments(long long n, int order) {
  if (n < 1) throw InvalidInputError("poisson_to_normal_moments: n must be >= 1");
  if (order < 1) throw InvalidInputError("poisson_to_normal_moments: order must be >= 1");
  std::vector<SqrtExt> cums;
  cums.reserve(order);
  for (int m = 1; m <= order; ++m) {
    if (m == 1)
      cums.emplace_back(Rat(0));
    else if (m % 2 == 0)
      cums.emplace_back(rat_pow(Rat(n), 1 - m / 2));
    else
      cums.emplace_back(SqrtExt(Rat(0), rat_pow(Rat(n), (1 - m) / 2), n));
  }
  SqrtCumulantSeq seq{Flavor::Classical, n, std::move(cums)};
  return sqrt_moments(seq, order);
}

CumulantFamily decay_perturbation_family(CumulantSeq target) {
  return [target = std::move(target)](long long n) {
    if (n < 1) throw InvalidInputError("perturbation family: n must be >= 1");
    CumulantSeq out = target;
    Rat scale = Rat(1) + Rat(1, n);
    for (auto& v : out.values) v *= scale;
    return out;
  };
}

ExperimentReport clt_report(Flavor flavor, const CumulantSeq& base,
                            const std::vector<long long>& ns, const GridSpec& grid) {
  check_normalized(base);
  int order = base.order();
  if (order < 4) throw InvalidInputError("clt_report: base needs order >= 4");
  if (order % 2) --order;

  std::vector<Rat> unit(order, Rat(0));
  unit[1] = Rat(1);
  MomentSeq target = moments_from_cumulants(CumulantSeq(flavor, std::move(unit)), order);

  ExperimentReport report;
  report.label = "clt-" + flavor_name(flavor);
  report.notes = {kGridNote, kFamilyNote};

  std::vector<std::vector<SqrtExt>> all_moments;
  std::vector<MomentSeq> member_seqs;
  bool approximated = false;
  for (long long n : ns) {
    auto moments = sqrt_moments(clt_sequence(flavor, base, n), order);
    std::vector<Rat> rat_values;
    for (const auto& v : moments) {
      if (!v.is_rational()) approximated = true;
      rat_values.push_back(sqrtext_to_rat_approx(v, 40));
    }
    member_seqs.emplace_back(std::move(rat_values));
    all_moments.push_back(std::move(moments));
  }
  if (approximated)
    report.notes.push_back("odd moments are irrational in sqrt(n); distances use 40-digit rational approximations");

  int depth = common_depth(member_seqs, target, order);
  for (size_t i = 0; i < ns.size(); ++i) {
    ReportRow row;
    row.n = ns[i];
    row.moments = all_moments[i];
    row.fourth_moment = all_moments[i][3].as_rational();
    row.distance = equal_depth_distance(member_seqs[i], target, depth, grid);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport poisson_to_normal_report(const std::vector<long long>& ns, int order,
                                          const GridSpec& grid) {
  if (order < 4) throw InvalidInputError("poisson_to_normal_report: order must be >= 4");
  if (order % 2) --order;
  std::vector<Rat> unit(order, Rat(0));
  unit[1] = Rat(1);
  MomentSeq target = moments_from_cumulants(CumulantSeq(Flavor::Classical, std::move(unit)), order);

  ExperimentReport report;
  report.label = "poisson-normal";
  report.notes = {kGridNote};

  std::vector<std::vector<SqrtExt>> all_moments;
  std::vector<MomentSeq> member_seqs;
  bool approximated = false;
  for (long long n : ns) {
    auto moments = poisson_to_normal_moments(n, order);
    std::vector<Rat> rat_values;
    for (const auto& v : moments) {
      if (!v.is_rational()) approximated = true;
      rat_values.push_back(sqrtext_to_rat_approx(v, 40));
    }
    member_seqs.emplace_back(std::move(rat_values));
    all_moments.push_back(std::move(moments));
  }
  if (approximated)
    report.notes.push_back("odd moments are irrational in sqrt(n); distances use 40-digit rational approximations");

  int depth = common_depth(member_seqs, target, order);
  for (size_t i = 0; i < ns.size(); ++i) {
    ReportRow row;
    row.n = ns[i];
    row.moments = all_moments[i];
    row.fourth_moment = all_moments[i][3].as_rational();
    row.distance = equal_depth_distance(member_seqs[i], target, depth, grid);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport fourth_moment_report(const CumulantFamily& family, Flavor flavor,
                                      const LawDescriptor& limit_law,
                                      const std::vector<long long>& ns, int order,
                                      const GridSpec& grid) {
  if (order < 4) throw InvalidInputError("fourth_moment_report: order must be >= 4");
  if (order % 2) --order;
  MomentSeq target = exact_moment_sequence(limit_law, order);

  ExperimentReport report;
  report.label = "fourth-moment-" + flavor_name(flavor) + "-vs-" + limit_law.name();
  report.notes = {kGridNote, kFamilyNote};

  std::vector<MomentSeq> member_seqs;
  for (long long n : ns) {
    CumulantSeq member = family(n);
    if (member.flavor != flavor)
      throw InvalidInputError("fourth_moment_report: family flavor mismatch");
    check_normalized(member);
    member_seqs.push_back(moments_from_cumulants(member, std::min(order, member.order())));
  }
  int depth = common_depth(member_seqs, target, order);
  for (size_t i = 0; i < ns.size(); ++i) {
    ReportRow row;
    row.n = ns[i];
    row.moments = lift_rational(member_seqs[i].values);
    row.fourth_moment = fourth_of(member_seqs[i]);
    row.distance = equal_depth_distance(member_seqs[i], target, depth, grid);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport poisson_criterion_report(const CumulantFamily& family, Flavor flavor,
                                          const std::vector<long long>& ns, int order,
                                          const GridSpec& grid) {
  if (order < 4) throw InvalidInputError("poisson_criterion_report: order must be >= 4");
  if (order % 2) --order;
  MomentSeq target =
      moments_from_cumulants(CumulantSeq(flavor, std::vector<Rat>(order, Rat(1))), order);

  ExperimentReport report;
  report.label = "poisson-criterion-" + flavor_name(flavor);
  report.notes = {kGridNote, kFamilyNote};

  std::vector<MomentSeq> member_seqs;
  for (long long n : ns) {
    CumulantSeq member = family(n);
    if (member.flavor != flavor)
      throw InvalidInputError("poisson_criterion_report: family flavor mismatch");
    member_seqs.push_back(moments_from_cumulants(member, std::min(order, member.order())));
  }
  int depth = common_depth(member_seqs, target, order);
  for (size_t i = 0; i < ns.size(); ++i) {
    ReportRow row;
    row.n = ns[i];
    row.moments = lift_rational(member_seqs[i].values);
    row.fourth_moment = fourth_of(member_seqs[i]);
    row.distance = equal_depth_distance(member_seqs[i], target, depth, grid);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport compound_poisson_report(const CumulantFamily& family, Flavor flavor,
                                         const Rat& lambda, const AtomicMeasure& nu,
                                         const std::vector<long long>& ns, const GridSpec& grid) {
  int k = nu.atom_count();
  int order = 2 * k + 2;
  CumulantSeq target_cums = compound_poisson_cumulants(lambda, nu, flavor, order);
  MomentSeq target = moments_from_cumulants(target_cums, order);

  ExperimentReport report;
  report.label = "compound-poisson-" + flavor_name(flavor);
  report.notes = {kGridNote, kFamilyNote,
                  "tracking " + std::to_string(order) + " moments and Jacobi levels 0.." +
                      std::to_string(k) + " for a " + std::to_string(k) + "-atom jump distribution"};
  report.target_jacobi = jacobi_from_moments(target, k + 1, k + 1);

  std::vector<MomentSeq> member_seqs;
  for (long long n : ns) {
    CumulantSeq member = family(n);
    if (member.flavor != flavor)
      throw InvalidInputError("compound_poisson_report: family flavor mismatch");
    if (member.order() < order)
      throw InvalidInputError("compound_poisson_report: family member needs order >= " +
                              std::to_string(order));
    member_seqs.push_back(moments_from_cumulants(member, order));
  }
  int depth = common_depth(member_seqs, target, order);
  for (size_t i = 0; i < ns.size(); ++i) {
    ReportRow row;
    row.n = ns[i];
    row.moments = lift_rational(member_seqs[i].values);
    row.fourth_moment = fourth_of(member_seqs[i]);
    row.distance = equal_depth_distance(member_seqs[i], target, depth, grid);
    row.jacobi = jacobi_from_moments(member_seqs[i], k + 1, k + 1);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport tetilla_report(const std::vector<long long>& ns, const GridSpec& grid) {
  AtomicMeasure b = AtomicMeasure::symmetric_bernoulli();
  Rat lambda(2);
  CumulantSeq target_cums = compound_poisson_cumulants(lambda, b, Flavor::Free, 6);
  ExperimentReport report = compound_poisson_report(decay_perturbation_family(target_cums),
                                                    Flavor::Free, lambda, b, ns, grid);
  report.label = "tetilla";

  MomentSeq exact = moments_from_cumulants(target_cums, 6);
  auto quad = quadrature_moments(LawDescriptor::tetilla(), 6, 1e-8);
  for (int i = 0; i < 6; ++i) {
    double e = to_double(exact.values[i]);
    std::ostringstream os;
    os << "target m_" << (i + 1) << ": transform route " << rat_to_string(exact.values[i])
       << ", commutator density quadrature " << format_double(quad[i], 12) << " (|diff| "
       << format_double(std::abs(quad[i] - e), 3) << ")";
    report.notes.push_back(os.str());
  }
  return report;
}

nlohmann::ordered_json ExperimentReport::to_json(int precision) const {
  nlohmann::ordered_json j;
  j["label"] = label;
  j["notes"] = notes;
  if (target_jacobi) j["target_jacobi"] = target_jacobi->to_json();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["moments"] = nlohmann::ordered_json::array();
    for (const auto& m : row.moments) r["moments"].push_back(m.to_string());
    r["fourth_moment"] = rat_to_string(row.fourth_moment);
    r["distance"] = format_double(row.distance, precision);
    if (row.jacobi) r["jacobi"] = row.jacobi->to_json();
    j["rows"].push_back(std::move(r));
  }
  return j;
}

std::string ExperimentReport::to_csv(int precision) const {
  size_t n_moments = 0, n_beta = 0, n_gamma = 0;
  for (const auto& row : rows) {
    n_moments = std::max(n_moments, row.moments.size());
    if (row.jacobi) {
      n_beta = std::max(n_beta, row.jacobi->beta.size());
      n_gamma = std::max(n_gamma, row.jacobi->gamma.size());
    }
  }
  std::ostringstream os;
  os << "n";
  for (size_t i = 1; i <= n_moments; ++i) os << ",m_" << i;
  os << ",fourth_moment,distance";
  for (size_t i = 0; i < n_beta; ++i) os << ",beta_" << i;
  for (size_t i = 0; i < n_gamma; ++i) os << ",gamma_" << i;
  os << "\n";
  for (const auto& row : rows) {
    os << row.n;
    for (size_t i = 0; i < n_moments; ++i)
      os << "," << (i < row.moments.size() ? row.moments[i].to_string() : "");
    os << "," << rat_to_string(row.fourth_moment) << "," << format_double(row.distance, precision);
    for (size_t i = 0; i < n_beta; ++i)
      os << ","
         << (row.jacobi && i < row.jacobi->beta.size() ? rat_to_string(row.jacobi->beta[i]) : "");
    for (size_t i = 0; i < n_gamma; ++i)
      os << ","
         << (row.jacobi && i < row.jacobi->gamma.size() ? rat_to_string(row.jacobi->gamma[i]) : "");
    os << "\n";
  }
  return os.str();
}

std::string ExperimentReport::to_pretty(int precision) const {
  std::ostringstream os;
  os << "experiment: " << label << "\n";
  for (const auto& note : notes) os << "# " << note << "\n";
  if (target_jacobi) {
    os << "target jacobi: beta=(";
    for (size_t i = 0; i < target_jacobi->beta.size(); ++i)
      os << (i ? "," : "") << rat_to_string(target_jacobi->beta[i]);
    os << ") gamma=(";
    for (size_t i = 0; i < target_jacobi->gamma.size(); ++i)
      os << (i ? "," : "") << rat_to_string(target_jacobi->gamma[i]);
    os << ")\n";
  }
  for (const auto& row : rows) {
    os << "n=" << row.n << " moments=[";
    for (size_t i = 0; i < row.moments.size(); ++i)
      os << (i ? "," : "") << row.moments[i].to_string();
    os << "] m4=" << rat_to_string(row.fourth_moment)
       << " distance=" << format_double(row.distance, precision);
    if (row.jacobi) {
      os << " beta=(";
      for (size_t i = 0; i < row.jacobi->beta.size(); ++i)
        os << (i ? "," : "") << rat_to_string(row.jacobi->beta[i]);
      os << ") gamma=(";
      for (size_t i = 0; i < row.jacobi->gamma.size(); ++i)
        os << (i ? "," : "") << rat_to_string(row.jacobi->gamma[i]);
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ncprob
