#include "ncprob/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/experiments.hpp"
#include "ncprob/jacobi.hpp"
#include "ncprob/laws.hpp"
#include "ncprob/levy.hpp"
#include "ncprob/measures.hpp"
#include "ncprob/partitions.hpp"

namespace ncprob {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

// Argument-parsing helpers rethrow as usage errors (exit 2); computation
// errors keep their own classes (exit 3/4).
template <typename F>
auto parse_arg(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInputError& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("bad JSON in " + path + ": " + e.what());
  }
}

AtomicMeasure load_measure(const std::string& path) {
  try {
    return AtomicMeasure::from_json(load_json_file(path));
  } catch (const InvalidInputError& e) {
    throw UsageError(std::string("bad measure file ") + path + ": " + e.what());
  }
}

std::vector<long long> parse_n_list(const std::string& csv) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("bad index list entry: " + item);
    }
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

LawDescriptor parse_law_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto two_doubles = [&](const char* what) {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw UsageError(std::string(what) + " needs mean,variance (got \"" + rest + "\")");
    try {
      return std::pair<double, double>{std::stod(rest.substr(0, comma)),
                                       std::stod(rest.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError(std::string("bad numbers in law spec \"") + spec + "\"");
    }
  };
  if (kind == "bernoulli") return LawDescriptor::bernoulli_sym();
  if (kind == "tetilla") return LawDescriptor::tetilla();
  if (kind == "atomic") {
    if (rest.empty()) throw UsageError("atomic law spec needs a file: atomic:measure.json");
    return LawDescriptor::atomic(load_measure(rest));
  }
  if (kind == "semicircle") {
    auto [m, v] = two_doubles("semicircle");
    return parse_arg([&] { return LawDescriptor::semicircle(m, v); });
  }
  if (kind == "arcsine") {
    auto [m, v] = two_doubles("arcsine");
    return parse_arg([&] { return LawDescriptor::arcsine(m, v); });
  }
  if (kind == "normal") {
    auto [m, v] = two_doubles("normal");
    return parse_arg([&] { return LawDescriptor::normal(m, v); });
  }
  if (kind == "moments") {
    auto values = parse_arg([&] { return rat_list_from_string(rest); });
    return LawDescriptor::from_moments(MomentSeq(values));
  }
  throw UsageError("unknown law spec \"" + spec +
                   "\" (expected atomic:file, semicircle:m,v, arcsine:m,v, normal:m,v, "
                   "bernoulli, tetilla, moments:m1,...)");
}

void print_rat_list(std::ostream& out, const std::vector<Rat>& values, const CliConfig& cfg,
                    const std::string& item_name) {
  if (cfg.output == "json") {
    nlohmann::ordered_json j;
    j[item_name] = nlohmann::ordered_json::array();
    for (const auto& v : values) j[item_name].push_back(rat_to_string(v));
    out << j.dump() << "\n";
  } else if (cfg.output == "csv") {
    for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << item_name << "_" << (i + 1);
    out << "\n" << rat_list_to_string(values) << "\n";
  } else {
    out << rat_list_to_string(values) << "\n";
  }
}

void print_measure(std::ostream& out, const AtomicMeasure& mu, const CliConfig& cfg) {
  if (cfg.output == "csv") {
    out << "atom,weight\n";
    for (int i = 0; i < mu.atom_count(); ++i)
      out << rat_to_string(mu.atoms()[i].midpoint()) << ","
          << rat_to_string(mu.weights()[i].midpoint()) << "\n";
  } else if (cfg.output == "json") {
    out << mu.to_json().dump() << "\n";
  } else {
    out << mu.to_json().dump(2) << "\n";
  }
}

void print_jacobi(std::ostream& out, const JacobiParams& J, const CliConfig& cfg) {
  if (cfg.output == "json") {
    out << J.to_json().dump() << "\n";
  } else if (cfg.output == "csv") {
    for (size_t i = 0; i < J.beta.size(); ++i) out << (i ? "," : "") << "beta_" << i;
    for (size_t i = 0; i < J.gamma.size(); ++i) out << ",gamma_" << i;
    out << "\n";
    for (size_t i = 0; i < J.beta.size(); ++i) out << (i ? "," : "") << rat_to_string(J.beta[i]);
    for (size_t i = 0; i < J.gamma.size(); ++i) out << "," << rat_to_string(J.gamma[i]);
    out << "\n";
  } else {
    out << "beta: " << rat_list_to_string(J.beta) << "\n";
    out << "gamma: " << (J.gamma.empty() ? "" : rat_list_to_string(J.gamma)) << "\n";
  }
}

void print_report(std::ostream& out, const ExperimentReport& report, const CliConfig& cfg) {
  if (cfg.output == "json")
    out << report.to_json(cfg.precision).dump() << "\n";
  else if (cfg.output == "csv")
    out << report.to_csv(cfg.precision);
  else
    out << report.to_pretty(cfg.precision);
}

GridSpec grid_of(const CliConfig& cfg) { return GridSpec{cfg.grid_half_width, cfg.grid_points}; }

void apply_config_file(CliConfig& cfg, const std::string& path) {
  nlohmann::json j = load_json_file(path);
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    try {
      if (key == "precision")
        cfg.precision = it.value().get<int>();
      else if (key == "grid_L")
        cfg.grid_half_width = it.value().get<double>();
      else if (key == "grid_M")
        cfg.grid_points = it.value().get<int>();
      else if (key == "max_n")
        cfg.max_n = it.value().get<int>();
      else if (key == "output")
        cfg.output = it.value().get<std::string>();
      else
        throw UsageError("unknown config key \"" + key + "\"");
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("bad config value for \"" + key + "\": " + e.what());
    }
  }
}

void validate_config(const CliConfig& cfg) {
  if (cfg.precision < 4 || cfg.precision > 30)
    throw UsageError("precision must lie in [4, 30]");
  if (cfg.grid_points < 2) throw UsageError("grid_M must be >= 2");
  if (!(cfg.grid_half_width > 0)) throw UsageError("grid_L must be positive");
  if (cfg.max_n < 1) throw UsageError("max_n must be >= 1");
  if (cfg.output != "json" && cfg.output != "csv" && cfg.output != "pretty")
    throw UsageError("output must be json, csv or pretty");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact moments, cumulants and transforms of probability measures under the four "
               "universal independences"};
  app.name("ncprob");

  std::optional<std::string> config_path;
  std::optional<int> opt_precision, opt_grid_m, opt_max_n;
  std::optional<double> opt_grid_l;
  std::optional<std::string> opt_output;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--precision", opt_precision, "decimal digits for float output (4..30)");
  app.add_option("--grid-l", opt_grid_l, "distance grid half-width");
  app.add_option("--grid-m", opt_grid_m, "distance grid point count");
  app.add_option("--max-n", opt_max_n, "enumeration and order cap");
  app.add_option("--output", opt_output, "output format: json|csv|pretty");
  app.require_subcommand(0, 1);

  // partitions
  auto* cmd_partitions = app.add_subcommand("partitions", "count or list partition families");
  std::string family;
  int part_n = 0;
  bool list_mode = false;
  cmd_partitions->add_option("family", family, "all|nc|interval|monotone")->required();
  cmd_partitions->add_option("n", part_n, "ground-set size")->required();
  cmd_partitions->add_flag("--list", list_mode, "emit the partitions, not just the count");

  // moments
  auto* cmd_moments = app.add_subcommand("moments", "moments from cumulants");
  std::string flavor_arg, cumulants_arg;
  int order_arg = 0;
  cmd_moments->add_option("--flavor", flavor_arg, "classical|free|boolean|monotone")->required();
  cmd_moments->add_option("--cumulants", cumulants_arg, "comma-separated rationals")->required();
  cmd_moments->add_option("--order", order_arg, "output order (default: sequence length)");

  // cumulants
  auto* cmd_cumulants = app.add_subcommand("cumulants", "cumulants from moments");
  std::string cm_flavor, moments_arg;
  cmd_cumulants->add_option("--flavor", cm_flavor, "classical|free|boolean|monotone")->required();
  cmd_cumulants->add_option("--moments", moments_arg, "comma-separated rationals")->required();

  // jacobi
  auto* cmd_jacobi = app.add_subcommand("jacobi", "Jacobi parameters from moments, or back");
  std::string jac_moments, jac_beta, jac_gamma;
  bool to_moments = false;
  int jac_order = 0;
  cmd_jacobi->add_option("--moments", jac_moments, "comma-separated rationals");
  cmd_jacobi->add_flag("--to-moments", to_moments, "expand Jacobi data into moments");
  cmd_jacobi->add_option("--beta", jac_beta, "comma-separated rationals");
  cmd_jacobi->add_option("--gamma", jac_gamma, "comma-separated rationals (may be empty)");
  cmd_jacobi->add_option("--order", jac_order, "moment order for --to-moments");

  // convolve
  auto* cmd_convolve = app.add_subcommand("convolve", "convolve two atomic measures");
  std::string kind, mu1_path, mu2_path;
  cmd_convolve->add_option("--kind", kind, "classical|boolean|monotone")->required();
  cmd_convolve->add_option("--mu1", mu1_path, "measure JSON file")->required();
  cmd_convolve->add_option("--mu2", mu2_path, "measure JSON file")->required();

  // distance
  auto* cmd_distance = app.add_subcommand("distance", "weak-convergence distance of two laws");
  std::string law1_spec, law2_spec;
  cmd_distance->add_option("--law1", law1_spec, "law spec")->required();
  cmd_distance->add_option("--law2", law2_spec, "law spec")->required();

  // experiment
  auto* cmd_experiment = app.add_subcommand("experiment", "convergence-law reports");
  cmd_experiment->require_subcommand(1);
  std::string exp_n = "1,4,16,64,256";
  std::string exp_flavor = "free";
  std::string exp_base = "0,1,0,1,0,0,0,0";
  std::string exp_lambda = "1";
  std::string exp_nu;
  int exp_order = 8;
  auto* exp_clt = cmd_experiment->add_subcommand("clt", "normalized iid sums");
  exp_clt->add_option("--flavor", exp_flavor)->required();
  exp_clt->add_option("--base", exp_base, "base cumulants (mean 0, variance 1)");
  exp_clt->add_option("--n", exp_n, "comma-separated indices");
  auto* exp_pn = cmd_experiment->add_subcommand("poisson-normal", "centered scaled Poisson(n)");
  exp_pn->add_option("--n", exp_n, "comma-separated indices");
  exp_pn->add_option("--order", exp_order, "moment order");
  auto* exp_pc = cmd_experiment->add_subcommand("poisson-criterion",
                                                "cumulants drifting to 1 approach the Poisson law");
  exp_pc->add_option("--flavor", exp_flavor)->required();
  exp_pc->add_option("--n", exp_n, "comma-separated indices");
  exp_pc->add_option("--order", exp_order, "moment order");
  auto* exp_cp = cmd_experiment->add_subcommand("compound-poisson",
                                                "perturbed compound Poisson families");
  exp_cp->add_option("--flavor", exp_flavor)->required();
  exp_cp->add_option("--lambda", exp_lambda, "rate (rational)");
  exp_cp->add_option("--nu", exp_nu, "jump distribution JSON file")->required();
  exp_cp->add_option("--n", exp_n, "comma-separated indices");
  auto* exp_tet = cmd_experiment->add_subcommand("tetilla", "free commutator of two semicircles");
  exp_tet->add_option("--n", exp_n, "comma-separated indices");

  // let --output/--precision/... appear after the subcommand name
  for (CLI::App* sub : {cmd_partitions, cmd_moments, cmd_cumulants, cmd_jacobi, cmd_convolve,
                        cmd_distance, cmd_experiment, exp_clt, exp_pn, exp_pc, exp_cp, exp_tet})
    sub->fallthrough();

  std::vector<std::string> argv_strings;
  argv_strings.reserve(args.size() + 1);
  argv_strings.push_back("ncprob");
  for (const auto& a : args) argv_strings.push_back(a);
  std::vector<const char*> argv;
  for (const auto& s : argv_strings) argv.push_back(s.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }

    CliConfig cfg;
    if (config_path) apply_config_file(cfg, *config_path);
    if (const char* env = std::getenv("NCPROB_MAX_N")) {
      try {
        cfg.max_n = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("bad NCPROB_MAX_N value: ") + env);
      }
    }
    if (opt_precision) cfg.precision = *opt_precision;
    if (opt_grid_l) cfg.grid_half_width = *opt_grid_l;
    if (opt_grid_m) cfg.grid_points = *opt_grid_m;
    if (opt_max_n) cfg.max_n = *opt_max_n;
    if (opt_output) cfg.output = *opt_output;
    validate_config(cfg);

    if (cmd_partitions->parsed()) {
      if (family != "all" && family != "nc" && family != "interval" && family != "monotone")
        throw UsageError("unknown partition family \"" + family + "\"");
      if (list_mode) {
        if (cfg.output == "json") {
          nlohmann::ordered_json items = nlohmann::ordered_json::array();
          if (family == "monotone") {
            for_each_monotone(part_n, [&](const MonotonePartition& mp) {
              nlohmann::ordered_json j;
              j["blocks"] = mp.base.blocks;
              j["order"] = mp.order;
              items.push_back(std::move(j));
            }, cfg.max_n);
          } else {
            auto push = [&](const Partition& p) { items.push_back(p.blocks); };
            if (family == "all") for_each_set_partition(part_n, push, cfg.max_n);
            if (family == "nc") for_each_noncrossing(part_n, push, cfg.max_n);
            if (family == "interval") for_each_interval(part_n, push, cfg.max_n);
          }
          out << items.dump() << "\n";
        } else {
          if (cfg.output == "csv") out << "partition\n";
          auto emit = [&](const std::string& s) {
            if (cfg.output == "csv")
              out << '"' << s << '"' << "\n";
            else
              out << s << "\n";
          };
          if (family == "monotone")
            for_each_monotone(part_n, [&](const MonotonePartition& mp) { emit(mp.to_string()); },
                              cfg.max_n);
          else {
            auto push = [&](const Partition& p) { emit(p.to_string()); };
            if (family == "all") for_each_set_partition(part_n, push, cfg.max_n);
            if (family == "nc") for_each_noncrossing(part_n, push, cfg.max_n);
            if (family == "interval") for_each_interval(part_n, push, cfg.max_n);
          }
        }
      } else {
        unsigned long long count = 0;
        if (family == "all")
          for_each_set_partition(part_n, [&](const Partition&) { ++count; }, cfg.max_n);
        else if (family == "nc")
          for_each_noncrossing(part_n, [&](const Partition&) { ++count; }, cfg.max_n);
        else if (family == "interval")
          for_each_interval(part_n, [&](const Partition&) { ++count; }, cfg.max_n);
        else
          for_each_monotone(part_n, [&](const MonotonePartition&) { ++count; }, cfg.max_n);
        if (cfg.output == "json") {
          nlohmann::ordered_json j;
          j["family"] = family;
          j["n"] = part_n;
          j["count"] = count;
          out << j.dump() << "\n";
        } else if (cfg.output == "csv") {
          out << "count\n" << count << "\n";
        } else {
          out << count << "\n";
        }
      }
      return 0;
    }

    if (cmd_moments->parsed()) {
      Flavor flavor = parse_arg([&] { return flavor_from_string(flavor_arg); });
      auto values = parse_arg([&] { return rat_list_from_string(cumulants_arg); });
      int order = order_arg > 0 ? order_arg : static_cast<int>(values.size());
      MomentSeq m = moments_from_cumulants(CumulantSeq(flavor, values), order, cfg.max_n);
      print_rat_list(out, m.values, cfg, "m");
      return 0;
    }

    if (cmd_cumulants->parsed()) {
      Flavor flavor = parse_arg([&] { return flavor_from_string(cm_flavor); });
      auto values = parse_arg([&] { return rat_list_from_string(moments_arg); });
      CumulantSeq c = cumulants_from_moments(MomentSeq(values), flavor, cfg.max_n);
      print_rat_list(out, c.values, cfg, "c");
      return 0;
    }

    if (cmd_jacobi->parsed()) {
      if (to_moments) {
        if (jac_beta.empty() || jac_order < 1)
          throw UsageError("jacobi --to-moments needs --beta and --order");
        JacobiParams J;
        J.beta = parse_arg([&] { return rat_list_from_string(jac_beta); });
        if (!jac_gamma.empty()) J.gamma = parse_arg([&] { return rat_list_from_string(jac_gamma); });
        parse_arg([&] { J.validate(); return 0; });
        MomentSeq m = moments_from_jacobi(J, jac_order);
        print_rat_list(out, m.values, cfg, "m");
      } else {
        if (jac_moments.empty()) throw UsageError("jacobi needs --moments or --to-moments");
        auto values = parse_arg([&] { return rat_list_from_string(jac_moments); });
        JacobiParams J = jacobi_from_moments(MomentSeq(values));
        print_jacobi(out, J, cfg);
      }
      return 0;
    }

    if (cmd_convolve->parsed()) {
      AtomicMeasure mu1 = load_measure(mu1_path);
      AtomicMeasure mu2 = load_measure(mu2_path);
      AtomicMeasure result = [&] {
        if (kind == "classical") return classical_convolve(mu1, mu2);
        if (kind == "boolean") return boolean_convolve(mu1, mu2);
        if (kind == "monotone") return monotone_convolve(mu1, mu2);
        throw UsageError("unknown convolution kind \"" + kind + "\"");
      }();
      print_measure(out, result, cfg);
      return 0;
    }

    if (cmd_distance->parsed()) {
      LawDescriptor law1 = parse_law_spec(law1_spec);
      LawDescriptor law2 = parse_law_spec(law2_spec);
      double d = weak_distance(law1, law2, grid_of(cfg));
      if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["distance"] = format_double(d, cfg.precision);
        out << j.dump() << "\n";
      } else if (cfg.output == "csv") {
        out << "distance\n" << format_double(d, cfg.precision) << "\n";
      } else {
        out << format_double(d, cfg.precision) << "\n";
      }
      return 0;
    }

    if (cmd_experiment->parsed()) {
      auto ns = parse_n_list(exp_n);
      ExperimentReport report;
      if (exp_clt->parsed()) {
        Flavor flavor = parse_arg([&] { return flavor_from_string(exp_flavor); });
        auto base = parse_arg([&] { return rat_list_from_string(exp_base); });
        report = clt_report(flavor, CumulantSeq(flavor, base), ns, grid_of(cfg));
      } else if (exp_pn->parsed()) {
        report = poisson_to_normal_report(ns, exp_order, grid_of(cfg));
      } else if (exp_pc->parsed()) {
        Flavor flavor = parse_arg([&] { return flavor_from_string(exp_flavor); });
        // kappa_i = 1 + 1/n through order 4, then exactly 1
        CumulantFamily family = [exp_order](long long n) {
          std::vector<Rat> values(exp_order, Rat(1));
          for (int i = 0; i < 4 && i < exp_order; ++i) values[i] += Rat(1, n);
          return CumulantSeq(Flavor::Classical, values);  // flavor fixed below
        };
        CumulantFamily tagged = [family, flavor](long long n) {
          CumulantSeq c = family(n);
          c.flavor = flavor;
          return c;
        };
        report = poisson_criterion_report(tagged, flavor, ns, exp_order, grid_of(cfg));
      } else if (exp_cp->parsed()) {
        Flavor flavor = parse_arg([&] { return flavor_from_string(exp_flavor); });
        Rat lambda = parse_arg([&] { return rat_from_string(exp_lambda); });
        AtomicMeasure nu = load_measure(exp_nu);
        int k = nu.atom_count();
        CumulantSeq target = compound_poisson_cumulants(lambda, nu, flavor, 2 * k + 2);
        report = compound_poisson_report(decay_perturbation_family(target), flavor, lambda, nu, ns,
                                         grid_of(cfg));
      } else {
        report = tetilla_report(ns, grid_of(cfg));
      }
      print_report(out, report, cfg);
      return 0;
    }

    err << "usage error: no subcommand given (try --help)\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ncprob
