#ifndef NCPROB_CLI_HPP
#define NCPROB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncprob {

struct CliConfig {
  int precision = 12;        // decimal digits for float output, in [4, 30]
  double grid_half_width = 10.0;
  int grid_points = 201;     // >= 2
  int max_n = 14;            // enumeration / order cap, >= 1
  std::string output = "pretty";  // json | csv | pretty
};

// Full command dispatch. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`. Exit codes: 0 success, 2 usage, 3 domain/validation,
// 4 accuracy.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncprob

#endif
