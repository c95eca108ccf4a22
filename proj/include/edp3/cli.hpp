#ifndef EDP3_CLI_HPP
#define EDP3_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edp3::cli {

// Exit codes: 0 feasible/OK, 1 infeasible/FAIL, 2 input error.
int cmd_solve(const std::string& instance_path, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& instance_path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out, std::ostream& err);

struct GenOptions {
  int nodes = 8;
  int cycles = 1;
  int trail_min = 1;
  int trail_max = 6;
  uint64_t seed = 1;
  std::string mode = "feasible";  // feasible | parity-repaired
  std::string out_path;           // empty: stdout
};
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<long long> sizes;  // defaults to 2^16..2^21
  int runs = 5;
  uint64_t seed = 1;
};
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace edp3::cli

#endif  // EDP3_CLI_HPP
