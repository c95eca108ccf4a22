#include "edp3/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "edp3/bench.hpp"
#include "edp3/instance_io.hpp"
#include "edp3/oracle.hpp"
#include "edp3/solver.hpp"

namespace edp3::cli {

namespace {

std::optional<Instance> load_checked(const std::string& path, std::ostream& err) {
  try {
    return load_instance(path);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

bool require_eulerian(const Instance& inst, std::ostream& err) {
  if (auto odd = first_odd_node(inst)) {
    err << "error: instance is not Eulerian (node " << *odd + 1
        << " has odd degree in G+H)\n";
    return false;
  }
  return true;
}

void print_witness(const Witness& w, std::ostream& out) {
  out << "INFEASIBLE\n";
  out << "U =";
  for (NodeId v : w.cut_set) out << ' ' << v + 1;
  out << '\n';
  out << "dG = " << w.cut_capacity << '\n';
  out << "dH = " << w.demand_crossing << '\n';
}

}  // namespace

int cmd_solve(const std::string& instance_path, std::ostream& out, std::ostream& err) {
  auto inst = load_checked(instance_path, err);
  if (!inst) return 2;
  if (!require_eulerian(*inst, err)) return 2;
  SolveOutcome outcome = solve(*inst);
  if (outcome_feasible(outcome)) {
    out << "FEASIBLE\n";
    const Solution& sol = std::get<Solution>(outcome);
    for (const PathSeq& p : sol.paths) {
      for (size_t i = 0; i < p.nodes.size(); ++i)
        out << (i ? " " : "") << p.nodes[i] + 1;
      out << '\n';
    }
    return 0;
  }
  print_witness(std::get<Witness>(outcome), out);
  return 1;
}

int cmd_check(const std::string& instance_path, std::ostream& out, std::ostream& err) {
  auto inst = load_checked(instance_path, err);
  if (!inst) return 2;
  if (!require_eulerian(*inst, err)) return 2;
  CheckResult res = check_feasible(*inst);
  out << (res.feasible() ? "FEASIBLE" : "INFEASIBLE") << '\n';
  return res.feasible() ? 0 : 1;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out, std::ostream& err) {
  auto inst = load_checked(instance_path, err);
  if (!inst) return 2;
  std::ifstream sf(solution_path);
  if (!sf) {
    err << "error: cannot open '" << solution_path << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << sf.rdbuf();
  std::optional<Solution> sol;
  try {
    sol = parse_solution_text(*inst, buffer.str());
  } catch (const ParseError& e) {
    err << "error: " << solution_path << ": " << e.what() << '\n';
    return 2;
  }
  if (sol && verify_solution(*inst, *sol)) {
    out << "OK\n";
    return 0;
  }
  out << "FAIL\n";
  return 1;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  GenConfig cfg;
  cfg.nodes = opt.nodes;
  cfg.cycles = opt.cycles;
  cfg.trail_min = opt.trail_min;
  cfg.trail_max = opt.trail_max;
  cfg.seed = opt.seed;
  if (opt.mode == "feasible") {
    cfg.mode = GenConfig::Mode::kFeasible;
  } else if (opt.mode == "parity-repaired") {
    cfg.mode = GenConfig::Mode::kParityRepaired;
  } else {
    err << "error: unknown mode '" << opt.mode
        << "' (expected 'feasible' or 'parity-repaired')\n";
    return 2;
  }
  Instance inst;
  try {
    inst = gen_instance(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  std::string text = render_instance(inst);
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<long long> sizes = opt.sizes;
  if (sizes.empty())
    for (int p = 16; p <= 21; ++p) sizes.push_back(1LL << p);
  BenchResult res;
  try {
    res = run_bench(sizes, opt.runs, opt.seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  out << "m,seconds\n";
  for (const BenchRow& row : res.rows) out << row.edges << ',' << row.seconds << '\n';
  out << "# slope " << res.slope << '\n';
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"three edge-disjoint paths in Eulerian multigraphs"};
  app.require_subcommand(1);

  std::string instance_path, solution_path;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", instance_path, "instance file")->required();

  auto* check_cmd = app.add_subcommand("check", "print the feasibility verdict only");
  check_cmd->add_option("instance", instance_path, "instance file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a solution file");
  verify_cmd->add_option("instance", instance_path, "instance file")->required();
  verify_cmd->add_option("solution", solution_path, "solution file")->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--nodes", gen.nodes, "node budget");
  gen_cmd->add_option("--cycles", gen.cycles, "extra closed walks / edge budget");
  gen_cmd->add_option("--trail-min", gen.trail_min, "trail length lower bound");
  gen_cmd->add_option("--trail-max", gen.trail_max, "trail length upper bound");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--mode", gen.mode, "feasible | parity-repaired");
  gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time solve across instance sizes");
  bench_cmd->add_option("--sizes", bench.sizes, "target edge counts");
  bench_cmd->add_option("--runs", bench.runs, "instances per size (median)");
  bench_cmd->add_option("--seed", bench.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(instance_path, std::cout, std::cerr);
    if (check_cmd->parsed()) return cmd_check(instance_path, std::cout, std::cerr);
    if (verify_cmd->parsed())
      return cmd_verify(instance_path, solution_path, std::cout, std::cerr);
    if (gen_cmd->parsed()) return cmd_gen(gen, std::cout, std::cerr);
    if (bench_cmd->parsed()) return cmd_bench(bench, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace edp3::cli
