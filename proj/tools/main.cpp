#include <CLI11.hpp>

#include "latfeas/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Projection/reflection feasibility methods on finite-dimensional Hilbert lattices"};
  app.require_subcommand(1);

  std::string problem_path;
  latfeas::RunCommandOptions run_opts;
  int max_iters = 0;
  double tol = -1.0;
  std::uint64_t seed = 0;

  auto* run_cmd = app.add_subcommand("run", "execute a problem file and export the trace");
  run_cmd->add_option("problem", problem_path, "problem JSON file")->required();
  run_cmd->add_option("--out", run_opts.out_prefix, "output path prefix");
  auto* run_iters = run_cmd->add_option("--max-iters", max_iters, "iteration cap override");
  auto* run_tol = run_cmd->add_option("--tol", tol, "stopping tolerance override");
  auto* run_seed = run_cmd->add_option("--seed", seed, "seed override");
  run_cmd->add_flag("--full-trace", run_opts.full_trace, "also dump full iterate vectors (JSONL)");

  std::string check_path;
  int check_samples = 10000;
  std::uint64_t check_seed = 0;
  auto* check_cmd = app.add_subcommand("check", "evaluate the norm-convergence hypotheses");
  check_cmd->add_option("problem", check_path, "problem JSON file")->required();
  check_cmd->add_option("--samples", check_samples, "falsifier sample count");
  auto* check_seed_opt = check_cmd->add_option("--seed", check_seed, "falsifier seed override");

  std::string target;
  latfeas::ReproduceOptions rep_opts;
  auto* rep_cmd = app.add_subcommand("reproduce", "rerun a named construction against its oracle");
  rep_cmd->add_option("which", target, "ex41 | ex42 | ex43 | ex44 | fig1")->required();
  rep_cmd->add_option("--a-m", rep_opts.a_m, "distinguished normal entry (ex41/ex42)");
  rep_cmd->add_option("--alpha0", rep_opts.alpha0, "initial amplitude (ex41/ex42)");
  rep_cmd->add_option("--theta", rep_opts.theta, "angle between the two lines (ex44)");
  rep_cmd->add_option("--out", rep_opts.out_prefix, "output path prefix");

  latfeas::SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "walk the a = b = 1 - 1/(2(1-c)) parameter curve");
  sweep_cmd->add_option("--grid", sweep_opts.grid, "number of c grid points on [0, 1/2]");
  sweep_cmd->add_option("--out", sweep_opts.out_path, "output CSV path");
  sweep_cmd->add_option("--max-iters", sweep_opts.max_iters, "iteration cap per run");
  sweep_cmd->add_option("--tol", sweep_opts.tol, "stopping tolerance per run");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) {
    if (run_iters->count()) run_opts.max_iters = max_iters;
    if (run_tol->count()) run_opts.tol = tol;
    if (run_seed->count()) run_opts.seed = seed;
    return latfeas::cmd_run(problem_path, run_opts);
  }
  if (check_cmd->parsed()) {
    std::optional<std::uint64_t> s;
    if (check_seed_opt->count()) s = check_seed;
    return latfeas::cmd_check(check_path, check_samples, s);
  }
  if (rep_cmd->parsed()) return latfeas::cmd_reproduce(target, rep_opts);
  if (sweep_cmd->parsed()) return latfeas::cmd_sweep(sweep_opts);
  return 1;
}
