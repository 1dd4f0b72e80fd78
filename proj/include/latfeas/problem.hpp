#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "latfeas/conditions.hpp"
#include "latfeas/iterate.hpp"

namespace latfeas {

/// A feasibility instance plus method and run options, as stored in a JSON
/// problem file:
///   {"dim": N,
///    "cone": {"type": "lattice"} | {"type": "simplicial", "generators": [[..], ..]},
///    "affine": {"rows": [[..], ..], "rhs": [..]},
///    "x0": [..],
///    "method": {"name": "map"|"dr"|"relaxed", "a": .., "b": .., "c": ..},
///    "opts": {"max_iters": K, "tol": T, "seed": S}}
struct ProblemFile {
  Index dim = 0;
  ConeSpec cone = LatticeCone{1};
  AffineSubspace affine{Matrix::Identity(1, 1), Vector::Zero(1)};
  Vector x0;
  MethodSpec method;
  RunOptions opts;
  std::uint64_t seed = 0;
};

ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);
nlohmann::json problem_to_json(const ProblemFile& p);

nlohmann::json report_to_json(const ConditionReport& report);

/// Trace CSV with the fixed column order
/// n, norm_x, dist_S, dist_A, norm_Qalpha, fejer_dist.
void write_trace_csv(std::ostream& os, const IterationTrace& trace);

/// One JSON object per line with the full iterate vectors.
void write_trace_jsonl(std::ostream& os, const IterationTrace& trace);

struct RunCommandOptions {
  std::string out_prefix;
  bool full_trace = false;
  std::optional<int> max_iters{};
  std::optional<double> tol{};
  std::optional<std::uint64_t> seed{};
};

/// run: execute the problem file, write <out>.trace.csv and <out>.summary.json
/// (plus <out>.trace.jsonl with full vectors when asked). Exit 0 on
/// converged/finite_termination, 2 on max_iters, 3 on diverged, 1 on bad input.
int cmd_run(const std::string& problem_path, const RunCommandOptions& opts);

/// check: print one ConditionReport JSON per hypothesis plus the
/// transversality pair. Exit 0 on successful evaluation, 1 on bad input.
int cmd_check(const std::string& problem_path, int samples, std::optional<std::uint64_t> seed);

struct ReproduceOptions {
  std::string out_prefix;
  double a_m = 0.6;
  double alpha0 = 1.0;
  double theta = 0.0;  // 0 selects the default pi/4
};

/// reproduce: run the named construction (ex41, ex42, ex43, ex44, fig1) with
/// its oracle and the iteration engine side by side, write a comparison CSV,
/// and print the maximum discrepancy. Exit 0 iff within tolerance.
int cmd_reproduce(const std::string& which, const ReproduceOptions& opts);

struct SweepOptions {
  std::string out_path;
  int grid = 11;
  int max_iters = 20000;
  double tol = 1e-10;
};

/// sweep: walk the parameter curve a = b = 1 - 1/(2(1-c)) over a c-grid in
/// [0, 1/2], run the relaxed method on a fixed battery of instances, and
/// record stop reason and fitted rate per point.
int cmd_sweep(const SweepOptions& opts);

}  // namespace latfeas
