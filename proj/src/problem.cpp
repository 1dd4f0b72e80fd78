#include "latfeas/problem.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "latfeas/oracles.hpp"

namespace latfeas {

namespace {

using nlohmann::json;

Vector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of numbers");
  Vector v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const auto& e : j) {
    if (!e.is_number()) throw std::invalid_argument(where + ": expected a number");
    v[i++] = e.get<double>();
  }
  return v;
}

Matrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + ": expected a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = -1;
  Matrix m;
  for (Index r = 0; r < rows; ++r) {
    Vector row = parse_vector(j[static_cast<size_t>(r)], where);
    if (cols < 0) {
      cols = row.size();
      m.resize(rows, cols);
    } else if (row.size() != cols) {
      throw std::invalid_argument(where + ": ragged rows");
    }
    m.row(r) = row.transpose();
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json matrix_rows_to_json(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

const json& require_field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(where + ": missing field '" + name + "'");
  return *it;
}

std::ostream& csv_stream(std::ostream& os) {
  os << std::setprecision(17);
  return os;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  ProblemFile p;
  p.dim = require_field(j, "dim", "problem").get<Index>();
  if (p.dim < 1) throw std::invalid_argument("problem: dim must be >= 1");

  const json& cone = require_field(j, "cone", "problem");
  const std::string cone_type = require_field(cone, "type", "problem.cone").get<std::string>();
  if (cone_type == "lattice") {
    p.cone = LatticeCone{p.dim};
  } else if (cone_type == "simplicial") {
    Matrix gens = parse_matrix(require_field(cone, "generators", "problem.cone"),
                               "problem.cone.generators");
    if (gens.cols() != p.dim)
      throw std::invalid_argument("problem.cone.generators: generator dimension != dim");
    p.cone = SimplicialCone(gens.transpose());  // rows in the file, columns internally
  } else {
    throw std::invalid_argument("problem.cone.type: expected 'lattice' or 'simplicial'");
  }

  const json& aff = require_field(j, "affine", "problem");
  Matrix rows = parse_matrix(require_field(aff, "rows", "problem.affine"), "problem.affine.rows");
  Vector rhs = parse_vector(require_field(aff, "rhs", "problem.affine"), "problem.affine.rhs");
  if (rows.cols() != p.dim) throw std::invalid_argument("problem.affine.rows: row dimension != dim");
  p.affine = AffineSubspace(std::move(rows), std::move(rhs));

  p.x0 = parse_vector(require_field(j, "x0", "problem"), "problem.x0");
  if (p.x0.size() != p.dim) throw std::invalid_argument("problem.x0: dimension != dim");

  const json& method = require_field(j, "method", "problem");
  const std::string name = require_field(method, "name", "problem.method").get<std::string>();
  if (name == "map") {
    p.method = MethodSpec::map();
  } else if (name == "dr") {
    p.method = MethodSpec::dr();
  } else if (name == "relaxed") {
    AlgorithmParams params;
    params.a = method.value("a", 0.0);
    params.b = method.value("b", 0.0);
    params.c = method.value("c", 0.5);
    params.validate();
    p.method = MethodSpec::relaxed(params);
  } else {
    throw std::invalid_argument("problem.method.name: expected 'map', 'dr' or 'relaxed'");
  }

  if (j.contains("opts")) {
    const json& opts = j["opts"];
    p.opts.max_iters = opts.value("max_iters", 1000);
    p.opts.tol = opts.value("tol", 1e-9);
    p.seed = opts.value("seed", std::uint64_t{0});
    if (p.opts.max_iters < 1) throw std::invalid_argument("problem.opts.max_iters: must be >= 1");
    if (!(p.opts.tol >= 0.0)) throw std::invalid_argument("problem.opts.tol: must be >= 0");
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return parse_problem(j);
}

json problem_to_json(const ProblemFile& p) {
  json j;
  j["dim"] = p.dim;
  if (std::holds_alternative<LatticeCone>(p.cone)) {
    j["cone"] = {{"type", "lattice"}};
  } else if (const auto* sc = std::get_if<SimplicialCone>(&p.cone)) {
    j["cone"] = {{"type", "simplicial"},
                 {"generators", matrix_rows_to_json(sc->generators().transpose())}};
  } else {
    throw std::invalid_argument("problem_to_json: cone variant not representable in a file");
  }
  j["affine"] = {{"rows", matrix_rows_to_json(p.affine.rows())},
                 {"rhs", vector_to_json(p.affine.rhs())}};
  j["x0"] = vector_to_json(p.x0);
  switch (p.method.kind) {
    case Method::map: j["method"] = {{"name", "map"}}; break;
    case Method::dr: j["method"] = {{"name", "dr"}}; break;
    case Method::relaxed:
      j["method"] = {{"name", "relaxed"},
                     {"a", p.method.params.a},
                     {"b", p.method.params.b},
                     {"c", p.method.params.c}};
      break;
  }
  j["opts"] = {{"max_iters", p.opts.max_iters}, {"tol", p.opts.tol}, {"seed", p.seed}};
  return j;
}

json report_to_json(const ConditionReport& report) {
  json j;
  j["condition"] = to_string(report.condition);
  j["verdict"] = to_string(report.verdict);
  if (report.certificate)
    j["certificate"] = vector_to_json(*report.certificate);
  else
    j["certificate"] = nullptr;
  j["seed"] = report.seed;
  return j;
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
  csv_stream(os) << "n,norm_x,dist_S,dist_A,norm_Qalpha,fejer_dist\n";
  for (const StepRecord& rec : trace.records) {
    os << rec.n << ',' << rec.norm_x << ',' << rec.dist_S << ',' << rec.dist_A << ','
       << rec.norm_alpha_img << ',' << rec.fejer_dist << '\n';
  }
}

void write_trace_jsonl(std::ostream& os, const IterationTrace& trace) {
  for (const StepRecord& rec : trace.records) {
    json j;
    j["n"] = rec.n;
    j["x"] = vector_to_json(rec.x);
    j["kappa"] = vector_to_json(rec.kappa);
    j["lambda_img"] = vector_to_json(rec.lambda_img);
    j["sigma"] = vector_to_json(rec.sigma);
    j["alpha_img"] = vector_to_json(rec.alpha_img);
    os << j.dump() << '\n';
  }
}

namespace {

int exit_code_for(StopReason r) {
  switch (r) {
    case StopReason::converged:
    case StopReason::finite_termination: return 0;
    case StopReason::max_iters: return 2;
    case StopReason::diverged: return 3;
  }
  return 1;
}

std::optional<double> trace_fitted_rate(const IterationTrace& trace) {
  if (trace.records.size() < 30 || trace.records.front().x.size() == 0) return std::nullopt;
  std::vector<double> dists;
  dists.reserve(trace.records.size());
  for (const StepRecord& rec : trace.records)
    dists.push_back((rec.x - trace.final_point).norm());
  // The last stretch measures the distance to its own endpoint and collapses
  // artificially; fit on the head only.
  const int window_hi = static_cast<int>(trace.records.size()) - 1 -
                        std::max(10, static_cast<int>(trace.records.size()) / 10);
  if (window_hi < 15) return std::nullopt;
  const double rate = fit_geometric_rate(dists, 10, window_hi);
  if (rate <= 0.0 || rate >= 1.5 || !std::isfinite(rate)) return std::nullopt;
  return rate;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

}  // namespace

int cmd_run(const std::string& problem_path, const RunCommandOptions& cmd) {
  ProblemFile p;
  try {
    p = load_problem(problem_path);
    if (cmd.max_iters) p.opts.max_iters = *cmd.max_iters;
    if (cmd.tol) p.opts.tol = *cmd.tol;
    if (cmd.seed) p.seed = *cmd.seed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  IterationTrace trace = run(p.method, p.cone, p.affine, p.x0, p.opts);

  json summary;
  summary["stop_reason"] = to_string(trace.stop_reason);
  summary["iterations"] = trace.records.empty() ? 0 : trace.records.back().n;
  summary["final_dist_S"] = trace.records.back().dist_S;
  summary["final_dist_A"] = trace.records.back().dist_A;
  if (auto rate = trace_fitted_rate(trace)) summary["fitted_rate"] = *rate;

  try {
    const std::string prefix = cmd.out_prefix.empty() ? "latfeas_run" : cmd.out_prefix;
    auto csv = open_out(prefix + ".trace.csv");
    write_trace_csv(csv, trace);
    auto js = open_out(prefix + ".summary.json");
    js << summary.dump(2) << '\n';
    if (cmd.full_trace) {
      auto jsonl = open_out(prefix + ".trace.jsonl");
      write_trace_jsonl(jsonl, trace);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::cout << summary.dump(2) << std::endl;
  return exit_code_for(trace.stop_reason);
}

int cmd_check(const std::string& problem_path, int samples, std::optional<std::uint64_t> seed) {
  ProblemFile p;
  try {
    p = load_problem(problem_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  const auto* lattice = std::get_if<LatticeCone>(&p.cone);
  if (!lattice) {
    std::cerr << "error: condition checkers are defined for the lattice cone only\n";
    return 1;
  }
  const std::uint64_t use_seed = seed.value_or(p.seed);

  std::cout << report_to_json(check_range_cap_cone(p.affine, *lattice)).dump() << '\n';
  std::cout << report_to_json(check_Q_maps_S(p.affine, *lattice)).dump() << '\n';
  std::cout << report_to_json(check_QAminusS_signed(p.affine, *lattice, samples, use_seed)).dump()
            << '\n';
  std::cout << report_to_json(check_codim_one(p.affine)).dump() << '\n';

  TransversalityReport tv = check_transversality_equivalence(p.affine, *lattice);
  json pair;
  pair["condition"] = "transversality";
  pair["lhs"] = to_string(tv.lhs);
  pair["rhs"] = to_string(tv.rhs);
  pair["seed"] = use_seed;
  std::cout << pair.dump() << std::endl;
  return 0;
}

namespace {

int reproduce_ex41(const ReproduceOptions& opts) {
  const Ex41Config cfg = make_ex41(opts.a_m, opts.alpha0);
  AffineSubspace affine = ex41_affine(cfg);
  ConeSpec cone = LatticeCone{cfg.a.size()};

  RunOptions ro;
  ro.max_iters = 200;
  ro.tol = 0.0;
  IterationTrace trace = run(MethodSpec::map(), cone, affine, ex41_start(cfg), ro);

  double max_err = 0.0;
  std::vector<double> dists;
  auto csv = open_out(opts.out_prefix + ".csv");
  csv_stream(csv) << "n,engine_norm,oracle_norm,err\n";
  for (const StepRecord& rec : trace.records) {
    const Vector oracle = ex41_closed_form(cfg, rec.n);
    const double err = (rec.x - oracle).norm();
    max_err = std::max(max_err, err);
    dists.push_back(rec.norm_x);
    csv << rec.n << ',' << rec.norm_x << ',' << oracle.norm() << ',' << err << '\n';
  }
  const double rate = fit_geometric_rate(dists);
  std::cout << "ex41 a_m=" << opts.a_m << " exact rate " << cfg.rate() << " fitted rate " << rate
            << " max termwise discrepancy " << max_err << '\n';
  return (max_err <= 1e-9 && std::abs(rate - cfg.rate()) <= 1e-3) ? 0 : 1;
}

int reproduce_ex42(const ReproduceOptions& opts) {
  const Ex41Config cfg = make_ex41(opts.a_m, opts.alpha0);
  AffineSubspace affine = ex41_affine(cfg);
  ConeSpec cone = LatticeCone{cfg.a.size()};

  RunOptions ro;
  ro.max_iters = 400;
  ro.tol = 1e-9;
  IterationTrace trace = run(MethodSpec::dr(), cone, affine, ex41_start(cfg), ro);

  const Ex42Result rec = ex42_recurrence(opts.a_m, opts.alpha0, 400);
  const int terms = std::max<int>(51, static_cast<int>(rec.states.size()));
  const std::vector<double> gf = ex42_generating_function(opts.a_m, opts.alpha0, terms);
  const OscillationFit fit = ex42_oscillation_fit(opts.a_m, opts.alpha0);

  double max_engine = 0.0;
  for (const Ex42State& st : rec.states) {
    if (!(st.alpha - st.beta * opts.a_m > 0.0)) break;
    if (static_cast<size_t>(st.n) >= trace.records.size()) break;
    Vector oracle = -st.beta * cfg.a;
    oracle[cfg.m] += st.alpha;
    max_engine = std::max(max_engine, (trace.records[static_cast<size_t>(st.n)].x - oracle).norm());
  }
  double max_gf = 0.0;
  double max_osc = 0.0;
  auto csv = open_out(opts.out_prefix + ".csv");
  csv_stream(csv) << "n,alpha,beta,closed_form,gf_coeff\n";
  for (const Ex42State& st : rec.states) {
    const double osc = fit.eval(st.n);
    const double gfc = gf[static_cast<size_t>(st.n)];
    max_gf = std::max(max_gf, std::abs(gfc - st.alpha));
    if (st.n <= 50)
      max_osc = std::max(max_osc, std::abs(osc - st.alpha) / std::max(1.0, std::abs(st.alpha)));
    csv << st.n << ',' << st.alpha << ',' << st.beta << ',' << osc << ',' << gfc << '\n';
  }

  std::cout << "ex42 a_m=" << opts.a_m;
  if (rec.first_nonpositive)
    std::cout << " first nonpositive alpha at n0=" << *rec.first_nonpositive;
  std::cout << " stop=" << to_string(trace.stop_reason) << " engine discrepancy " << max_engine
            << " gf discrepancy " << max_gf << " oscillation discrepancy " << max_osc << '\n';

  const bool ok = rec.first_nonpositive.has_value() &&
                  trace.stop_reason == StopReason::finite_termination && max_engine <= 1e-9 &&
                  max_gf <= 1e-10 && max_osc <= 1e-8;
  return ok ? 0 : 1;
}

int reproduce_ex43(const ReproduceOptions& opts) {
  Ex43Instance inst = make_ex43_instance();

  std::mt19937_64 rng(0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double sample_radius = (1.0 - 1e-6) * inst.radius;
  double max_diff = 0.0;
  auto csv = open_out(opts.out_prefix + ".csv");
  csv_stream(csv) << "sample,projection_diff\n";
  for (int k = 0; k < 1000; ++k) {
    Vector dir(3);
    for (Index i = 0; i < 3; ++i) dir[i] = gauss(rng);
    dir /= dir.norm();
    Vector y = inst.x_star + sample_radius * dir;
    const double diff = (inst.cone.project(y) - inst.span.project(y)).norm();
    max_diff = std::max(max_diff, diff);
    csv << k << ',' << diff << '\n';
  }

  // Douglas-Rachford from inside the ball: the cone and span sequences must
  // coincide stepwise while both stay in the ball.
  Vector x0 = inst.x_star;
  x0[0] += 0.5 * inst.radius;
  RunOptions ro;
  ro.max_iters = 200;
  ro.tol = 0.0;
  IterationTrace cone_trace = run(MethodSpec::dr(), ConeSpec(inst.cone), inst.affine, x0, ro);
  IterationTrace span_trace = run(MethodSpec::dr(), ConeSpec(inst.span), inst.affine, x0, ro);
  double max_step_diff = 0.0;
  const size_t steps = std::min(cone_trace.records.size(), span_trace.records.size());
  for (size_t i = 0; i < steps; ++i) {
    if ((cone_trace.records[i].x - inst.x_star).norm() > inst.radius) break;
    max_step_diff =
        std::max(max_step_diff, (cone_trace.records[i].x - span_trace.records[i].x).norm());
  }

  std::cout << "ex43 radius " << inst.radius << " max projection discrepancy " << max_diff
            << " max stepwise discrepancy " << max_step_diff << '\n';
  return (max_diff <= 1e-9 && max_step_diff <= 1e-9) ? 0 : 1;
}

int reproduce_ex44(const ReproduceOptions& opts) {
  const double theta = opts.theta > 0.0 ? opts.theta : std::numbers::pi / 4.0;
  Vector x0(2);
  x0 << 1.0, 0.7;
  Ex44Result lines = ex44_two_lines(theta, x0);

  Vector y0(2);
  y0 << 0.4, 1.3;
  IterationTrace cone_trace = ex44_cone_instance(y0, 1000);
  Ex44ConeInstance inst = make_ex44_cone_instance();
  bool positive_dist = true;
  bool fejer = true;
  double prev = std::numeric_limits<double>::infinity();
  auto csv = open_out(opts.out_prefix + ".csv");
  csv_stream(csv) << "n,dist_to_intersection\n";
  for (const StepRecord& rec : cone_trace.records) {
    const double d = (rec.x - inst.intersection).norm();
    if (d <= 0.0) positive_dist = false;
    if (d > prev + 1e-10) fejer = false;
    prev = d;
    csv << rec.n << ',' << d << '\n';
  }
  // At the standard tolerance the run converges asymptotically; it must not
  // be classified as finitely terminating the way fig1 is.
  RunOptions std_opts;
  std_opts.max_iters = 1000;
  std_opts.tol = 1e-9;
  IterationTrace std_trace =
      run(MethodSpec::dr(), ConeSpec(inst.cone), inst.affine, y0, std_opts);
  const bool no_finite = std_trace.stop_reason == StopReason::converged;

  std::cout << "ex44 theta=" << theta << " fitted rate " << lines.fitted_rate << " target "
            << std::cos(theta) << "; cone instance: " << to_string(cone_trace.stop_reason)
            << (positive_dist ? ", distance stays positive" : ", reached the intersection")
            << '\n';
  const bool ok = std::abs(lines.fitted_rate - std::cos(theta)) <= 0.02 && no_finite &&
                  positive_dist && fejer;
  return ok ? 0 : 1;
}

int reproduce_fig1(const ReproduceOptions& opts) {
  Matrix row(1, 2);
  row << 1.0, 1.0;
  Vector rhs(1);
  rhs[0] = 2.0;
  AffineSubspace affine(std::move(row), std::move(rhs));
  ConeSpec cone = LatticeCone{2};
  Vector x0(2);
  x0 << -0.7, 3.6;

  RunOptions ro;
  ro.max_iters = 100;
  ro.tol = 1e-9;
  IterationTrace trace = run(MethodSpec::dr(), cone, affine, x0, ro);
  auto csv = open_out(opts.out_prefix + ".csv");
  write_trace_csv(csv, trace);

  std::cout << "fig1 stop=" << to_string(trace.stop_reason) << " after "
            << trace.records.back().n << " iterations, final dist_S "
            << trace.records.back().dist_S << " dist_A " << trace.records.back().dist_A << '\n';
  return trace.stop_reason == StopReason::finite_termination ? 0 : 1;
}

}  // namespace

int cmd_reproduce(const std::string& which, const ReproduceOptions& opts_in) {
  ReproduceOptions opts = opts_in;
  if (opts.out_prefix.empty()) opts.out_prefix = "latfeas_" + which;
  try {
    if (which == "ex41") return reproduce_ex41(opts);
    if (which == "ex42") return reproduce_ex42(opts);
    if (which == "ex43") return reproduce_ex43(opts);
    if (which == "ex44") return reproduce_ex44(opts);
    if (which == "fig1") return reproduce_fig1(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "error: unknown reproduction target '" << which
            << "' (expected ex41, ex42, ex43, ex44 or fig1)\n";
  return 1;
}

namespace {

struct SweepInstance {
  std::string name;
  ConeSpec cone;
  AffineSubspace affine;
  Vector x0;
};

std::vector<SweepInstance> sweep_battery() {
  std::vector<SweepInstance> battery;

  {
    Matrix row(1, 2);
    row << 1.0, 1.0;
    Vector rhs(1);
    rhs[0] = 2.0;
    Vector x0(2);
    x0 << -0.7, 3.6;
    battery.push_back({"fig1", LatticeCone{2}, AffineSubspace(row, rhs), x0});
  }
  {
    Vector t(4);
    t << 1.0, -1.0, 0.7, -0.4;
    t /= t.norm();
    Vector feasible(4);
    feasible << 1.0, 0.5, 0.0, 0.2;
    Matrix row = t.transpose();
    Vector rhs(1);
    rhs[0] = t.dot(feasible);
    Vector x0(4);
    x0 << 2.0, -1.0, 1.0, 0.0;
    battery.push_back({"mixed_codim1", LatticeCone{4}, AffineSubspace(row, rhs), x0});
  }
  {
    const Ex41Config cfg = make_ex41(0.6, 1.0);
    battery.push_back({"ex41_a06", LatticeCone{2}, ex41_affine(cfg), ex41_start(cfg)});
  }
  {
    Matrix rows(2, 6);
    rows.row(0) << 1.0, -0.5, 0.0, 0.3, -0.2, 0.1;
    rows.row(1) << 0.0, 0.4, -1.0, 0.2, 0.6, -0.3;
    Vector feasible(6);
    feasible << 0.5, 1.0, 0.2, 0.0, 0.3, 0.7;
    Vector rhs = rows * feasible;
    Vector x0(6);
    x0 << 1.0, -2.0, 0.5, 0.0, 3.0, -1.0;
    battery.push_back({"mixed_codim2", LatticeCone{6}, AffineSubspace(rows, rhs), x0});
  }
  return battery;
}

}  // namespace

int cmd_sweep(const SweepOptions& opts) {
  if (opts.grid < 1) {
    std::cerr << "error: sweep grid must have at least one point\n";
    return 1;
  }
  std::vector<SweepInstance> battery;
  std::ofstream csv;
  try {
    battery = sweep_battery();
    csv = open_out(opts.out_path.empty() ? "latfeas_sweep.csv" : opts.out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  csv_stream(csv) << "c,a,b,instance,stop_reason,iterations,fitted_rate\n";

  for (int g = 0; g < opts.grid; ++g) {
    const double c = opts.grid == 1 ? 0.0 : 0.5 * g / (opts.grid - 1);
    const double ab = 1.0 - 1.0 / (2.0 * (1.0 - c));
    if (ab < 0.0 || ab >= 1.0 || c >= 1.0) {
      std::cerr << "warning: skipping c=" << c << " (a=b=" << ab
                << " falls outside the feasible segment)\n";
      continue;
    }
    AlgorithmParams params{ab, ab, c};
    for (const SweepInstance& inst : battery) {
      RunOptions ro;
      ro.max_iters = opts.max_iters;
      ro.tol = opts.tol;
      IterationTrace trace = run(MethodSpec::relaxed(params), inst.cone, inst.affine, inst.x0, ro);
      const auto rate = trace_fitted_rate(trace);
      csv << c << ',' << ab << ',' << ab << ',' << inst.name << ','
          << to_string(trace.stop_reason) << ',' << trace.records.back().n << ',';
      if (rate)
        csv << *rate;
      else
        csv << "nan";
      csv << '\n';
    }
  }
  std::cout << "sweep written to " << (opts.out_path.empty() ? "latfeas_sweep.csv" : opts.out_path)
            << '\n';
  return 0;
}

}  // namespace latfeas
