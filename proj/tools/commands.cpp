#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gokit/builtins.hpp"
#include "gokit/equilibria.hpp"
#include "gokit/error.hpp"
#include "gokit/goanalysis.hpp"
#include "gokit/io.hpp"
#include "gokit/liepoisson.hpp"
#include "gokit/rng.hpp"

namespace gokit::cli {

using nlohmann::json;

namespace {

Vector to_vector(const std::vector<double>& xs) {
  return Eigen::Map<const Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

Vector coordinates(const std::string& text, const std::string& flag, Eigen::Index expected) {
  Vector v = to_vector(parse_coordinates(text, flag));
  if (v.size() != expected) {
    throw InvalidInput(flag + " has " + std::to_string(v.size()) + " coordinates, expected " +
                       std::to_string(expected));
  }
  return v;
}

json envelope(const RunConfig& cfg, json result) {
  return {{"config", config_to_json(cfg)}, {"result", std::move(result)}};
}

CommandResult cmd_su3(const RunConfig& cfg) {
  const auto built = builtins::su3_su2(cfg.alpha, cfg.beta);
  io::ModelDocument doc{built.model.algebra(), built.model.k_indices(),
                        built.model.m_indices(), built.form, {}};
  const Polynomial z = Polynomial::variable(8, builtins::su3_index::Z);
  doc.functions.emplace("Y1", builtins::su3_y1());
  doc.functions.emplace("Y2", builtins::su3_y2());
  doc.functions.emplace("half_z_sq", 0.5 * z * z);
  CommandResult out{io::model_to_json(doc), kOk, {}};
  if (built.indefinite) {
    out.diagnostic = "warning: alpha and beta are not both positive; the form is not Riemannian";
  }
  return out;
}

CommandResult cmd_validate(const RunConfig& cfg, const io::ModelDocument& doc) {
  const double tol = cfg.tol.value_or(kJacobiTolerance);
  json r;
  const double jacobi = doc.algebra.jacobi_residual();
  r["jacobi_residual"] = jacobi;
  r["antisymmetric"] = true;
  // Closure is checked here, so build the model without the constructor's gate.
  const HomogeneousModel model(doc.algebra, doc.k_indices, doc.m_indices,
                               std::numeric_limits<double>::infinity());
  r["k_closure_residual"] = model.k_closure_residual();
  r["reductive_residual"] = model.reductive_residual();
  r["reductive_verified"] = model.reductive_verified();
  r["f_rank"] = model.f_rank();
  r["kernel_f_equals_k"] = model.f_rank() + model.k_dim() == model.dim();
  if (doc.form) {
    json f;
    f["kind"] = doc.form->is_quadratic() ? "quadratic" : "polynomial";
    if (doc.form->is_quadratic()) f["positive_definite"] = doc.form->is_positive_definite();
    f["isotropy_invariance_residual"] =
        isotropy_invariance_residual(model, *doc.form, std::max(1, std::min(cfg.samples, 200)), cfg.seed);
    r["form"] = f;
  }
  json fns = json::object();
  for (const auto& [name, h] : doc.functions)
    fns[name] = {{"ad_star_invariance_residual",
                  ad_star_invariance_residual(doc.algebra, h, std::max(1, std::min(cfg.samples, 200)), cfg.seed)}};
  r["functions"] = fns;

  const bool ok = jacobi <= tol && model.k_closure_residual() <= tol;
  r["ok"] = ok;
  CommandResult out{envelope(cfg, r), ok ? kOk : kInvalidInput, {}};
  if (!ok) {
    std::ostringstream os;
    os.precision(6);
    os << "validation failed: jacobi_residual = " << jacobi
       << ", k_closure_residual = " << model.k_closure_residual() << " (tol " << tol << ")";
    out.diagnostic = os.str();
  }
  return out;
}

CommandResult cmd_equilibria(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  const Covector p = coordinates(cfg.p, "--p", model.m_dim());
  const auto set = solve_equilibria_at(model, doc.require_form(), p, cfg.tol);
  return {envelope(cfg, io::to_json(set)), kOk, {}};
}

CommandResult cmd_go(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  const auto report = go_test(model, doc.require_form(), {cfg.samples, cfg.seed, cfg.tol, {}});
  return {envelope(cfg, io::to_json(report)),
          report.verdict == GoVerdict::NotGo ? kVerdictNegative : kOk,
          {}};
}

CommandResult cmd_graph(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  const Covector p = coordinates(cfg.p, "--p", model.m_dim());
  json r;
  if (cfg.from_invariant.empty()) {
    r = io::to_json(min_norm_graph(model, doc.require_form(), p, std::nullopt, cfg.tol));
    r["method"] = "min_norm";
  } else {
    r = io::to_json(graph_from_invariant(model, doc.function(cfg.from_invariant), p, cfg.tol));
    r["method"] = "invariant:" + cfg.from_invariant;
  }
  return {envelope(cfg, r), kOk, {}};
}

CommandResult cmd_natred(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  NatRedOptions opts;
  opts.n_fit = cfg.samples;
  opts.n_verify = cfg.verify;
  opts.seed = cfg.seed;
  if (cfg.tol) opts.tol = *cfg.tol;
  const auto report = natural_reductivity_analysis(model, doc.require_form(), opts);
  return {envelope(cfg, io::to_json(report)),
          report.verdict == NatRedVerdict::NotNaturallyReductive ? kVerdictNegative : kOk,
          {}};
}

CommandResult cmd_co(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  const EnergyForm& form = doc.require_form();
  std::vector<Covector> points;
  if (!cfg.p.empty()) {
    points.push_back(coordinates(cfg.p, "--p", model.m_dim()));
  } else {
    CounterRng rng(cfg.seed, "co_check");
    for (int s = 0; s < cfg.samples; ++s) points.push_back(rng.normal_vector(model.m_dim()));
  }
  double worst = 0.0;
  Covector argmax = points.front();
  for (const auto& p : points) {
    const double r = co_condition_residual(model, form, p);
    if (r > worst) {
      worst = r;
      argmax = p;
    }
  }
  json r = {{"max_residual", worst},
            {"samples", points.size()},
            {"argmax_p", io::vector_to_json(argmax)},
            {"necessary_condition_only", true}};
  return {envelope(cfg, r), kOk, {}};
}

CommandResult cmd_derived(const RunConfig& cfg, const io::ModelDocument& doc) {
  const auto series = doc.algebra.derived_series();
  json terms = json::array();
  for (const auto& s : series) {
    json basis = json::array();
    for (Eigen::Index c = 0; c < s.rank(); ++c) basis.push_back(io::vector_to_json(s.vectors.col(c)));
    terms.push_back({{"rank", s.rank()}, {"basis", basis}});
  }
  json r = {{"series", terms},
            {"length", series.size()},
            {"solvable", series.back().rank() == 0}};
  return {envelope(cfg, r), kOk, {}};
}

CommandResult cmd_orbit(const RunConfig& cfg, const io::ModelDocument& doc) {
  const HomogeneousModel model = doc.model();
  const AlgebraVector a0 = coordinates(cfg.a0, "--a0", model.dim());
  const EnergyForm lagrangian =
      cfg.form_is_lagrangian ? doc.require_form() : legendre_to_hamiltonian(doc.require_form());
  OrbitSearchOptions opts;
  opts.max_iter = cfg.max_iter;
  opts.step = cfg.step;
  opts.maximize = !cfg.minimize;
  if (cfg.tol) opts.tol = *cfg.tol;
  try {
    const auto res = orbit_extremum_search(model, lagrangian, a0, opts);
    json r = {{"converged", true},
              {"a", io::vector_to_json(res.a)},
              {"residual", res.residual},
              {"objective", res.objective},
              {"iterations", res.iterations}};
    return {envelope(cfg, r), kOk, {}};
  } catch (const NoConvergence& e) {
    json r = {{"converged", false},
              {"a", io::vector_to_json(e.best())},
              {"residual", e.residual()},
              {"message", e.what()}};
    return {envelope(cfg, r), kNumericalFailure, e.what()};
  }
}

CommandResult cmd_lp(const RunConfig& cfg, const io::ModelDocument& doc) {
  const Polynomial& h = doc.function(cfg.h);
  const DualVector mu0 = coordinates(cfg.mu0, "--mu0", doc.algebra.dim());
  const Trajectory traj = integrate(doc.algebra, h, mu0, cfg.dt, cfg.t_end);

  std::vector<std::string> names;
  std::vector<Polynomial> fns;
  for (const auto& [name, f] : doc.functions) {
    names.push_back(name);
    fns.push_back(f);
  }
  const auto drift = casimir_drift(traj, fns);
  json drifts = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) drifts[names[i]] = drift[i];

  if (!cfg.csv.empty()) {
    std::ofstream csv(cfg.csv);
    if (!csv) throw InvalidInput("cannot write " + cfg.csv);
    write_trajectory_csv(csv, traj);
  }
  json r = {{"steps", traj.size() - 1},
            {"final_t", traj.back().t},
            {"final_mu", io::vector_to_json(traj.back().mu)},
            {"relative_drift", drifts}};
  return {envelope(cfg, r), kOk, {}};
}

}  // namespace

json config_to_json(const RunConfig& c) {
  json j = {{"command", c.command},  {"model", c.model_path}, {"samples", c.samples},
            {"seed", c.seed},        {"alpha", c.alpha},      {"beta", c.beta},
            {"p", c.p},              {"a0", c.a0},            {"mu0", c.mu0},
            {"h", c.h},              {"from_invariant", c.from_invariant},
            {"dt", c.dt},            {"t_end", c.t_end},      {"max_iter", c.max_iter},
            {"step", c.step},        {"minimize", c.minimize},
            {"form_is_lagrangian", c.form_is_lagrangian},     {"verify", c.verify},
            {"csv", c.csv},          {"output", c.output}};
  j["tol"] = c.tol ? json(*c.tol) : json("default");
  return j;
}

std::vector<double> parse_coordinates(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidInput(flag + ": empty coordinate");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput(flag + ": \"" + item + "\" is not a number");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw InvalidInput(flag + ": \"" + item + "\" is not a finite number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput(flag + ": no coordinates given");
  return out;
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "su3") return cmd_su3(cfg);
  const io::ModelDocument doc = io::load_model(cfg.model_path);
  if (cfg.command == "validate") return cmd_validate(cfg, doc);

  // Everything else needs a sound algebra.
  const double jacobi = doc.algebra.jacobi_residual();
  if (jacobi > kJacobiTolerance) {
    std::ostringstream os;
    os << cfg.model_path << ": Jacobi identity fails (jacobi_residual = " << jacobi << ")";
    throw InvalidInput(os.str());
  }
  if (cfg.command == "derived-series") return cmd_derived(cfg, doc);
  if (cfg.command == "lp-integrate") return cmd_lp(cfg, doc);
  if (cfg.command == "equilibria") return cmd_equilibria(cfg, doc);
  if (cfg.command == "go-test") return cmd_go(cfg, doc);
  if (cfg.command == "graph") return cmd_graph(cfg, doc);
  if (cfg.command == "natred") return cmd_natred(cfg, doc);
  if (cfg.command == "co-check") return cmd_co(cfg, doc);
  if (cfg.command == "orbit-search") return cmd_orbit(cfg, doc);
  throw InvalidInput("unknown command " + cfg.command);
}

}  // namespace gokit::cli
