#include <fstream>
#include <iostream>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "commands.hpp"
#include "gokit/error.hpp"

namespace {

using gokit::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_model) {
  auto* model = sub->add_option("--model,-m", cfg.model_path, "Model JSON file");
  if (needs_model) model->required();
  sub->add_option("--samples", cfg.samples, "Number of random samples")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for the counter-based generator");
  sub->add_option("--tol", cfg.tol, "Absolute tolerance (default: scale-aware)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gokit: relative equilibria and geodesic-orbit diagnostics on G/K"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* su3 = app.add_subcommand("su3", "Emit the built-in SU(3)/SU(2) model file");
  su3->add_option("--alpha", cfg.alpha, "Coefficient of |e|^2")->required();
  su3->add_option("--beta", cfg.beta, "Coefficient of z^2")->required();
  add_common(su3, cfg, false);

  auto* validate = app.add_subcommand("validate", "Check Jacobi, antisymmetry and reductivity");
  add_common(validate, cfg, true);

  auto* equilibria = app.add_subcommand("equilibria", "Solution set of relative equilibria at p");
  equilibria->add_option("--p", cfg.p, "Momentum, comma-separated m* coordinates")->required();
  add_common(equilibria, cfg, true);

  auto* go = app.add_subcommand("go-test", "Sampled geodesic-orbit test");
  add_common(go, cfg, true);

  auto* graph = app.add_subcommand("graph", "Geodesic graph value at p");
  graph->add_option("--p", cfg.p, "Momentum, comma-separated m* coordinates")->required();
  graph->add_option("--from-invariant", cfg.from_invariant,
                    "Use xi = dh(f*(p)) for the named model function");
  add_common(graph, cfg, true);

  auto* natred = app.add_subcommand("natred", "Natural reductivity analysis");
  natred->add_option("--verify", cfg.verify, "Fresh verification samples")
      ->check(CLI::PositiveNumber);
  add_common(natred, cfg, true);

  auto* co = app.add_subcommand("co-check", "Residual of the coadjoint orthogonality condition");
  co->add_option("--p", cfg.p, "Single momentum (default: random samples)");
  add_common(co, cfg, true);

  auto* derived = app.add_subcommand("derived-series", "Derived series and solvability");
  add_common(derived, cfg, true);

  auto* orbit = app.add_subcommand("orbit-search", "Extremise the Lagrangian over an adjoint orbit");
  orbit->add_option("--a0", cfg.a0, "Start vector, comma-separated g coordinates")->required();
  orbit->add_option("--max-iter", cfg.max_iter, "Iteration cap")->check(CLI::NonNegativeNumber);
  orbit->add_option("--step", cfg.step, "Initial step")->check(CLI::PositiveNumber);
  orbit->add_flag("--minimize", cfg.minimize, "Descend instead of ascend");
  orbit->add_flag("--form-is-lagrangian", cfg.form_is_lagrangian,
                  "Treat the model form as L_o instead of Legendre-transforming H_o");
  add_common(orbit, cfg, true);

  auto* lp = app.add_subcommand("lp-integrate", "RK4 Lie-Poisson trajectory on g*");
  lp->set_help_flag("--help", "Print this help message and exit");
  lp->add_option("--h", cfg.h, "Name of a model function used as Hamiltonian")->required();
  lp->add_option("--mu0", cfg.mu0, "Initial point, comma-separated g* coordinates")->required();
  lp->add_option("--dt", cfg.dt, "Step size")->check(CLI::PositiveNumber);
  lp->add_option("--t-end", cfg.t_end, "Final time")->check(CLI::PositiveNumber);
  lp->add_option("--csv", cfg.csv, "Also write the trajectory as CSV");
  add_common(lp, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gokit::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  gokit::cli::CommandResult result;
  try {
    result = gokit::cli::run_command(cfg);
  } catch (const gokit::Error& e) {
    std::cerr << "error (" << gokit::to_string(e.kind()) << "): " << e.what() << "\n";
    const bool bad_input = e.kind() == gokit::ErrorKind::InvalidInput ||
                           e.kind() == gokit::ErrorKind::DegenerateLagrangian;
    return bad_input ? gokit::cli::kInvalidInput : gokit::cli::kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gokit::cli::kNumericalFailure;
  }

  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  const std::string text = result.document.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return gokit::cli::kInvalidInput;
    }
    out << text;
  }
  return result.exit_code;
}
