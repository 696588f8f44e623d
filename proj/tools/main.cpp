#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hog/cli.hpp"
#include "hog/config.hpp"
#include "hog/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"balanced-growth solver and verifier for a two-capital growth model "
               "with distraction-driven labor supply"};
  app.require_subcommand(1);

  std::string config_path;
  hog::cli::RatesOptions rates_opts;
  hog::cli::SimulateOptions sim_opts;
  hog::cli::VerifyCommandOptions verify_opts;
  hog::cli::GradcheckOptions grad_opts;

  auto* rates = app.add_subcommand("rates", "print closed-form balanced-growth rates");
  rates->add_option("config", config_path, "configuration file")->required();
  rates->add_flag("--csv", rates_opts.csv, "emit machine-readable CSV");
  rates->add_flag("--strict", rates_opts.strict,
                  "exit nonzero when validation flags fail");

  auto* simulate =
      app.add_subcommand("simulate", "integrate the optimality system, write CSV");
  simulate->add_option("config", config_path, "configuration file")->required();
  simulate->add_option("--perturb-lambda2", sim_opts.lambda2_scale,
                       "scale the initial lambda2 (negative control)");

  auto* verify =
      app.add_subcommand("verify", "check the closed-form claims on a simulated path");
  verify->add_option("config", config_path, "configuration file")->required();
  verify->add_option("--perturb-lambda2", verify_opts.lambda2_scale,
                     "scale the initial lambda2 (negative control)");

  auto* sweep =
      app.add_subcommand("sweep", "evaluate closed forms over a parameter grid");
  sweep->add_option("config", config_path, "configuration file")->required();

  auto* gradcheck = app.add_subcommand(
      "gradcheck", "compare analytic Hamiltonian partials with finite differences");
  gradcheck->add_option("config", config_path, "configuration file")->required();
  gradcheck->add_option("--seed", grad_opts.seed, "random seed");
  gradcheck->add_option("--step", grad_opts.step, "relative finite-difference step");
  gradcheck->add_option("--points", grad_opts.points, "number of sample points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const hog::RunConfig cfg = hog::load_config_file(config_path);
    if (*rates) return hog::cli::cmd_rates(cfg, rates_opts, std::cout);
    if (*simulate) return hog::cli::cmd_simulate(cfg, sim_opts, std::cout);
    if (*verify) return hog::cli::cmd_verify(cfg, verify_opts, std::cout);
    if (*sweep) return hog::cli::cmd_sweep(cfg, std::cout);
    if (*gradcheck) return hog::cli::cmd_gradcheck(cfg, grad_opts, std::cout);
  } catch (const hog::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hog::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const hog::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
