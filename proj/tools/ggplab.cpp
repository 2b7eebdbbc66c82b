#include <CLI11.hpp>

#include <iostream>

#include "ggplab/suites.hpp"

using namespace ggplab;

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical verification suites for the stability/orbit toolkit"};
  app.set_help_flag("--help", "print usage");  // frees -h for the wavelength flag

  report::RunConfig cfg;
  std::vector<std::string> tol_args;
  app.add_option("--suite", cfg.suite, "detid|stability|geometry|volume|kirillov|star|hecke|exponent|all")
      ->default_val("all");
  app.add_option("--n", cfg.n, "rank parameter (tau is (n+1) x (n+1))")->default_val(3);
  app.add_option("--trials", cfg.trials, "trial count for randomized checks")->default_val(100);
  app.add_option("--seed", cfg.seed, "RNG seed (echoed into the report)")
      ->default_val(report::kDefaultSeed);
  app.add_option("--q", cfg.q, "residue cardinality for the p-adic suites")->default_val(101.0);
  app.add_option("--theta", cfg.theta, "temperedness parameter in [0, 1/2)")->default_val(0.0);
  app.add_option("--h", cfg.h, "wavelength parameter for the operator suites")->default_val(0.2);
  app.add_option("--tol", tol_args, "tolerance override KEY=VALUE (repeatable)");
  app.add_option("--out", cfg.output_path, "write the JSON report to this path (atomic)");
  app.add_option("--csv", cfg.csv_path, "base path for per-suite CSV tables");
  app.add_option("--matrix", cfg.matrix_path, "JSON matrix of \"p/q\" strings to inject");

  CLI11_PARSE(app, argc, argv);

  for (const auto& kv : tol_args) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad --tol argument (want KEY=VALUE): " << kv << "\n";
      return 2;
    }
    try {
      cfg.tol[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "bad --tol value: " << kv << "\n";
      return 2;
    }
  }

  report::Report rep;
  try {
    rep = suites::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "suite execution failed: " << e.what() << "\n";
    return 2;
  }

  std::string body = rep.to_json().dump(2) + "\n";
  try {
    if (!cfg.output_path.empty())
      report::write_atomically(cfg.output_path, body);
    else
      std::cout << body;
    if (!cfg.csv_path.empty()) report::write_csv_tables(rep, cfg.csv_path);
  } catch (const std::exception& e) {
    std::cerr << "i/o failure: " << e.what() << "\n";
    return 2;
  }

  int failed = 0;
  for (const auto& c : rep.checks)
    if (!c.pass) ++failed;
  if (failed) {
    std::cerr << failed << " check(s) failed\n";
    return 1;
  }
  return 0;
}
