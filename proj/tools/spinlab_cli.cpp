// spinlab: verification suites for twisted spinor algebra.
//
// Usage:
//   spinlab <suite> [--n N] [--m M] [--r R] [--s S] [--modes K]
//           [--holonomy a1,a2,...] [--trials T] [--seed S] [--tol EPS]
//           [--out FILE.json] [--format json|markdown]
//
// Suites: clifford, gamma, purity, flags, curvature, torus, all.
// Exit code 0 when every check passes, 1 on any failure, 2 on usage errors.
// SPINLAB_SEED overrides --seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinlab/report.hpp"
#include "spinlab/suites.hpp"

namespace {

std::vector<double> parse_holonomy(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlab: numerical verification of twisted spinor algebra"};
  app.require_subcommand(1);

  spinlab::SuiteConfig cfg;
  std::string holonomy_text;
  std::string out_path;
  std::string format = "json";

  const std::vector<std::string> suite_names = {"clifford", "gamma",     "purity", "flags",
                                                "curvature", "torus",    "all"};
  std::string chosen;
  for (const auto& name : suite_names) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    sub->add_option("--n", cfg.n, "ambient dimension override");
    sub->add_option("--m", cfg.m, "complex rank override");
    sub->add_option("--r", cfg.r, "twist rank override");
    sub->add_option("--s", cfg.s, "flag s parameter (fixed to 1 in the flag suite)");
    sub->add_option("--modes", cfg.mode_cutoff, "Fourier mode cutoff K");
    sub->add_option("--holonomy", holonomy_text, "comma-separated holonomy vector");
    sub->add_option("--trials", cfg.trials, "trials per randomized check");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--tol", cfg.tolerance, "residual tolerance");
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    sub->callback([&chosen, name]() { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env_seed = std::getenv("SPINLAB_SEED")) {
    try {
      cfg.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "spinlab: bad SPINLAB_SEED value\n";
      return 2;
    }
  }
  if (!holonomy_text.empty()) {
    try {
      cfg.holonomy = parse_holonomy(holonomy_text);
    } catch (const std::exception&) {
      std::cerr << "spinlab: bad --holonomy value\n";
      return 2;
    }
  }

  std::cerr << "[spinlab] suite=" << chosen << " seed=" << cfg.seed
            << " tol=" << cfg.tolerance << "\n";
  spinlab::suites::SuiteRun run;
  try {
    run = spinlab::suites::run_suite(chosen, cfg);
  } catch (const std::exception& e) {
    std::cerr << "spinlab: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "[spinlab] " << (run.passed ? "all checks passed" : "failures detected") << "\n";

  const std::string payload = format == "markdown" ? spinlab::to_markdown(run.report)
                                                   : run.report.dump(2) + "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "spinlab: cannot open " << out_path << "\n";
      return 2;
    }
    out << payload;
  } else {
    std::cout << payload;
  }
  return run.passed ? 0 : 1;
}
