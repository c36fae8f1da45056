// pauliperiod: Pauli periodicity of Cliffords, controlled-jump verification,
// exact Clifford+T lowering, and catalyst-protocol simulation.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pauliperiod/cli.hpp"

namespace pp = pauliperiod;
namespace ppc = pauliperiod::cli;

int main(int argc, char** argv) {
  CLI::App app{"Pauli periodicity and controlled Cliffords"};
  app.require_subcommand(1);

  ppc::Options opt;
  opt.budget = ppc::env_budget(opt.budget);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string path, family_name, out_path;
  unsigned n = 0, k = 0;
  std::size_t trials = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", opt.cap, "oracle level cap");
    sub->add_option("--budget", opt.budget, "oracle leaf budget");
    sub->add_option("--seed", opt.seed, "RNG seed");
  };
  // let --pretty (defined on the parent) appear after the subcommand name
  app.fallthrough();

  auto* c_analyze = app.add_subcommand("analyze", "periodicity and predicted CU level");
  c_analyze->add_option("circuit", path, "circuit file (- for stdin)")->required();

  auto* c_level = app.add_subcommand("level", "exact hierarchy level via the oracle");
  c_level->add_option("circuit", path)->required();
  add_common(c_level);

  auto* c_verify = app.add_subcommand("verify-jump", "check oracle level == m + 2");
  c_verify->add_option("circuit", path)->required();
  add_common(c_verify);

  auto* c_family = app.add_subcommand("family", "emit a named family circuit");
  c_family->add_option("name", family_name, "sch|jordan|brickwork")->required();
  c_family->add_option("n", n, "qubit count")->required();

  auto* c_synth = app.add_subcommand("synth", "lower the controlled circuit to Clifford+T");
  c_synth->add_option("circuit", path)->required();
  c_synth->add_option("--out", out_path, "write the lowered circuit here");

  auto* c_search = app.add_subcommand("search", "random-symplectic periodicity histogram");
  c_search->add_option("n", n)->required();
  c_search->add_option("trials", trials)->required();
  add_common(c_search);

  auto* c_catalyst = app.add_subcommand("catalyst", "prepare catalyst and run kickback");
  c_catalyst->add_option("circuit", path)->required();
  c_catalyst->add_option("k", k, "target phase exponent: Z^(1/2^k)")->required();
  c_catalyst->add_option("--init", opt.init, "initial target bitstring (default |+...+>)");

  auto* c_appendix = app.add_subcommand("appendix-check", "SCH block-matrix regression");
  c_appendix->add_option("n", n)->required();

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const ppc::json& report) {
    std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
    return ppc::report_passes(report) ? 0 : 1;
  };

  try {
    if (*c_analyze) return emit(ppc::analyze(pp::parse(ppc::read_input(path))));
    if (*c_level) return emit(ppc::level(pp::parse(ppc::read_input(path)), opt));
    if (*c_verify) return emit(ppc::verify_jump(pp::parse(ppc::read_input(path)), opt));
    if (*c_family) {
      std::cout << pp::serialize(ppc::family(family_name, n));
      return 0;
    }
    if (*c_synth) {
      ppc::json report = ppc::synth(pp::parse(ppc::read_input(path)));
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << report["results"]["circuit"].get<std::string>();
      }
      return emit(report);
    }
    if (*c_search) return emit(ppc::search(n, trials, opt));
    if (*c_catalyst) return emit(ppc::catalyst(pp::parse(ppc::read_input(path)), k, opt));
    if (*c_appendix) return emit(ppc::appendix(n));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
