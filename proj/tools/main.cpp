#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_family_options(CLI::App* cmd, symcub::cli::FamilyOptions& f) {
  cmd->add_option("--family", f.family,
                  "hermite | laguerre | jacobi | chebyshev1..chebyshev4 | bs")
      ->required();
  cmd->add_option("--alpha", f.alpha, "Laguerre/Jacobi alpha");
  cmd->add_option("--beta", f.beta, "Jacobi beta");
  cmd->add_option("--eps", f.eps, "Bernstein-Szego eps_plus eps_minus")->expected(2);
  cmd->add_option("--poles", f.poles, "Bernstein-Szego poles, e.g. 0.5 0.3+0.4i 0.3-0.4i");
  cmd->add_flag("--auto-conjugate", f.auto_conjugate, "add missing conjugates of complex poles");
  cmd->add_flag("--allow-zero-poles", f.allow_zero_poles, "accept a pole at 0");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = symcub::cli;
  CLI::App app{"symcub: Gaussian cubature rules for symmetric functions"};
  app.require_subcommand(1);

  cli::GlobalOptions global;
  app.add_option("--seed", global.seed, "random seed for verification");
  app.add_option("--threads", global.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", global.json, "machine-readable stdout");

  auto* rule = app.add_subcommand("rule", "cubature rules");
  rule->require_subcommand(1);
  cli::RuleGenOptions gen;
  auto* gen_cmd = rule->add_subcommand("gen", "build a rule and write it as JSON");
  add_family_options(gen_cmd, gen.family);
  gen_cmd->add_option("--m", gen.m, "degree bound per variable")->required();
  gen_cmd->add_option("--n", gen.n, "number of variables")->required();
  gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

  cli::IntegrateOptions integ;
  auto* integ_cmd = app.add_subcommand("integrate", "integrate a spec with a rule file");
  integ_cmd->add_option("rule", integ.rule_path, "rule JSON")->required();
  integ_cmd->add_option("spec", integ.spec_path, "integrand JSON")->required();

  cli::RootsOptions roots;
  auto* roots_cmd = app.add_subcommand("roots", "Bernstein-Szego roots with their brackets");
  add_family_options(roots_cmd, roots.family);
  roots_cmd->add_option("--degree", roots.degree, "polynomial degree")
      ->required()
      ->check(CLI::PositiveNumber);

  cli::VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "run the verification suites");
  ver_cmd->add_option("--rule", ver.rule_path, "rule JSON (default: built-in sweep)");
  ver_cmd->add_option("--points", ver.points, "oracle points per axis");
  ver_cmd->add_option("--mc-samples", ver.mc_samples, "Monte-Carlo samples");
  ver_cmd->add_option("-o,--output", ver.output, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen_cmd->parsed()) return cli::cmd_rule_gen(global, gen, std::cout, std::cerr);
  if (integ_cmd->parsed()) return cli::cmd_integrate(global, integ, std::cout, std::cerr);
  if (roots_cmd->parsed()) return cli::cmd_roots(global, roots, std::cout, std::cerr);
  if (ver_cmd->parsed()) return cli::cmd_verify(global, ver, std::cout, std::cerr);
  return 1;
}
