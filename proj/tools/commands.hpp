#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symcub/orthopoly.hpp"

// Implementation of the symcub subcommands. main.cpp only parses arguments;
// everything here returns a process exit code and writes to the given streams
// so that tests can drive it in-process.
namespace symcub::cli {

struct GlobalOptions {
  std::uint64_t seed = 20240601;
  int threads = 1;
  bool json = false;
};

struct FamilyOptions {
  /// hermite, laguerre, jacobi, chebyshev1..chebyshev4, or bs.
  std::string family;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<int> eps{0, 0};
  std::vector<std::string> poles;
  bool auto_conjugate = false;
  bool allow_zero_poles = false;
};

/// Parses "re", "imi", "re+imi" or "re-imi" (e.g. 0.3+0.4i).
std::complex<double> parse_complex(std::string_view text);

/// Throws InvalidArgument for unknown names or bad parameters.
OrthoFamily make_family(const FamilyOptions& opts);

struct RuleGenOptions {
  FamilyOptions family;
  int m = 0;
  int n = 1;
  /// Empty: write the rule to stdout.
  std::string output;
};
int cmd_rule_gen(const GlobalOptions& g, const RuleGenOptions& opts, std::ostream& out,
                 std::ostream& err);

struct IntegrateOptions {
  std::string rule_path;
  std::string spec_path;
};
int cmd_integrate(const GlobalOptions& g, const IntegrateOptions& opts, std::ostream& out,
                  std::ostream& err);

struct RootsOptions {
  FamilyOptions family;
  int degree = 0;
};
int cmd_roots(const GlobalOptions& g, const RootsOptions& opts, std::ostream& out,
              std::ostream& err);

struct VerifyOptions {
  /// Empty: run the built-in sweep.
  std::string rule_path;
  int points = 200;
  int mc_samples = 20000;
  /// Empty: write the report to stdout.
  std::string output;
};
int cmd_verify(const GlobalOptions& g, const VerifyOptions& opts, std::ostream& out,
               std::ostream& err);

}  // namespace symcub::cli
