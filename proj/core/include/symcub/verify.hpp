#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symcub/integrand.hpp"
#include "symcub/orthopoly.hpp"
#include "symcub/partitions.hpp"
#include "symcub/schur_cubature.hpp"

namespace symcub {

enum class ReferenceKind { tensor_gauss_legendre, adaptive_univariate, monte_carlo };

struct OracleConfig {
  /// Gauss-Legendre points per axis; below 50 the oracle refuses to run.
  int points_per_axis = 200;
  ReferenceKind reference_kind = ReferenceKind::tensor_gauss_legendre;
  int mc_samples = 20000;
  std::uint64_t seed = 20240601;
  int threads = 1;
};

inline constexpr int kMinOraclePoints = 50;

/// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int points, double a, double b);

/// Adaptive Gauss-Kronrod integral of f over [a, b]; infinite limits allowed.
struct AdaptiveResult {
  double value;
  double error_estimate;
};
AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double tolerance = 1e-14);

/// A reference value together with the integral of |integrand|, the scale
/// that relative errors are measured against.
struct OracleValue {
  double value = 0.0;
  double scale = 0.0;
};

/// |approx - ref.value| / ref.scale.
double relative_error(double approx, const OracleValue& ref);

/// Brute-force reference for the ensemble integrals the cubature rules
/// compute:
///
///   (1/n!) int f(x) V(x)^2 prod w(t_j) dt
///
/// with w the family's weight in its working variable (for Bernstein-Szego
/// this carries the 1/(2 pi) and the pole factors). Tensor-product
/// Gauss-Legendre on a per-axis change of variables; infinite supports are
/// truncated (Hermite to [-12, 12], Laguerre to [0, 60 + 10 alpha]).
class EnsembleOracle {
 public:
  /// Throws OracleImprecise if points_per_axis < 50.
  EnsembleOracle(OrthoFamily family, int n, OracleConfig cfg = {});

  const OrthoFamily& family() const { return family_; }
  int n() const { return n_; }
  const OracleConfig& config() const { return cfg_; }

  /// Relative tail mass outside the truncation box for a per-axis degree
  /// `degree` integrand (0 on compact supports).
  double tail_bound(int degree) const;

  /// Reference values for M_lambda, one per label, sharing the outer loops.
  /// Throws OracleImprecise if the tail budget exceeds 1e-12.
  std::vector<OracleValue> integrate_monomials(const std::vector<Partition>& labels) const;
  OracleValue integrate_monomial(const Partition& lambda) const;
  /// Integrand spec; for Bernstein-Szego the pole factors are the family's.
  OracleValue integrate_spec(const IntegrandSpec& spec) const;
  /// Arbitrary symmetric f of the x coordinates; sums over strictly
  /// decreasing index tuples only.
  OracleValue integrate(const SymmetricFunction& f) const;

  /// Uniform Monte-Carlo estimate over the truncation box.
  struct MonteCarloEstimate {
    double mean;
    double standard_error;
  };
  MonteCarloEstimate monte_carlo(const SymmetricFunction& f, int samples,
                                 std::uint64_t seed) const;

 private:
  struct Axis {
    double lower;
    double upper;
  };
  // x(t) and the density factor u(t) with respect to dt.
  std::pair<double, double> map(double t) const;

  OrthoFamily family_;
  int n_;
  OracleConfig cfg_;
  Axis axis_;
  std::vector<double> x_;  // mapped nodes
  std::vector<double> u_;  // density times quadrature weight
};

struct Check {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string metric;
};

/// Diagnostic that is recorded but never gates the verdict.
struct Probe {
  std::string name;
  double error = 0.0;
  double expected_above = 0.0;
};

enum class OracleStatus { ok, imprecise };

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<Probe> probes;
  OracleStatus oracle_status = OracleStatus::ok;
  std::string oracle_message;
  std::vector<std::pair<std::string, std::string>> environment;

  bool passed() const;
  /// 0 when everything passes, 1 on any failed check, 2 when the oracle was
  /// imprecise (takes precedence).
  int exit_code() const;
  void add(std::string name, double error, double tolerance, std::string metric);
  /// Appends another report's checks and probes, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix);
  /// Deterministic JSON with a fixed key order.
  std::string to_json() const;
};

/// Structure checks, Gram matrix and (when every label is explicit) the dual
/// Gram matrix of the discrete orthogonality relations.
VerificationReport run_orthogonality_suite(const CubatureRule& rule);

/// Exactness of every M_lambda with lambda in Lambda^(2m+1,n) and of a random
/// dense polynomial against the tensor oracle, oracle self-consistency
/// (N vs 2N points), a Monte-Carlo guard, and a degree-(2m+2) probe.
VerificationReport run_exactness_suite(const CubatureRule& rule, const OracleConfig& cfg);

/// Both suites for the built-in family list; used by `symcub verify`.
VerificationReport run_default_sweep(const OracleConfig& cfg);

/// Adds environment entries describing cfg.
void describe_config(VerificationReport& report, const OracleConfig& cfg);

const char* to_string(ReferenceKind kind);

}  // namespace symcub
