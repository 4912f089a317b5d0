#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symcub/integrand.hpp"
#include "symcub/orthopoly.hpp"
#include "symcub/partitions.hpp"

namespace symcub {

/// Vandermonde product prod_{j<k} (x_j - x_k).
double vandermonde(std::span<const double> x);

/// Evaluates generalized Schur polynomials
///
///   P_lambda(x) = det[p_{lambda_j + n - j}(x_k)] / V(x)
///
/// for a univariate family. Points are given in the family's working variable;
/// the Vandermonde is taken in x.
class SchurEvaluator {
 public:
  /// p(l, t) and the map t -> x.
  using Basis = std::function<double(int, double)>;

  SchurEvaluator(OrthoFamily family, int n);
  /// Arbitrary basis, e.g. plain monomials for classical Schur polynomials.
  SchurEvaluator(Basis basis, std::function<double(double)> to_x, int n);

  int n() const { return n_; }

  /// Throws IllConditionedInput when two x coordinates are closer than 1e-8.
  double operator()(const Partition& lambda, std::span<const double> t) const;

 private:
  Basis basis_;
  std::function<double(double)> to_x_;
  int n_;
};

/// Free-function form of SchurEvaluator::operator().
double schur_eval(const SchurEvaluator& ev, const Partition& lambda, std::span<const double> t);

/// Multivariate c-function
///   C(xi) = 2^{n(n-1)/2} prod_j c(xi_j)
///           prod_{j<k} (1 - e^{-i(xi_j+xi_k)})^{-1} (1 - e^{-i(xi_j-xi_k)})^{-1}.
std::complex<double> bs_C_func(const BSParams& params, std::span<const double> xi);

/// P_lambda(cos xi) for the Bernstein-Szego family through the expansion
///   Delta_{lambda_n}^{1/2} sum_{signs, sigma} C(e_1 xi_s1, ...) exp(i sum e_j lambda_j xi_sj),
/// valid for lambda_n >= d_eps. Independent of the determinant route; n <= 8.
double bs_schur_expansion(const BSParams& params, const Partition& lambda,
                          std::span<const double> xi);

/// How CubatureRule::weights are to be read.
///  full:      the weight multiplying f(node) directly.
///  inverse_H: 1 / H(node); the integrand is f(cos xi) rho(xi) / prod pole factors.
enum class WeightConvention { full, inverse_H };

/// Gaussian cubature rule on the alcove labels Lambda^(m,n).
struct CubatureRule {
  OrthoFamily family;
  int m = 0;
  int n = 0;
  std::vector<Partition> labels;
  /// Row-major, n coordinates per label, strictly decreasing within a row, in
  /// the family's working variable.
  std::vector<double> nodes;
  std::vector<double> weights;
  WeightConvention weight_convention = WeightConvention::full;
  Variable variable = Variable::x;
  std::string version;

  std::size_t size() const { return labels.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
};

/// Builds the rule from the degree-(m+n) univariate Gauss rule. Bernstein-Szego
/// families require d <= 2(m+n) + e+ + e- (UnsupportedDegree otherwise).
/// `threads` > 1 splits the label loop across worker threads.
CubatureRule build_rule(const OrthoFamily& family, int m, int n, int threads = 1);

/// Ensemble density. Classical: V(x)^2 prod w(x_j). Bernstein-Szego: the
/// circular Jacobi density rho(xi) = prod rho_1(xi_j) * V(cos xi)^2, without
/// the pole factors.
double ensemble_density(const OrthoFamily& family, std::span<const double> t);

/// Weight multiplying f(x-node) at label i, with every convention applied.
double full_weight(const CubatureRule& rule, std::size_t i);

/// Symmetric function of the x coordinates.
using SymmetricFunction = std::function<double(std::span<const double>)>;

/// Sum of f(x-node) * full_weight. For Bernstein-Szego rules this is the
/// rational rule: f is divided by the rule's pole factors.
double integrate_symmetric(const CubatureRule& rule, const SymmetricFunction& f);

/// Sum of f(cos xi)/prod(1 + 2 a_r cos xi_j + a_r^2) * rho / H over a
/// Bernstein-Szego rule. Throws InvalidArgument for other families.
double integrate_rational_bs(const CubatureRule& rule, const SymmetricFunction& f);

/// Integrates a spec. Throws InvalidArgument if n differs, or if the spec
/// names poles that differ from the rule's (a classical rule has none). A spec
/// without poles against a Bernstein-Szego rule is divided by the rule's own
/// pole factors.
double integrate_spec(const CubatureRule& rule, const IntegrandSpec& spec);

/// Runs body(i) for i in [0, count) on up to `threads` threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace symcub
