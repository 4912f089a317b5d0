#pragma once

#include <span>
#include <string>

#include "symcub/bernstein_szego.hpp"
#include "symcub/quadrature_rule.hpp"

namespace symcub {

enum class FamilyKind { hermite, laguerre, jacobi, bernstein_szego };

/// Open interval (lower, upper) of the working variable; may be infinite.
struct Interval {
  double lower;
  double upper;
};

/// A univariate orthonormal family. The classical kinds work in x; the
/// Bernstein-Szego kind works in xi with x = cos(xi).
///
/// Sign convention: every p_l has a positive leading coefficient in x.
class OrthoFamily {
 public:
  /// Orthonormal for w(x) = exp(-x^2) / sqrt(pi) on the real line.
  static OrthoFamily hermite();
  /// Orthonormal for w(x) = x^alpha exp(-x) on (0, inf); alpha in (-1, 50].
  static OrthoFamily laguerre(double alpha);
  /// Orthonormal for w(x) = (1-x)^alpha (1+x)^beta on (-1, 1).
  static OrthoFamily jacobi(double alpha, double beta);
  /// Orthonormal for w(xi) = 1 / (2 pi |c(xi)|^2) on (0, pi).
  static OrthoFamily bernstein_szego(BSParams params);

  FamilyKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// Bernstein-Szego parameters; only meaningful for that kind.
  const BSParams& bs() const { return bs_; }

  Variable variable() const {
    return kind_ == FamilyKind::bernstein_szego ? Variable::xi : Variable::x;
  }
  Interval support() const;
  /// Weight function in the working variable.
  double weight(double t) const;
  /// Maps the working variable to x (identity for the classical kinds).
  double to_x(double t) const;
  /// Short human-readable description, e.g. "jacobi(0.5,0.5)".
  std::string name() const;
  /// Integral of the weight over the support.
  double total_mass() const;
  /// Smallest degree with an explicit formula (0 for the classical kinds).
  int min_explicit_degree() const;

  /// p_l at t, in the working variable. Throws DomainError outside the
  /// (closed) support and UnsupportedDegree below min_explicit_degree().
  double eval(int l, double t) const;
  /// p_0..p_{out.size()-1} at t by one recurrence sweep. Classical kinds only
  /// start at degree 0; for Bernstein-Szego entries below
  /// min_explicit_degree() are set to NaN.
  void eval_all(double t, std::span<double> out) const;

  /// Gauss rule with `degree` nodes (roots of p_degree), increasing in the
  /// working variable, with closed-form Christoffel weights.
  QuadratureRule1D gauss_rule(int degree) const;

  friend bool operator==(const OrthoFamily&, const OrthoFamily&) = default;

 private:
  FamilyKind kind_ = FamilyKind::hermite;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  BSParams bs_;
};

/// Maximum degree accepted by gauss_rule and eval for the classical kinds.
inline constexpr int kMaxClassicalDegree = 64;

/// 1 / sum_{l < degree} p_l(t)^2, the defining expression of the Christoffel
/// weight of the degree-`degree` Gauss rule. Classical kinds, and
/// Bernstein-Szego with min_explicit_degree() == 0.
double christoffel_reciprocal_sum(const OrthoFamily& family, int degree, double t);

}  // namespace symcub
