#pragma once

#include <complex>
#include <vector>

#include "symcub/quadrature_rule.hpp"

namespace symcub {

/// Parameters of a Bernstein-Szego weight on (0, pi):
///
///   w(xi) = 2^(e+ + e-) (1 + e+ cos xi)(1 - e- cos xi)
///           / (2 pi prod_r (1 + 2 a_r cos xi + a_r^2))
///
/// with e+, e- in {0, 1} and poles a_r strictly inside the unit disc, non-real
/// poles occurring in conjugate pairs.
class BSParams {
 public:
  BSParams() = default;
  /// Validates the parameters. A pole at 0 is rejected unless
  /// allow_zero_poles is set; it then contributes a unit factor.
  BSParams(int eps_plus, int eps_minus, std::vector<std::complex<double>> poles,
           bool allow_zero_poles = false);

  /// Chebyshev weights of the first to fourth kind (d = 0).
  static BSParams chebyshev(int kind);

  int eps_plus() const { return eps_plus_; }
  int eps_minus() const { return eps_minus_; }
  const std::vector<std::complex<double>>& poles() const { return poles_; }
  bool allow_zero_poles() const { return allow_zero_poles_; }
  int d() const { return static_cast<int>(poles_.size()); }

  /// d_eps = (d - e+ - e-) / 2, possibly half-integral or negative.
  double d_eps() const { return 0.5 * (d() - eps_plus_ - eps_minus_); }
  /// Twice d_eps, exact.
  int twice_d_eps() const { return d() - eps_plus_ - eps_minus_; }
  /// Smallest degree covered by the explicit formula: ceil(d_eps), or 0.
  int min_explicit_degree() const;

  /// kappa_+ = 1/2 sum (1-|a|)/(1+|a|) and kappa_- = 1/2 sum (1+|a|)/(1-|a|).
  double kappa_plus() const;
  double kappa_minus() const;

  /// True when 2(m+n) + e+ + e- >= d, i.e. degree m+n lies in the explicit
  /// range.
  bool admits_degree(int degree) const { return degree >= min_explicit_degree(); }

  friend bool operator==(const BSParams&, const BSParams&) = default;

 private:
  int eps_plus_ = 0;
  int eps_minus_ = 0;
  std::vector<std::complex<double>> poles_;
  bool allow_zero_poles_ = false;
};

/// True when the two pole lists agree as multisets within tol.
bool same_poles(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b, double tol = 1e-12);

/// c(xi) = prod_r (1 + a_r e^{-i xi}) / ((1 + e+ e^{-i xi})(1 - e- e^{-i xi})).
/// Throws DomainError at a singular endpoint.
std::complex<double> c_func(const BSParams& params, double xi);

/// |c(xi)|^2.
double c_abs2(const BSParams& params, double xi);

/// w(xi) = 1 / (2 pi |c(xi)|^2).
double bs_weight(const BSParams& params, double xi);

/// rho(xi) = 2^(e+ + e-) (1 + e+ cos xi)(1 - e- cos xi).
double chebyshev_weight_factor(const BSParams& params, double xi);

/// prod_r (1 + 2 a_r cos xi + a_r^2), real for conjugate-closed pole sets.
double pole_factor(const BSParams& params, double xi);

/// v_a(xi) = int_0^xi (1-a^2)/(1+2a cos t + a^2) dt for real |a| < 1, in the
/// arctangent form, continued by v_a(xi + 2 pi) = v_a(xi) + 2 pi.
double v_a(double a, double xi);
/// Complex a: v_a(xi) = xi + i (Log(1 + a e^{i xi}) - Log(1 + a e^{-i xi})).
/// Both arguments of Log stay in the right half plane, so this is analytic
/// in xi for every real xi.
std::complex<double> v_a(std::complex<double> a, double xi);
/// v_a'(xi) = (1-a^2)/(1+2a cos xi + a^2).
double v_a_prime(double a, double xi);
std::complex<double> v_a_prime(std::complex<double> a, double xi);
/// v_a + v_conj(a); real.
double v_pair(std::complex<double> a, double xi);

/// sum_r v_{a_r}(xi) and its derivative (real by conjugate closure).
double v_sum(const BSParams& params, double xi);
double v_sum_prime(const BSParams& params, double xi);

/// Normalization Delta_l: (1 + (-1)^{e-} prod a_r)^{-1} at l = d_eps, else 1.
double bs_delta(const BSParams& params, int l);

/// Leading coefficient of p_l in x = cos xi: 2^l Delta_l^{-1/2}.
double bs_leading_coefficient(const BSParams& params, int l);

/// Orthonormal p_l(cos xi) = Delta_l^{1/2} (c(xi) e^{i l xi} + c(-xi) e^{-i l xi})
/// for l >= d_eps. Throws UnsupportedDegree below that.
double bs_eval(const BSParams& params, int l, double xi);

/// Bracket for the (lhat+1)-th root of p_degree, clipped to [0, pi].
struct RootBracket {
  double lower;
  double upper;
};
RootBracket bs_root_bracket(const BSParams& params, int degree, int lhat);

/// Unclipped gap bounds for xi_khat - xi_lhat, khat > lhat.
RootBracket bs_gap_bounds(const BSParams& params, int degree, int khat, int lhat);

/// Left-hand side minus right-hand side of the root equation
/// 2(deg - d_eps) xi + sum_r v_{a_r}(xi) = pi (2 lhat + 1 + e-).
double bs_root_equation(const BSParams& params, int degree, int lhat, double xi);

/// Roots of p_degree in xi, strictly increasing in (0, pi).
struct BSRootSet {
  int degree = 0;
  std::vector<double> xi;
};
BSRootSet bs_roots(const BSParams& params, int degree);

/// h^(deg)(xi) = 2(deg - d_eps) + sum_r v'_{a_r}(xi).
double h_func(const BSParams& params, int degree, double xi);

/// Gauss rule in the xi variable: nodes = bs_roots, weights
/// 1 / (|c(xi)|^2 h(xi)).
QuadratureRule1D bs_christoffel(const BSParams& params, int degree);

}  // namespace symcub
