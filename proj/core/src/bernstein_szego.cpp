#include "symcub/bernstein_szego.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "symcub/error.hpp"

namespace symcub {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConjugateTol = 1e-12;
constexpr double kRootTol = 1e-12;
constexpr int kRootMaxIter = 200;

bool is_real(std::complex<double> a) { return a.imag() == 0.0; }

}  // namespace

BSParams::BSParams(int eps_plus, int eps_minus,
                   std::vector<std::complex<double>> poles, bool allow_zero_poles)
    : eps_plus_(eps_plus),
      eps_minus_(eps_minus),
      poles_(std::move(poles)),
      allow_zero_poles_(allow_zero_poles) {
  if ((eps_plus_ != 0 && eps_plus_ != 1) || (eps_minus_ != 0 && eps_minus_ != 1)) {
    throw InvalidArgument("eps_plus and eps_minus must be 0 or 1");
  }
  for (auto& a : poles_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("pole parameters must be finite");
    }
    if (std::abs(a.imag()) <= kConjugateTol) a = {a.real(), 0.0};
    const double r = std::abs(a);
    if (!(r < 1.0)) throw InvalidArgument("pole parameters must satisfy |a| < 1");
    if (r == 0.0 && !allow_zero_poles_) {
      throw InvalidArgument("pole parameter a = 0 requires allow_zero_poles");
    }
  }
  // Non-real poles must pair up with their conjugates.
  std::vector<bool> used(poles_.size(), false);
  for (std::size_t i = 0; i < poles_.size(); ++i) {
    if (used[i] || is_real(poles_[i])) continue;
    used[i] = true;
    bool matched = false;
    for (std::size_t j = i + 1; j < poles_.size(); ++j) {
      if (!used[j] && std::abs(poles_[j] - std::conj(poles_[i])) <= kConjugateTol) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) {
      throw InvalidArgument("non-real pole parameters must occur in conjugate pairs");
    }
  }
}

BSParams BSParams::chebyshev(int kind) {
  switch (kind) {
    case 1: return BSParams(0, 0, {});
    case 2: return BSParams(1, 1, {});
    case 3: return BSParams(0, 1, {});
    case 4: return BSParams(1, 0, {});
    default: throw InvalidArgument("Chebyshev kind must be 1, 2, 3 or 4");
  }
}

int BSParams::min_explicit_degree() const {
  const int twice = twice_d_eps();
  return twice <= 0 ? 0 : (twice + 1) / 2;
}

double BSParams::kappa_plus() const {
  double k = 0.0;
  for (const auto& a : poles_) {
    const double r = std::abs(a);
    k += (1.0 - r) / (1.0 + r);
  }
  return 0.5 * k;
}

double BSParams::kappa_minus() const {
  double k = 0.0;
  for (const auto& a : poles_) {
    const double r = std::abs(a);
    k += (1.0 + r) / (1.0 - r);
  }
  return 0.5 * k;
}

bool same_poles(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(p - b[j]) <= tol) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::complex<double> c_func(const BSParams& params, double xi) {
  const std::complex<double> e = std::polar(1.0, -xi);
  std::complex<double> den{1.0, 0.0};
  if (params.eps_plus()) {
    const auto f = 1.0 + e;
    if (std::abs(f) <= 1e-14) {
      throw DomainError("c(xi) is singular at xi = pi when eps_plus = 1");
    }
    den *= f;
  }
  if (params.eps_minus()) {
    const auto f = 1.0 - e;
    if (std::abs(f) <= 1e-14) {
      throw DomainError("c(xi) is singular at xi = 0 when eps_minus = 1");
    }
    den *= f;
  }
  std::complex<double> num{1.0, 0.0};
  for (const auto& a : params.poles()) num *= 1.0 + a * e;
  return num / den;
}

double c_abs2(const BSParams& params, double xi) { return std::norm(c_func(params, xi)); }

double bs_weight(const BSParams& params, double xi) {
  return 1.0 / (2.0 * kPi * c_abs2(params, xi));
}

double chebyshev_weight_factor(const BSParams& params, double xi) {
  const double c = std::cos(xi);
  const int ep = params.eps_plus();
  const int em = params.eps_minus();
  return std::ldexp((1.0 + ep * c) * (1.0 - em * c), ep + em);
}

double pole_factor(const BSParams& params, double xi) {
  const double c = std::cos(xi);
  std::complex<double> prod{1.0, 0.0};
  for (const auto& a : params.poles()) prod *= 1.0 + 2.0 * a * c + a * a;
  return prod.real();
}

double v_a(double a, double xi) {
  if (!(std::abs(a) < 1.0)) throw InvalidArgument("v_a requires |a| < 1");
  // Reduce to (-pi, pi] and use the quasi-periodicity v(xi + 2pi) = v(xi) + 2pi.
  const double turns = std::round(xi / (2.0 * kPi));
  double r = xi - 2.0 * kPi * turns;
  double shift = 2.0 * kPi * turns;
  if (r <= -kPi) {
    r += 2.0 * kPi;
    shift -= 2.0 * kPi;
  }
  // 2 Arctan(((1-a)/(1+a)) tan(xi/2)), written with atan2 so that it stays
  // continuous through xi = pi where tan(xi/2) blows up.
  return 2.0 * std::atan2((1.0 - a) * std::sin(0.5 * r), (1.0 + a) * std::cos(0.5 * r)) +
         shift;
}

std::complex<double> v_a(std::complex<double> a, double xi) {
  if (!(std::abs(a) < 1.0)) throw InvalidArgument("v_a requires |a| < 1");
  const std::complex<double> i{0.0, 1.0};
  return xi + i * (std::log(1.0 + a * std::polar(1.0, xi)) -
                   std::log(1.0 + a * std::polar(1.0, -xi)));
}

double v_a_prime(double a, double xi) {
  if (!(std::abs(a) < 1.0)) throw InvalidArgument("v_a_prime requires |a| < 1");
  return (1.0 - a * a) / (1.0 + 2.0 * a * std::cos(xi) + a * a);
}

std::complex<double> v_a_prime(std::complex<double> a, double xi) {
  if (!(std::abs(a) < 1.0)) throw InvalidArgument("v_a_prime requires |a| < 1");
  return (1.0 - a * a) / (1.0 + 2.0 * a * std::cos(xi) + a * a);
}

double v_pair(std::complex<double> a, double xi) { return 2.0 * v_a(a, xi).real(); }

double v_sum(const BSParams& params, double xi) {
  double s = 0.0;
  for (const auto& a : params.poles()) {
    s += is_real(a) ? v_a(a.real(), xi) : v_a(a, xi).real();
  }
  return s;
}

double v_sum_prime(const BSParams& params, double xi) {
  double s = 0.0;
  for (const auto& a : params.poles()) {
    s += is_real(a) ? v_a_prime(a.real(), xi) : v_a_prime(a, xi).real();
  }
  return s;
}

double bs_delta(const BSParams& params, int l) {
  const int twice = params.twice_d_eps();
  if (twice < 0 || twice % 2 != 0 || l != twice / 2) return 1.0;
  std::complex<double> prod{1.0, 0.0};
  for (const auto& a : params.poles()) prod *= a;
  const double sign = params.eps_minus() ? -1.0 : 1.0;
  return 1.0 / (1.0 + sign * prod.real());
}

double bs_leading_coefficient(const BSParams& params, int l) {
  if (l < params.min_explicit_degree()) {
    throw UnsupportedDegree("leading coefficient is only known for l >= d_eps");
  }
  return std::ldexp(1.0, l) / std::sqrt(bs_delta(params, l));
}

double bs_eval(const BSParams& params, int l, double xi) {
  if (l < 0 || l < params.min_explicit_degree()) {
    throw UnsupportedDegree("Bernstein-Szego p_" + std::to_string(l) +
                            " is below the explicit range l >= d_eps");
  }
  if (!(xi >= 0.0 && xi <= kPi)) {
    throw DomainError("Bernstein-Szego evaluation requires xi in [0, pi]");
  }
  const auto t1 = c_func(params, xi) * std::polar(1.0, l * xi);
  const auto t2 = c_func(params, -xi) * std::polar(1.0, -l * xi);
  const auto s = t1 + t2;
  // The sum is real in exact arithmetic; the residue is measured against the
  // size of the individual terms, which grow like 1/xi near a singular
  // endpoint.
  if (std::abs(s.imag()) > 1e-12 * (1.0 + std::abs(s.real()) + std::abs(t1))) {
    throw NumericFailure("Bernstein-Szego evaluation left an imaginary residue of " +
                         std::to_string(s.imag()));
  }
  return std::sqrt(bs_delta(params, l)) * s.real();
}

namespace {

void check_degree(const BSParams& params, int degree) {
  if (degree < 1 || degree < params.min_explicit_degree()) {
    throw UnsupportedDegree("Bernstein-Szego degree " + std::to_string(degree) +
                            " is outside the explicit range (need degree >= 1 and >= d_eps)");
  }
}

}  // namespace

RootBracket bs_root_bracket(const BSParams& params, int degree, int lhat) {
  check_degree(params, degree);
  const double shifted = degree - params.d_eps();
  const double base = kPi * (lhat + 0.5 + 0.5 * params.eps_minus());
  const double lower = base / (shifted + params.kappa_minus());
  const double upper = base / (shifted + params.kappa_plus());
  return {std::clamp(lower, 0.0, kPi), std::clamp(upper, 0.0, kPi)};
}

RootBracket bs_gap_bounds(const BSParams& params, int degree, int khat, int lhat) {
  check_degree(params, degree);
  const double shifted = degree - params.d_eps();
  const double base = kPi * (khat - lhat);
  return {base / (shifted + params.kappa_minus()), base / (shifted + params.kappa_plus())};
}

double bs_root_equation(const BSParams& params, int degree, int lhat, double xi) {
  const double shifted = degree - params.d_eps();
  return 2.0 * shifted * xi + v_sum(params, xi) -
         kPi * (2 * lhat + 1 + params.eps_minus());
}

double h_func(const BSParams& params, int degree, double xi) {
  check_degree(params, degree);
  return 2.0 * (degree - params.d_eps()) + v_sum_prime(params, xi);
}

BSRootSet bs_roots(const BSParams& params, int degree) {
  check_degree(params, degree);
  const double shifted = degree - params.d_eps();
  const double cheb_den = degree + 0.5 * (params.eps_plus() + params.eps_minus());

  BSRootSet out{degree, std::vector<double>(static_cast<std::size_t>(degree))};
  for (int lhat = 0; lhat < degree; ++lhat) {
    auto [lo, hi] = bs_root_bracket(params, degree, lhat);
    double xi = std::clamp(kPi * (lhat + 0.5 + 0.5 * params.eps_minus()) / cheb_den, lo, hi);

    int clamps = 0;
    bool bisect = false;
    bool converged = false;
    for (int iter = 0; iter < kRootMaxIter; ++iter) {
      const double g = bs_root_equation(params, degree, lhat, xi);
      if (std::abs(g) <= kRootTol) {
        converged = true;
        break;
      }
      // g is strictly increasing in xi.
      if (g < 0.0) lo = xi; else hi = xi;
      if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
        converged = true;
        break;
      }
      if (bisect) {
        xi = 0.5 * (lo + hi);
        continue;
      }
      const double gp = 2.0 * shifted + v_sum_prime(params, xi);
      double next = xi - g / gp;
      if (next <= lo || next >= hi) {
        next = std::clamp(next, lo, hi);
        if (++clamps >= 3) bisect = true;
        if (next == xi || next == lo || next == hi) next = 0.5 * (lo + hi);
      } else {
        clamps = 0;
      }
      xi = next;
    }
    if (!converged) {
      throw NumericFailure("Bernstein-Szego root search did not converge for index " +
                               std::to_string(lhat),
                           lhat);
    }
    out.xi[static_cast<std::size_t>(lhat)] = xi;
  }
  for (std::size_t k = 1; k < out.xi.size(); ++k) {
    if (!(out.xi[k] > out.xi[k - 1])) {
      throw NumericFailure("Bernstein-Szego roots are not strictly increasing", static_cast<int>(k));
    }
  }
  return out;
}

QuadratureRule1D bs_christoffel(const BSParams& params, int degree) {
  const auto roots = bs_roots(params, degree);
  QuadratureRule1D rule;
  rule.degree = degree;
  rule.variable = Variable::xi;
  rule.nodes = roots.xi;
  rule.weights.reserve(roots.xi.size());
  for (double xi : roots.xi) {
    const double w = 1.0 / (c_abs2(params, xi) * h_func(params, degree, xi));
    if (!(std::isfinite(w) && w > 0.0)) {
      throw NumericFailure("non-positive Bernstein-Szego Christoffel weight");
    }
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace symcub
