#include "symcub/orthopoly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "symcub/error.hpp"

namespace symcub {

double quadrature_apply(const QuadratureRule1D& rule,
                        const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += f(rule.nodes[i]) * rule.weights[i];
  return sum;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxParameter = 50.0;

// Three-term recurrence of an orthonormal family,
//   x q_l = a_{l+1} q_{l+1} + b_l q_l + a_l q_{l-1},
// tabulated up to a fixed degree.
struct Recurrence {
  std::vector<double> a;  // a[0] unused
  std::vector<double> b;
  double q0 = 1.0;

  int max_degree() const { return static_cast<int>(b.size()) - 1; }

  double value(int l, double x) const {
    double prev = 0.0;
    double cur = q0;
    for (int k = 0; k < l; ++k) {
      const double next = ((x - b[k]) * cur - a[k] * prev) / a[k + 1];
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // p_l(x) and p_l'(x).
  std::pair<double, double> value_and_derivative(int l, double x) const {
    double prev = 0.0, cur = q0;
    double dprev = 0.0, dcur = 0.0;
    for (int k = 0; k < l; ++k) {
      const double next = ((x - b[k]) * cur - a[k] * prev) / a[k + 1];
      const double dnext = ((x - b[k]) * dcur + cur - a[k] * dprev) / a[k + 1];
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
    }
    return {cur, dcur};
  }
};

Recurrence hermite_recurrence(int max_degree) {
  Recurrence r;
  r.a.resize(static_cast<std::size_t>(max_degree) + 2, 0.0);
  r.b.assign(static_cast<std::size_t>(max_degree) + 1, 0.0);
  for (std::size_t l = 1; l < r.a.size(); ++l) r.a[l] = std::sqrt(0.5 * static_cast<double>(l));
  r.q0 = 1.0;
  return r;
}

Recurrence laguerre_recurrence(double alpha, int max_degree) {
  Recurrence r;
  r.a.resize(static_cast<std::size_t>(max_degree) + 2, 0.0);
  r.b.resize(static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t l = 0; l < r.b.size(); ++l) r.b[l] = 2.0 * static_cast<double>(l) + alpha + 1.0;
  for (std::size_t l = 1; l < r.a.size(); ++l) {
    const double dl = static_cast<double>(l);
    r.a[l] = std::sqrt(dl * (dl + alpha));
  }
  r.q0 = std::exp(-0.5 * std::lgamma(alpha + 1.0));
  return r;
}

double jacobi_mass(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

Recurrence jacobi_recurrence(double alpha, double beta, int max_degree) {
  Recurrence r;
  r.a.resize(static_cast<std::size_t>(max_degree) + 2, 0.0);
  r.b.resize(static_cast<std::size_t>(max_degree) + 1);
  const double ab = alpha + beta;
  r.b[0] = (beta - alpha) / (ab + 2.0);
  for (std::size_t l = 1; l < r.b.size(); ++l) {
    const double s = 2.0 * static_cast<double>(l) + ab;
    r.b[l] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  if (r.a.size() > 1) {
    // Written separately because the general expression is 0/0 at ab = -1.
    r.a[1] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                       ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
  }
  for (std::size_t l = 2; l < r.a.size(); ++l) {
    const double dl = static_cast<double>(l);
    const double s = 2.0 * dl + ab;
    r.a[l] = std::sqrt(4.0 * dl * (dl + alpha) * (dl + beta) * (dl + ab) /
                       (s * s * (s + 1.0) * (s - 1.0)));
  }
  r.q0 = 1.0 / std::sqrt(jacobi_mass(alpha, beta));
  return r;
}

Recurrence classical_recurrence(const OrthoFamily& f, int max_degree) {
  switch (f.kind()) {
    case FamilyKind::hermite: return hermite_recurrence(max_degree);
    case FamilyKind::laguerre: return laguerre_recurrence(f.alpha(), max_degree);
    case FamilyKind::jacobi: return jacobi_recurrence(f.alpha(), f.beta(), max_degree);
    case FamilyKind::bernstein_szego: break;
  }
  throw InvalidArgument("no three-term recurrence table for this family");
}

void check_parameter(double p, const char* what) {
  if (!(p > -1.0 && p <= kMaxParameter)) {
    throw InvalidArgument(std::string(what) + " must lie in (-1, 50]");
  }
}

// Root of p_degree in (lo, hi), where p_degree changes sign: Newton with a
// bisection fallback whenever the step leaves the bracket.
double bracketed_root(const Recurrence& rec, int degree, double lo, double hi, int index) {
  double flo = rec.value(degree, lo);
  const double fhi = rec.value(degree, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericFailure("root bracket does not enclose a sign change", index);
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [f, df] = rec.value_and_derivative(degree, x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
    }
    const double step = f / df;
    const double scale = std::max(1.0, std::abs(x));
    const double next = x - step;
    if (next > lo && next < hi) {
      x = next;
      if (std::abs(step) <= 1e-14 * scale) return x;
      continue;
    }
    // Newton wants to leave the bracket. A step below rounding means x is
    // already the root; otherwise bisect.
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * scale) return x;
    x = 0.5 * (lo + hi);
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * scale) return x;
  }
  throw NumericFailure("root search did not converge", index);
}

// Roots of p_degree, computed degree by degree so that the roots of p_{k-1}
// bracket those of p_k.
std::vector<double> classical_roots(const Recurrence& rec, int degree, Interval support) {
  std::vector<double> roots;
  for (int k = 1; k <= degree; ++k) {
    // Gershgorin bounds of the k x k Jacobi matrix contain every root.
    double lo = kInf, hi = -kInf;
    for (int i = 0; i < k; ++i) {
      const double off = rec.a[static_cast<std::size_t>(i)] * (i > 0) +
                         (i + 1 < k ? rec.a[static_cast<std::size_t>(i) + 1] : 0.0);
      lo = std::min(lo, rec.b[static_cast<std::size_t>(i)] - off);
      hi = std::max(hi, rec.b[static_cast<std::size_t>(i)] + off);
    }
    const double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    lo = std::max(lo - pad, support.lower);
    hi = std::min(hi + pad, support.upper);

    std::vector<double> next(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const double left = i == 0 ? lo : roots[static_cast<std::size_t>(i) - 1];
      const double right = i == k - 1 ? hi : roots[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] = bracketed_root(rec, k, left, right, i);
    }
    roots = std::move(next);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (!(roots[i] > roots[i - 1])) {
      throw NumericFailure("roots are not strictly increasing", static_cast<int>(i));
    }
  }
  return roots;
}

}  // namespace

OrthoFamily OrthoFamily::hermite() { return OrthoFamily{}; }

OrthoFamily OrthoFamily::laguerre(double alpha) {
  check_parameter(alpha, "Laguerre alpha");
  OrthoFamily f;
  f.kind_ = FamilyKind::laguerre;
  f.alpha_ = alpha;
  return f;
}

OrthoFamily OrthoFamily::jacobi(double alpha, double beta) {
  check_parameter(alpha, "Jacobi alpha");
  check_parameter(beta, "Jacobi beta");
  OrthoFamily f;
  f.kind_ = FamilyKind::jacobi;
  f.alpha_ = alpha;
  f.beta_ = beta;
  return f;
}

OrthoFamily OrthoFamily::bernstein_szego(BSParams params) {
  OrthoFamily f;
  f.kind_ = FamilyKind::bernstein_szego;
  f.bs_ = std::move(params);
  return f;
}

Interval OrthoFamily::support() const {
  switch (kind_) {
    case FamilyKind::hermite: return {-kInf, kInf};
    case FamilyKind::laguerre: return {0.0, kInf};
    case FamilyKind::jacobi: return {-1.0, 1.0};
    case FamilyKind::bernstein_szego: return {0.0, std::numbers::pi};
  }
  return {-kInf, kInf};
}

double OrthoFamily::weight(double t) const {
  const auto s = support();
  if (!(t >= s.lower && t <= s.upper)) throw DomainError("weight evaluated outside the support");
  switch (kind_) {
    case FamilyKind::hermite: return std::exp(-t * t) / std::sqrt(std::numbers::pi);
    case FamilyKind::laguerre: return std::pow(t, alpha_) * std::exp(-t);
    case FamilyKind::jacobi: return std::pow(1.0 - t, alpha_) * std::pow(1.0 + t, beta_);
    case FamilyKind::bernstein_szego: return bs_weight(bs_, t);
  }
  return 0.0;
}

double OrthoFamily::to_x(double t) const {
  return kind_ == FamilyKind::bernstein_szego ? std::cos(t) : t;
}

namespace {

// Shortest decimal that round-trips.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string OrthoFamily::name() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::hermite: os << "hermite"; break;
    case FamilyKind::laguerre: os << "laguerre(" << shortest(alpha_) << ")"; break;
    case FamilyKind::jacobi:
      os << "jacobi(" << shortest(alpha_) << "," << shortest(beta_) << ")";
      break;
    case FamilyKind::bernstein_szego: {
      os << "bernstein_szego(" << bs_.eps_plus() << "," << bs_.eps_minus() << ";";
      for (std::size_t r = 0; r < bs_.poles().size(); ++r) {
        const auto a = bs_.poles()[r];
        os << (r ? " " : "") << shortest(a.real());
        if (a.imag() != 0.0) os << (a.imag() > 0 ? "+" : "") << shortest(a.imag()) << "i";
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

double OrthoFamily::total_mass() const {
  switch (kind_) {
    case FamilyKind::hermite: return 1.0;
    case FamilyKind::laguerre: return std::tgamma(alpha_ + 1.0);
    case FamilyKind::jacobi: return jacobi_mass(alpha_, beta_);
    case FamilyKind::bernstein_szego: {
      // Any Gauss rule integrates the constant exactly.
      const auto rule = bs_christoffel(bs_, std::max(1, bs_.min_explicit_degree()));
      double s = 0.0;
      for (double w : rule.weights) s += w;
      return s;
    }
  }
  return 0.0;
}

int OrthoFamily::min_explicit_degree() const {
  return kind_ == FamilyKind::bernstein_szego ? bs_.min_explicit_degree() : 0;
}

double OrthoFamily::eval(int l, double t) const {
  if (l < 0) throw InvalidArgument("polynomial degree must be nonnegative");
  if (kind_ == FamilyKind::bernstein_szego) return bs_eval(bs_, l, t);
  if (l > kMaxClassicalDegree) throw UnsupportedDegree("degree exceeds the supported maximum of 64");
  const auto s = support();
  if (!(t >= s.lower && t <= s.upper)) throw DomainError("evaluation point outside the support");
  return classical_recurrence(*this, l).value(l, t);
}

void OrthoFamily::eval_all(double t, std::span<double> out) const {
  if (out.empty()) return;
  const int top = static_cast<int>(out.size()) - 1;
  if (kind_ == FamilyKind::bernstein_szego) {
    const int lo = bs_.min_explicit_degree();
    for (int l = 0; l <= top; ++l) {
      out[static_cast<std::size_t>(l)] =
          l < lo ? std::numeric_limits<double>::quiet_NaN() : bs_eval(bs_, l, t);
    }
    return;
  }
  if (top > kMaxClassicalDegree) throw UnsupportedDegree("degree exceeds the supported maximum of 64");
  const auto s = support();
  if (!(t >= s.lower && t <= s.upper)) throw DomainError("evaluation point outside the support");
  const auto rec = classical_recurrence(*this, top);
  double prev = 0.0;
  double cur = rec.q0;
  out[0] = cur;
  for (int k = 0; k < top; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const double next = ((t - rec.b[ks]) * cur - rec.a[ks] * prev) / rec.a[ks + 1];
    prev = cur;
    cur = next;
    out[ks + 1] = cur;
  }
}

QuadratureRule1D OrthoFamily::gauss_rule(int degree) const {
  if (degree < 1) throw InvalidArgument("Gauss rule degree must be at least 1");
  if (kind_ == FamilyKind::bernstein_szego) return bs_christoffel(bs_, degree);
  if (degree > kMaxClassicalDegree) {
    throw UnsupportedDegree("degree exceeds the supported maximum of 64");
  }

  const auto rec = classical_recurrence(*this, degree);
  QuadratureRule1D rule;
  rule.degree = degree;
  rule.variable = Variable::x;
  rule.nodes = classical_roots(rec, degree, support());
  rule.weights.reserve(rule.nodes.size());

  const int m = degree - 1;
  const double dd = degree;
  Recurrence shifted;
  if (kind_ == FamilyKind::laguerre) shifted = laguerre_recurrence(alpha_ + 1.0, m);
  if (kind_ == FamilyKind::jacobi) shifted = jacobi_recurrence(alpha_ + 1.0, beta_ + 1.0, m);

  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    double w = 0.0;
    switch (kind_) {
      case FamilyKind::hermite: {
        const double h = rec.value(m, x);
        w = 1.0 / (dd * h * h);
        break;
      }
      case FamilyKind::laguerre: {
        const double l1 = shifted.value(m, x);
        w = 1.0 / (dd * x * l1 * l1);
        break;
      }
      case FamilyKind::jacobi: {
        const double p1 = shifted.value(m, x);
        const double ab = alpha_ + beta_;
        w = (2.0 * dd + 1.0 + ab) / (dd * (dd + 1.0 + ab) * (1.0 - x * x) * p1 * p1);
        break;
      }
      case FamilyKind::bernstein_szego: break;
    }
    if (!(std::isfinite(w) && w > 0.0)) {
      throw NumericFailure("non-positive Christoffel weight", static_cast<int>(i));
    }
    rule.weights.push_back(w);
  }
  return rule;
}

double christoffel_reciprocal_sum(const OrthoFamily& family, int degree, double t) {
  if (degree < 1) throw InvalidArgument("degree must be at least 1");
  if (family.min_explicit_degree() > 0) {
    throw UnsupportedDegree("reciprocal sum needs every p_l with l < degree");
  }
  std::vector<double> p(static_cast<std::size_t>(degree));
  family.eval_all(t, p);
  double s = 0.0;
  for (double v : p) s += v * v;
  return 1.0 / s;
}

}  // namespace symcub
