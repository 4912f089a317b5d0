#include "symcub/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include "symcub/error.hpp"
#include "symcub/version.hpp"

namespace symcub {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailBudget = 1e-12;
constexpr double kHermiteBox = 12.0;

double laguerre_box(double alpha) { return 60.0 + 10.0 * alpha; }

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Keeps the running maximum, letting a NaN win so that it cannot hide.
void track_max(double& acc, double e) {
  if (std::isnan(acc)) return;
  if (std::isnan(e) || e > acc) acc = e;
}

// Calls visit(idx) for every idx with first = idx[0] > idx[1] > ... >= 0.
template <typename F>
void for_each_decreasing(std::size_t first, std::size_t len, F&& visit) {
  if (first + 1 < len) return;
  std::vector<std::size_t> idx(len);
  idx[0] = first;
  for (std::size_t j = 1; j < len; ++j) idx[j] = len - 1 - j;
  while (true) {
    visit(idx);
    bool advanced = false;
    for (std::size_t j = len; j > 1 && !advanced;) {
      --j;
      if (idx[j] + 1 < idx[j - 1]) {
        ++idx[j];
        for (std::size_t l = j + 1; l < len; ++l) idx[l] = len - 1 - l;
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

GaussLegendre gauss_legendre(int points, double a, double b) {
  if (points < 1) throw InvalidArgument("Gauss-Legendre needs at least one point");
  GaussLegendre g;
  g.nodes.resize(static_cast<std::size_t>(points));
  g.weights.resize(static_cast<std::size_t>(points));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int pairs = (points + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= points; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = points * (z * p1 - p2) / (z * z - 1.0);
      const double prev = z;
      z = prev - p1 / dp;
      if (std::abs(z - prev) <= 1e-16) break;
    }
    const double w = 2.0 * half / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(points - 1 - i);
    g.nodes[lo] = mid - half * z;
    g.nodes[hi] = mid + half * z;
    g.weights[lo] = w;
    g.weights[hi] = w;
  }
  return g;
}

AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double tolerance) {
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tolerance, &err);
  return {v, err};
}

double relative_error(double approx, const OracleValue& ref) {
  const double diff = std::abs(approx - ref.value);
  if (ref.scale == 0.0) return diff;
  return diff / ref.scale;
}

const char* to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::tensor_gauss_legendre: return "tensor_gauss_legendre";
    case ReferenceKind::adaptive_univariate: return "adaptive_univariate";
    case ReferenceKind::monte_carlo: return "monte_carlo";
  }
  return "";
}

EnsembleOracle::EnsembleOracle(OrthoFamily family, int n, OracleConfig cfg)
    : family_(std::move(family)), n_(n), cfg_(cfg) {
  if (n < 1) throw InvalidArgument("oracle needs n >= 1");
  if (cfg_.points_per_axis < kMinOraclePoints) {
    throw OracleImprecise("points_per_axis = " + std::to_string(cfg_.points_per_axis) +
                          " is below the minimum of 50");
  }
  switch (family_.kind()) {
    case FamilyKind::hermite: axis_ = {-kHermiteBox, kHermiteBox}; break;
    // x = s^2 keeps the integrand smooth at 0 whenever 2 alpha is an integer.
    case FamilyKind::laguerre: axis_ = {0.0, std::sqrt(laguerre_box(family_.alpha()))}; break;
    // x = cos(theta) absorbs the endpoint singularities in the same way.
    case FamilyKind::jacobi: axis_ = {0.0, kPi}; break;
    case FamilyKind::bernstein_szego: axis_ = {0.0, kPi}; break;
  }
  const auto gl = gauss_legendre(cfg_.points_per_axis, axis_.lower, axis_.upper);
  x_.resize(gl.nodes.size());
  u_.resize(gl.nodes.size());
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
    const auto [x, u] = map(gl.nodes[k]);
    x_[k] = x;
    u_[k] = u * gl.weights[k];
  }
}

std::pair<double, double> EnsembleOracle::map(double t) const {
  switch (family_.kind()) {
    case FamilyKind::hermite: return {t, std::exp(-t * t) / std::sqrt(kPi)};
    case FamilyKind::laguerre: {
      const double a = family_.alpha();
      return {t * t, 2.0 * std::pow(t, 2.0 * a + 1.0) * std::exp(-t * t)};
    }
    case FamilyKind::jacobi: {
      const double a = family_.alpha();
      const double b = family_.beta();
      return {std::cos(t), std::exp2(a + b + 1.0) * std::pow(std::sin(0.5 * t), 2.0 * a + 1.0) *
                               std::pow(std::cos(0.5 * t), 2.0 * b + 1.0)};
    }
    case FamilyKind::bernstein_szego: {
      // Trigonometric form of the weight, written out independently of c(xi).
      const auto& p = family_.bs();
      const double c = std::cos(t);
      double rho = 1.0;
      if (p.eps_plus()) rho *= 2.0 * (1.0 + c);
      if (p.eps_minus()) rho *= 2.0 * (1.0 - c);
      std::complex<double> den{1.0, 0.0};
      for (const auto& a : p.poles()) den *= 1.0 + 2.0 * a * c + a * a;
      return {c, rho / (2.0 * kPi * den.real())};
    }
  }
  return {t, 0.0};
}

double EnsembleOracle::tail_bound(int degree) const {
  switch (family_.kind()) {
    case FamilyKind::hermite:
      return boost::math::gamma_q(0.5 * (degree + 1), kHermiteBox * kHermiteBox);
    case FamilyKind::laguerre:
      return boost::math::gamma_q(family_.alpha() + 1.0 + degree, laguerre_box(family_.alpha()));
    default: return 0.0;
  }
}

std::vector<OracleValue> EnsembleOracle::integrate_monomials(
    const std::vector<Partition>& labels) const {
  if (labels.empty()) return {};
  for (const auto& l : labels) {
    if (l.size() != n_) throw InvalidArgument("monomial label has the wrong length");
  }
  if (cfg_.reference_kind != ReferenceKind::tensor_gauss_legendre) {
    std::vector<OracleValue> out;
    for (const auto& l : labels) {
      out.push_back(integrate([&](std::span<const double> x) { return monomial_eval(l, x); }));
    }
    return out;
  }

  const MonomialSet set(labels);
  const int top = set.max_part();
  const double tail = tail_bound(top + 2 * (n_ - 1));
  if (tail > kTailBudget) {
    throw OracleImprecise("truncation tail mass " + std::to_string(tail) +
                          " exceeds the 1e-12 budget");
  }

  const std::size_t npts = x_.size();
  const auto kp = static_cast<std::size_t>(top) + 1;
  // Power tables x^e and |x|^e at every axis node.
  std::vector<double> pw(npts * kp), apw(npts * kp);
  for (std::size_t k = 0; k < npts; ++k) {
    double v = 1.0, av = 1.0;
    for (std::size_t e = 0; e < kp; ++e) {
      pw[k * kp + e] = v;
      apw[k * kp + e] = av;
      v *= x_[k];
      av *= std::abs(x_[k]);
    }
  }

  const std::size_t nl = labels.size();
  const auto n = static_cast<std::size_t>(n_);
  if (n == 1) {
    std::vector<OracleValue> out(nl);
    for (std::size_t i = 0; i < nl; ++i) {
      const auto e = static_cast<std::size_t>(labels[i][0]);
      for (std::size_t k = 0; k < npts; ++k) {
        out[i].value += u_[k] * pw[k * kp + e];
        out[i].scale += u_[k] * apw[k * kp + e];
      }
    }
    return out;
  }

  // Outer coordinates run over strictly decreasing index tuples (the
  // innermost-summed integrand is symmetric in them and vanishes on
  // diagonals); the last coordinate is summed in full.
  std::vector<std::vector<double>> val(npts, std::vector<double>(nl, 0.0));
  std::vector<std::vector<double>> sc(npts, std::vector<double>(nl, 0.0));
  parallel_for(npts, cfg_.threads, [&](std::size_t k1) {
    const std::size_t outer = n - 1;
    std::vector<double> q(npts), inner(kp), inner_abs(kp);
    auto& v_out = val[k1];
    auto& s_out = sc[k1];
    for_each_decreasing(k1, outer, [&](const std::vector<std::size_t>& idx) {
      double uo = 1.0, vo = 1.0;
      for (std::size_t j = 0; j < outer; ++j) {
        uo *= u_[idx[j]];
        for (std::size_t l = j + 1; l < outer; ++l) vo *= x_[idx[j]] - x_[idx[l]];
      }
      const double outer_weight = uo * vo * vo;
      for (std::size_t k = 0; k < npts; ++k) {
        double p = u_[k];
        for (std::size_t j = 0; j < outer; ++j) {
          const double d = x_[idx[j]] - x_[k];
          p *= d * d;
        }
        q[k] = p;
      }
      for (std::size_t e = 0; e < kp; ++e) {
        double s = 0.0, sa = 0.0;
        for (std::size_t k = 0; k < npts; ++k) {
          s += q[k] * pw[k * kp + e];
          sa += q[k] * apw[k * kp + e];
        }
        inner[e] = s;
        inner_abs[e] = sa;
      }
      for (std::size_t i = 0; i < nl; ++i) {
        const auto orbit = set.flat_orbit(i);
        double s = 0.0, sa = 0.0;
        for (std::size_t t = 0; t < orbit.size(); t += n) {
          double prod = 1.0, aprod = 1.0;
          for (std::size_t j = 0; j < outer; ++j) {
            const auto e = static_cast<std::size_t>(orbit[t + j]);
            prod *= pw[idx[j] * kp + e];
            aprod *= apw[idx[j] * kp + e];
          }
          const auto last = static_cast<std::size_t>(orbit[t + outer]);
          s += prod * inner[last];
          sa += aprod * inner_abs[last];
        }
        v_out[i] += outer_weight * s;
        s_out[i] += outer_weight * sa;
      }
    });
  });

  // (n-1)! decreasing orderings of the outer tuple, over n! for the prefactor.
  std::vector<OracleValue> out(nl);
  for (std::size_t k = 0; k < npts; ++k) {
    for (std::size_t i = 0; i < nl; ++i) {
      out[i].value += val[k][i];
      out[i].scale += sc[k][i];
    }
  }
  for (auto& o : out) {
    o.value /= static_cast<double>(n);
    o.scale /= static_cast<double>(n);
  }
  return out;
}

OracleValue EnsembleOracle::integrate_monomial(const Partition& lambda) const {
  return integrate_monomials({lambda}).front();
}

OracleValue EnsembleOracle::integrate_spec(const IntegrandSpec& spec) const {
  if (spec.n() != n_) throw InvalidArgument("integrand has the wrong number of variables");
  if (spec.poles()) {
    const std::vector<std::complex<double>> none;
    const auto& own =
        family_.kind() == FamilyKind::bernstein_szego ? family_.bs().poles() : none;
    if (!same_poles(*spec.poles(), own)) {
      throw InvalidArgument("integrand poles do not match the oracle's family");
    }
  }
  std::vector<Partition> labels;
  for (const auto& t : spec.terms()) labels.push_back(t.partition);
  const auto refs = integrate_monomials(labels);
  OracleValue out;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    out.value += spec.terms()[i].coeff * refs[i].value;
    out.scale += std::abs(spec.terms()[i].coeff) * refs[i].scale;
  }
  return out;
}

OracleValue EnsembleOracle::integrate(const SymmetricFunction& f) const {
  const auto n = static_cast<std::size_t>(n_);
  switch (cfg_.reference_kind) {
    case ReferenceKind::adaptive_univariate: {
      if (n_ != 1) throw InvalidArgument("adaptive reference is univariate only");
      const auto g = [&](double t, bool absolute) {
        const auto [x, u] = map(t);
        const double v = f(std::span<const double>(&x, 1)) * u;
        return absolute ? std::abs(v) : v;
      };
      const double v = adaptive_integrate([&](double t) { return g(t, false); }, axis_.lower,
                                          axis_.upper).value;
      const double s = adaptive_integrate([&](double t) { return g(t, true); }, axis_.lower,
                                          axis_.upper).value;
      return {v, s};
    }
    case ReferenceKind::monte_carlo: {
      const auto est = monte_carlo(f, cfg_.mc_samples, cfg_.seed);
      const auto abs_est = monte_carlo(
          [&](std::span<const double> x) { return std::abs(f(x)); }, cfg_.mc_samples, cfg_.seed);
      return {est.mean, abs_est.mean};
    }
    case ReferenceKind::tensor_gauss_legendre: break;
  }

  const std::size_t npts = x_.size();
  if (npts < n) return {};
  std::vector<OracleValue> partial(npts);
  parallel_for(npts, cfg_.threads, [&](std::size_t k1) {
    std::vector<double> x(n);
    for_each_decreasing(k1, n, [&](const std::vector<std::size_t>& idx) {
      double w = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = x_[idx[j]];
        w *= u_[idx[j]];
      }
      const double v = vandermonde(x);
      const double fv = f(x) * w * v * v;
      partial[k1].value += fv;
      partial[k1].scale += std::abs(fv);
    });
  });
  OracleValue out;
  for (const auto& p : partial) {
    out.value += p.value;
    out.scale += p.scale;
  }
  return out;
}

EnsembleOracle::MonteCarloEstimate EnsembleOracle::monte_carlo(const SymmetricFunction& f,
                                                               int samples,
                                                               std::uint64_t seed) const {
  if (samples < 2) throw InvalidArgument("Monte-Carlo needs at least two samples");
  std::mt19937_64 gen(seed);
  const auto n = static_cast<std::size_t>(n_);
  const double width = axis_.upper - axis_.lower;
  const double volume = std::pow(width, n_) / factorial(n_);
  std::vector<double> x(n);
  double mean = 0.0, m2 = 0.0;
  for (int s = 0; s < samples; ++s) {
    double w = volume;
    for (std::size_t j = 0; j < n; ++j) {
      const auto [xj, uj] = map(axis_.lower + width * uniform01(gen));
      x[j] = xj;
      w *= uj;
    }
    const double v = vandermonde(x);
    const double g = f(x) * w * v * v;
    const double delta = g - mean;
    mean += delta / (s + 1);
    m2 += delta * (g - mean);
  }
  const double var = m2 / (samples - 1);
  return {mean, std::sqrt(var / samples)};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int VerificationReport::exit_code() const {
  if (oracle_status == OracleStatus::imprecise) return 2;
  return passed() ? 0 : 1;
}

void VerificationReport::add(std::string name, double error, double tolerance, std::string metric) {
  checks.push_back({std::move(name), error, tolerance, error <= tolerance, std::move(metric)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (auto p : other.probes) {
    p.name = prefix + p.name;
    probes.push_back(std::move(p));
  }
  if (other.oracle_status == OracleStatus::imprecise) {
    if (oracle_status != OracleStatus::imprecise) oracle_message = prefix + other.oracle_message;
    oracle_status = OracleStatus::imprecise;
  }
}

std::string VerificationReport::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  json cs = json::array();
  for (const auto& c : checks) {
    json o;
    o["name"] = c.name;
    o["max_abs_error"] = c.max_abs_error;
    o["tolerance"] = c.tolerance;
    o["pass"] = c.pass;
    o["metric"] = c.metric;
    cs.push_back(std::move(o));
  }
  json ps = json::array();
  for (const auto& p : probes) {
    json o;
    o["name"] = p.name;
    o["error"] = p.error;
    o["expected_above"] = p.expected_above;
    o["observed_above"] = p.error > p.expected_above;
    ps.push_back(std::move(o));
  }
  j["checks"] = std::move(cs);
  j["probes"] = std::move(ps);
  j["oracle_status"] = oracle_status == OracleStatus::ok ? "ok" : "imprecise";
  if (!oracle_message.empty()) j["oracle_message"] = oracle_message;
  json env = json::object();
  for (const auto& [k, v] : environment) env[k] = v;
  j["environment"] = std::move(env);
  j["passed"] = passed();
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

void describe_config(VerificationReport& report, const OracleConfig& cfg) {
  report.environment.emplace_back("library_version", kVersion);
  report.environment.emplace_back("points_per_axis", std::to_string(cfg.points_per_axis));
  report.environment.emplace_back("reference_kind", to_string(cfg.reference_kind));
  report.environment.emplace_back("mc_samples", std::to_string(cfg.mc_samples));
  report.environment.emplace_back("seed", std::to_string(cfg.seed));
}

VerificationReport run_orthogonality_suite(const CubatureRule& rule) {
  VerificationReport rep;
  const int n = rule.n;
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t count = rule.size();

  const double expected = static_cast<double>(binomial(rule.m + n, n));
  rep.add("node_count", std::abs(static_cast<double>(count) - expected), 0.0, "count");
  rep.add("labels_canonical", rule.labels == enumerate_alcove(rule.m, n) ? 0.0 : 1.0, 0.0,
          "mismatch");

  double bad_weights = 0.0;
  for (double w : rule.weights) bad_weights += (std::isfinite(w) && w > 0.0) ? 0.0 : 1.0;
  rep.add("weights_positive", bad_weights, 0.0, "count_nonpositive");

  const auto sup = rule.family.support();
  double bad_nodes = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto row = rule.node(i);
    for (std::size_t j = 0; j < nn; ++j) {
      const bool inside = row[j] > sup.lower && row[j] < sup.upper && std::isfinite(row[j]);
      const bool ordered = j == 0 || row[j] < row[j - 1];
      if (!inside || !ordered) {
        bad_nodes += 1.0;
        break;
      }
    }
  }
  rep.add("nodes_interior_decreasing", bad_nodes, 0.0, "count_violations");
  if (bad_nodes > 0.0) {
    rep.add("gram", std::numeric_limits<double>::infinity(), 1e-10, "max_abs_deviation_from_identity");
    return rep;
  }

  // Only labels whose every degree has an explicit formula take part.
  const int lo = rule.family.min_explicit_degree();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < count; ++i) {
    if (rule.labels[i].back() >= lo) active.push_back(i);
  }

  const SchurEvaluator ev(rule.family, n);
  std::vector<double> w(count);
  for (std::size_t i = 0; i < count; ++i) w[i] = full_weight(rule, i);
  // P[a][node] for active labels a.
  std::vector<std::vector<double>> p(active.size(), std::vector<double>(count));
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t k = 0; k < count; ++k) p[a][k] = ev(rule.labels[active[a]], rule.node(k));
  }

  double gram = 0.0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = a; b < active.size(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < count; ++k) s += p[a][k] * p[b][k] * w[k];
      track_max(gram, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  rep.add("gram", gram, 1e-10, "max_abs_deviation_from_identity");

  if (active.size() == count) {
    double dual = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t l = k; l < count; ++l) {
        double s = 0.0;
        for (std::size_t a = 0; a < count; ++a) s += p[a][k] * p[a][l];
        s *= std::sqrt(w[k] * w[l]);
        track_max(dual, std::abs(s - (k == l ? 1.0 : 0.0)));
      }
    }
    rep.add("dual_gram", dual, 1e-9, "max_abs_deviation_from_identity");
  }
  return rep;
}

VerificationReport run_exactness_suite(const CubatureRule& rule, const OracleConfig& cfg) {
  VerificationReport rep;
  const int n = rule.n;
  try {
    OracleConfig tensor = cfg;
    tensor.reference_kind = ReferenceKind::tensor_gauss_legendre;
    OracleConfig doubled = tensor;
    doubled.points_per_axis = 2 * tensor.points_per_axis;
    const EnsembleOracle oracle(rule.family, n, tensor);
    const EnsembleOracle fine(rule.family, n, doubled);

    const auto labels = enumerate_alcove(2 * rule.m + 1, n);
    const auto refs = oracle.integrate_monomials(labels);
    const auto refs_fine = fine.integrate_monomials(labels);

    double drift = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      track_max(drift, relative_error(refs[i].value, refs_fine[i]));
    }
    rep.add("oracle_self_consistency", drift, 1e-10, "relative_to_scale");
    if (!(drift <= 1e-10)) {
      rep.oracle_status = OracleStatus::imprecise;
      rep.oracle_message = "doubling points_per_axis moved a reference value by " +
                           std::to_string(drift) + " relative";
    }

    const MonomialSet set(labels);
    std::vector<double> quad(labels.size());
    std::vector<double> mvals(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      quad[i] = integrate_symmetric(rule, [&](std::span<const double> x) {
        return monomial_eval(labels[i], x);
      });
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      track_max(worst, relative_error(quad[i], refs[i]));
    }
    rep.add("mass", relative_error(quad.back(), refs.back()), 1e-10, "relative_to_scale");
    rep.add("monomial_exactness", worst, 1e-8, "relative_to_scale");

    std::mt19937_64 gen(cfg.seed);
    std::vector<double> coeff(labels.size());
    for (auto& c : coeff) c = 2.0 * uniform01(gen) - 1.0;
    const auto dense = [&](std::span<const double> x) {
      set.evaluate(x, mvals);
      double s = 0.0;
      for (std::size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * mvals[i];
      return s;
    };
    OracleValue dense_ref;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      dense_ref.value += coeff[i] * refs[i].value;
      dense_ref.scale += std::abs(coeff[i]) * refs[i].scale;
    }
    rep.add("random_polynomial", relative_error(integrate_symmetric(rule, dense), dense_ref), 1e-8,
            "relative_to_scale");

    const auto mc = oracle.monte_carlo(dense, cfg.mc_samples, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    rep.add("monte_carlo_guard", std::abs(mc.mean - dense_ref.value),
            5.0 * mc.standard_error + 1e-12 * dense_ref.scale, "abs_within_5_standard_errors");

    std::vector<int> probe(static_cast<std::size_t>(n), 0);
    probe[0] = 2 * rule.m + 2;
    const Partition probe_label(probe);
    const double probe_quad = integrate_symmetric(rule, [&](std::span<const double> x) {
      return monomial_eval(probe_label, x);
    });
    rep.probes.push_back({"degree_2m_plus_2_" + probe_label.to_string(),
                          relative_error(probe_quad, oracle.integrate_monomial(probe_label)),
                          1e-4});
  } catch (const OracleImprecise& e) {
    rep.oracle_status = OracleStatus::imprecise;
    rep.oracle_message = e.what();
  }
  return rep;
}

VerificationReport run_default_sweep(const OracleConfig& cfg) {
  struct Case {
    OrthoFamily family;
    int m;
    int n;
  };
  const auto pair = BSParams(0, 0, {{0.3, 0.4}, {0.3, -0.4}});
  const std::vector<Case> cases = {
      {OrthoFamily::hermite(), 3, 2},
      {OrthoFamily::hermite(), 2, 3},
      {OrthoFamily::laguerre(1.0), 3, 2},
      {OrthoFamily::laguerre(1.0), 2, 3},
      {OrthoFamily::jacobi(0.5, 0.5), 3, 2},
      {OrthoFamily::jacobi(0.5, 0.5), 2, 3},
      {OrthoFamily::bernstein_szego(BSParams::chebyshev(1)), 2, 2},
      {OrthoFamily::bernstein_szego(pair), 3, 2},
      {OrthoFamily::bernstein_szego(BSParams(1, 0, {0.5})), 2, 2},
  };

  VerificationReport rep;
  describe_config(rep, cfg);
  for (const auto& c : cases) {
    const auto rule = build_rule(c.family, c.m, c.n, cfg.threads);
    const std::string prefix =
        c.family.name() + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) + ": ";
    rep.merge(run_orthogonality_suite(rule), prefix);
    rep.merge(run_exactness_suite(rule, cfg), prefix);
  }
  return rep;
}

}  // namespace symcub
