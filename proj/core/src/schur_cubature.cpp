#include "symcub/schur_cubature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "symcub/error.hpp"
#include "symcub/version.hpp"

namespace symcub {

namespace {

constexpr int kMaxVariables = 12;
constexpr double kMinGap = 1e-8;

// Determinant by Gaussian elimination with partial pivoting; a is destroyed.
double determinant(std::vector<double>& a, int n) {
  double det = 1.0;
  const auto idx = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[idx(r, col)]) > std::abs(a[idx(piv, col)])) piv = r;
    }
    if (a[idx(piv, col)] == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[idx(piv, c)], a[idx(col, c)]);
      det = -det;
    }
    const double p = a[idx(col, col)];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const double f = a[idx(r, col)] / p;
      if (f == 0.0) continue;
      for (int c = col + 1; c < n; ++c) a[idx(r, c)] -= f * a[idx(col, c)];
    }
  }
  return det;
}

const BSParams& require_bs(const CubatureRule& rule) {
  if (rule.family.kind() != FamilyKind::bernstein_szego) {
    throw InvalidArgument("operation requires a Bernstein-Szego rule");
  }
  return rule.family.bs();
}

}  // namespace

double vandermonde(std::span<const double> x) {
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k < x.size(); ++k) v *= x[j] - x[k];
  }
  return v;
}

SchurEvaluator::SchurEvaluator(OrthoFamily family, int n)
    : basis_([family](int l, double t) { return family.eval(l, t); }),
      to_x_([family](double t) { return family.to_x(t); }),
      n_(n) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("n must lie in [1, 12]");
}

SchurEvaluator::SchurEvaluator(Basis basis, std::function<double(double)> to_x, int n)
    : basis_(std::move(basis)), to_x_(std::move(to_x)), n_(n) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("n must lie in [1, 12]");
}

double SchurEvaluator::operator()(const Partition& lambda, std::span<const double> t) const {
  if (lambda.size() != n_ || static_cast<int>(t.size()) != n_) {
    throw InvalidArgument("partition and point must both have length n");
  }
  const auto nn = static_cast<std::size_t>(n_);
  std::vector<double> x(nn);
  for (std::size_t k = 0; k < nn; ++k) x[k] = to_x_(t[k]);
  for (std::size_t j = 0; j < nn; ++j) {
    for (std::size_t k = j + 1; k < nn; ++k) {
      if (std::abs(x[j] - x[k]) < kMinGap) {
        throw IllConditionedInput("coordinates closer than 1e-8; P_lambda is not evaluated there");
      }
    }
  }
  std::vector<double> a(nn * nn);
  for (int j = 0; j < n_; ++j) {
    const int l = lambda[j] + n_ - 1 - j;
    for (std::size_t k = 0; k < nn; ++k) a[static_cast<std::size_t>(j) * nn + k] = basis_(l, t[k]);
  }
  return determinant(a, n_) / vandermonde(x);
}

double schur_eval(const SchurEvaluator& ev, const Partition& lambda, std::span<const double> t) {
  return ev(lambda, t);
}

std::complex<double> bs_C_func(const BSParams& params, std::span<const double> xi) {
  const std::size_t n = xi.size();
  std::complex<double> c = std::ldexp(1.0, static_cast<int>(n * (n - 1) / 2));
  for (std::size_t j = 0; j < n; ++j) c *= c_func(params, xi[j]);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      c /= (1.0 - std::polar(1.0, -(xi[j] + xi[k]))) * (1.0 - std::polar(1.0, -(xi[j] - xi[k])));
    }
  }
  return c;
}

double bs_schur_expansion(const BSParams& params, const Partition& lambda,
                          std::span<const double> xi) {
  const int n = lambda.size();
  if (n < 1 || n > 8 || static_cast<int>(xi.size()) != n) {
    throw InvalidArgument("expansion needs 1 <= n <= 8 and a point of length n");
  }
  if (lambda.back() < params.min_explicit_degree()) {
    throw UnsupportedDegree("expansion needs lambda_n >= d_eps");
  }
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> sigma(nn);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<double> arg(nn);
  std::complex<double> sum{0.0, 0.0};
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      double phase = 0.0;
      for (std::size_t j = 0; j < nn; ++j) {
        const double s = (mask >> j) & 1u ? -1.0 : 1.0;
        arg[j] = s * xi[static_cast<std::size_t>(sigma[j])];
        phase += lambda[static_cast<int>(j)] * arg[j];
      }
      sum += bs_C_func(params, arg) * std::polar(1.0, phase);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::sqrt(bs_delta(params, lambda.back())) * sum.real();
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

CubatureRule build_rule(const OrthoFamily& family, int m, int n, int threads) {
  if (m < 0 || n < 1 || n > kMaxVariables) {
    throw InvalidArgument("build_rule needs m >= 0 and 1 <= n <= 12");
  }
  const int degree = m + n;
  const bool bs = family.kind() == FamilyKind::bernstein_szego;
  if (bs && !family.bs().admits_degree(degree)) {
    throw UnsupportedDegree("Bernstein-Szego rule needs d <= 2(m+n) + eps_plus + eps_minus");
  }

  CubatureRule rule;
  rule.family = family;
  rule.m = m;
  rule.n = n;
  rule.labels = enumerate_alcove(m, n);
  rule.variable = family.variable();
  rule.weight_convention = bs ? WeightConvention::inverse_H : WeightConvention::full;
  rule.version = kVersion;

  const auto base = family.gauss_rule(degree);
  // Per-node factor of the product weight: Christoffel weights for the
  // classical kinds, 1/h for Bernstein-Szego.
  std::vector<double> factor(base.nodes.size());
  for (std::size_t i = 0; i < factor.size(); ++i) {
    factor[i] = bs ? 1.0 / h_func(family.bs(), degree, base.nodes[i]) : base.weights[i];
  }

  const auto nn = static_cast<std::size_t>(n);
  rule.nodes.resize(rule.labels.size() * nn);
  rule.weights.resize(rule.labels.size());
  parallel_for(rule.labels.size(), threads, [&](std::size_t i) {
    const auto& lam = rule.labels[i];
    double* row = rule.nodes.data() + i * nn;
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      const auto idx = static_cast<std::size_t>(lam[j] + n - 1 - j);
      row[j] = base.nodes[idx];
      w *= factor[idx];
    }
    if (!bs) {
      const double v = vandermonde({row, nn});
      w *= v * v;
    }
    rule.weights[i] = w;
  });
  return rule;
}

double ensemble_density(const OrthoFamily& family, std::span<const double> t) {
  const auto sup = family.support();
  std::vector<double> x(t.size());
  double prod = 1.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!(t[j] >= sup.lower && t[j] <= sup.upper)) {
      throw DomainError("density evaluated outside the support");
    }
    x[j] = family.to_x(t[j]);
    prod *= family.kind() == FamilyKind::bernstein_szego
                ? chebyshev_weight_factor(family.bs(), t[j])
                : family.weight(t[j]);
  }
  const double v = vandermonde(x);
  return prod * v * v;
}

double full_weight(const CubatureRule& rule, std::size_t i) {
  if (rule.weight_convention == WeightConvention::full) return rule.weights[i];
  const auto& params = require_bs(rule);
  const auto xi = rule.node(i);
  double poles = 1.0;
  for (double t : xi) poles *= pole_factor(params, t);
  return rule.weights[i] * ensemble_density(rule.family, xi) / poles;
}

double integrate_symmetric(const CubatureRule& rule, const SymmetricFunction& f) {
  std::vector<double> x(static_cast<std::size_t>(rule.n));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto t = rule.node(i);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = rule.family.to_x(t[j]);
    sum += f(x) * full_weight(rule, i);
  }
  return sum;
}

double integrate_rational_bs(const CubatureRule& rule, const SymmetricFunction& f) {
  require_bs(rule);
  return integrate_symmetric(rule, f);
}

double integrate_spec(const CubatureRule& rule, const IntegrandSpec& spec) {
  if (spec.n() != rule.n) {
    throw InvalidArgument("integrand has n = " + std::to_string(spec.n()) +
                          " but the rule has n = " + std::to_string(rule.n));
  }
  if (spec.poles()) {
    const std::vector<std::complex<double>> none;
    const auto& rule_poles =
        rule.family.kind() == FamilyKind::bernstein_szego ? rule.family.bs().poles() : none;
    if (!same_poles(*spec.poles(), rule_poles)) {
      throw InvalidArgument("integrand poles do not match the rule's poles");
    }
  }
  return integrate_symmetric(rule, [&](std::span<const double> x) { return spec.numerator(x); });
}

}  // namespace symcub
