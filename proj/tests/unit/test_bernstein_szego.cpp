#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "symcub/bernstein_szego.hpp"
#include "symcub/error.hpp"
#include "symcub/orthopoly.hpp"
#include "symcub/verify.hpp"

using namespace symcub;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

// Weight written out directly, without c(xi).
double weight_direct(const BSParams& p, double xi) {
  double num = std::pow(2.0, p.eps_plus() + p.eps_minus()) * (1 + p.eps_plus() * std::cos(xi)) *
               (1 - p.eps_minus() * std::cos(xi));
  double den = 2 * kPi;
  for (const auto& a : p.poles()) den *= std::norm(1.0 + a * std::exp(cd(0, xi)));
  return num / den;
}

double integrate_xi(const std::function<double(double)>& f) {
  return adaptive_integrate(f, 0.0, kPi, 1e-14).value;
}

}  // namespace

TEST(BSParams, Validation) {
  EXPECT_THROW(BSParams(2, 0, {}), InvalidArgument);
  EXPECT_THROW(BSParams(0, 0, {cd(1.0, 0)}), InvalidArgument);
  EXPECT_THROW(BSParams(0, 0, {cd(0.3, 0.4)}), InvalidArgument);
  EXPECT_THROW(BSParams(0, 0, {cd(0, 0)}), InvalidArgument);
  EXPECT_NO_THROW(BSParams(0, 0, {cd(0, 0)}, true));
  EXPECT_NO_THROW(BSParams(0, 0, {cd(0.3, 0.4), cd(0.3, -0.4)}));
}

TEST(BSParams, DerivedQuantities) {
  const BSParams p(1, 0, {cd(0.5, 0), cd(-0.2, 0), cd(0.1, 0)});
  EXPECT_DOUBLE_EQ(p.d_eps(), 1.0);
  EXPECT_EQ(p.min_explicit_degree(), 1);
  const BSParams q(0, 0, {cd(0.9, 0)});
  EXPECT_NEAR(q.kappa_plus(), 0.5 * 0.1 / 1.9, 1e-15);
  EXPECT_NEAR(q.kappa_minus(), 0.5 * 1.9 / 0.1, 1e-12);
}

TEST(CFunc, Examples) {
  EXPECT_NEAR(std::abs(c_func(BSParams::chebyshev(1), 1.1) - cd(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c_func(BSParams(0, 0, {cd(0, 0)}, true), kPi / 2) - cd(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c_func(BSParams(1, 0, {}), kPi / 2) - cd(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_THROW(c_func(BSParams(1, 0, {}), kPi), DomainError);
  EXPECT_THROW(c_func(BSParams(0, 1, {}), 0.0), DomainError);
}

TEST(CFunc, WeightMatchesDirectForm) {
  std::mt19937_64 gen(11);
  for (int s = 0; s < 20; ++s) {
    const auto p = testsupport::random_bs_params(gen, 4, 0.8);
    for (double xi : {0.2, 1.0, 2.3, 3.0}) {
      EXPECT_NEAR(bs_weight(p, xi), weight_direct(p, xi), 1e-12 * weight_direct(p, xi));
    }
  }
}

TEST(VA, Examples) {
  EXPECT_NEAR(v_a(0.0, 1.234), 1.234, 1e-15);
  for (double a : {-0.9, -0.3, 0.5, 0.95}) EXPECT_NEAR(v_a(a, kPi), kPi, 1e-14);
  EXPECT_NEAR(v_a(0.5, kPi / 2), 2 * std::atan(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(v_a(0.5, kPi / 2), testsupport::v_numeric(cd(0.5, 0), kPi / 2).real(), 1e-13);
  EXPECT_NEAR(v_a(0.5, kPi / 2 + 2 * kPi), 2 * std::atan(1.0 / 3.0) + 2 * kPi, 1e-14);
}

TEST(VA, ComplexMatchesNumericIntegral) {
  for (const cd a : {cd(0.3, 0.4), cd(-0.5, 0.6), cd(0.1, -0.85)}) {
    for (double xi : {0.3, 1.5, 2.9, kPi}) {
      const cd ref = testsupport::v_numeric(a, xi);
      EXPECT_NEAR(std::abs(v_a(a, xi) - ref), 0.0, 1e-12) << a << " " << xi;
    }
    EXPECT_NEAR(std::abs(v_a_prime(a, 0.7) - (1.0 - a * a) / (1.0 + 2.0 * a * std::cos(0.7) + a * a)),
                0.0, 1e-15);
  }
}

TEST(BSEval, Examples) {
  EXPECT_NEAR(bs_eval(BSParams::chebyshev(1), 2, kPi / 3), -1.0, 1e-14);
  EXPECT_NEAR(bs_eval(BSParams(1, 1, {}), 1, kPi / 2), 0.0, 1e-14);

  const BSParams p(0, 0, {cd(0.5, 0), cd(1.0 / 3, 0)});
  // c(pi/2) = (1 - i/2)(1 - i/3); Delta_1 = 6/7.
  const cd c = cd(1, -0.5) * cd(1, -1.0 / 3);
  const double expected = std::sqrt(6.0 / 7) * 2 * (c * cd(0, 1)).real();
  EXPECT_NEAR(bs_eval(p, 1, kPi / 2), expected, 1e-14);
  EXPECT_NEAR(integrate_xi([&](double xi) { return std::pow(bs_eval(p, 1, xi), 2) * weight_direct(p, xi); }),
              1.0, 1e-10);
  EXPECT_THROW(bs_eval(p, 0, 1.0), UnsupportedDegree);
}

TEST(BSEval, OrthonormalOnRandomParameters) {
  std::mt19937_64 gen(5);
  for (int s = 0; s < 8; ++s) {
    const auto p = testsupport::random_bs_params(gen, 4, 0.7);
    const int lo = p.min_explicit_degree();
    for (int l = lo; l <= lo + 3; ++l) {
      for (int k = lo; k <= l; ++k) {
        const double g = integrate_xi(
            [&](double xi) { return bs_eval(p, l, xi) * bs_eval(p, k, xi) * weight_direct(p, xi); });
        EXPECT_NEAR(g, l == k ? 1.0 : 0.0, 1e-9) << "seed " << s << " " << l << "," << k;
      }
    }
  }
}

TEST(HFunc, Examples) {
  for (int deg = 1; deg < 6; ++deg) {
    EXPECT_NEAR(h_func(BSParams::chebyshev(1), deg, 0.4), 2.0 * deg, 1e-14);
    EXPECT_NEAR(h_func(BSParams(1, 1, {}), deg, 0.4), 2.0 * (deg + 1), 1e-14);
    EXPECT_NEAR(h_func(BSParams(0, 0, {cd(0.5, 0)}), deg, 0.0), 2 * deg - 1 + 1.0 / 3, 1e-14);
  }
}

TEST(BSRoots, ChebyshevClosedForms) {
  for (int m = 0; m < 12; ++m) {
    const auto r00 = bs_roots(BSParams::chebyshev(1), m + 1);
    const auto r11 = bs_roots(BSParams(1, 1, {}), m + 1);
    for (int l = 0; l <= m; ++l) {
      EXPECT_NEAR(r00.xi[l], kPi * (2 * l + 1) / (2 * (m + 1)), 1e-13);
      EXPECT_NEAR(r11.xi[l], kPi * (l + 1) / (m + 2), 1e-13);
    }
  }
}

TEST(BSRoots, PoleNearBoundary) {
  const BSParams p(0, 0, {cd(0.9, 0)});
  const auto r = bs_roots(p, 3);
  for (int l = 0; l < 3; ++l) {
    const auto b = bs_root_bracket(p, 3, l);
    EXPECT_LE(b.lower, r.xi[l]);
    EXPECT_GE(b.upper, r.xi[l]);
    EXPECT_NEAR(r.xi[l], testsupport::bisection_root(p, 3, l), 1e-12);
  }
}

TEST(BSRoots, RandomSweepsAgreeWithBisectionAndBrackets) {
  std::mt19937_64 gen(2024);
  for (int s = 0; s < 50; ++s) {
    const auto p = testsupport::random_bs_params(gen, 4, 0.85);
    const int deg = std::max(1, p.min_explicit_degree()) + static_cast<int>(gen() % 6);
    const auto r = bs_roots(p, deg);
    ASSERT_EQ(static_cast<int>(r.xi.size()), deg);
    for (int l = 0; l < deg; ++l) {
      const auto b = bs_root_bracket(p, deg, l);
      EXPECT_LE(b.lower, r.xi[l]);
      EXPECT_GE(b.upper, r.xi[l]);
      EXPECT_LE(std::abs(bs_root_equation(p, deg, l, r.xi[l])), 1e-12);
      EXPECT_NEAR(r.xi[l], testsupport::bisection_root(p, deg, l), 1e-10);
      EXPECT_NEAR(bs_eval(p, deg, r.xi[l]), 0.0, 1e-9);
      for (int k = l + 1; k < deg; ++k) {
        const auto gap = bs_gap_bounds(p, deg, k, l);
        const double d = r.xi[k] - r.xi[l];
        EXPECT_LE(gap.lower, d * (1 + 1e-14));
        EXPECT_GE(gap.upper, d * (1 - 1e-14));
      }
    }
  }
}

TEST(BSChristoffel, ChebyshevWeights) {
  for (int deg = 1; deg < 10; ++deg) {
    const auto r = bs_christoffel(BSParams::chebyshev(1), deg);
    for (double w : r.weights) EXPECT_NEAR(w, 1.0 / (2 * deg), 1e-14);
  }
}

TEST(BSChristoffel, MassAndMoments) {
  const BSParams p(0, 0, {cd(0.3, 0.4), cd(0.3, -0.4)});
  const auto r = bs_christoffel(p, 4);
  for (double w : r.weights) EXPECT_GT(w, 0.0);
  for (int k = 0; k <= 7; ++k) {
    const auto f = [k](double xi) { return std::cos(k * xi); };
    const double ref = integrate_xi([&](double xi) { return f(xi) * weight_direct(p, xi); });
    EXPECT_NEAR(quadrature_apply(r, f), ref, 1e-12) << k;
  }
  const auto fam = OrthoFamily::bernstein_szego(p);
  EXPECT_NEAR(fam.total_mass(), integrate_xi([&](double xi) { return weight_direct(p, xi); }), 1e-12);
}

TEST(BSChristoffel, AgreesWithChristoffelDarboux) {
  // w = -(k_{m+2}/k_{m+1}) / (p_{m+2}(x) p'_{m+1}(x)), derivative by central
  // differences in x.
  std::mt19937_64 gen(99);
  for (int s = 0; s < 10; ++s) {
    const auto p = testsupport::random_bs_params(gen, 4, 0.6);
    for (int deg = std::max(2, p.min_explicit_degree()); deg <= 8; ++deg) {
      const auto rule = bs_christoffel(p, deg);
      const auto px = [&](int l, double x) { return bs_eval(p, l, std::acos(x)); };
      for (int i = 0; i < deg; ++i) {
        const double x = std::cos(rule.nodes[i]);
        const double h = 1e-6;
        const double dp = (px(deg, x + h) - px(deg, x - h)) / (2 * h);
        const double w = -(bs_leading_coefficient(p, deg + 1) / bs_leading_coefficient(p, deg)) /
                         (px(deg + 1, x) * dp);
        EXPECT_NEAR(rule.weights[i], w, 1e-6 * rule.weights[i]) << "set " << s << " deg " << deg;
      }
    }
  }
}

TEST(BSDegeneration, ZeroPoleMatchesChebyshev) {
  // A pole at 0 is a unit factor: d_eps = 1/2 and v_0(xi) = xi, so the root
  // equation and h coincide with the Chebyshev first-kind ones.
  const BSParams z(0, 0, {cd(0, 0)}, true);
  for (int deg = 1; deg <= 6; ++deg) {
    const auto rz = bs_christoffel(z, deg);
    const auto rc = bs_christoffel(BSParams::chebyshev(1), deg);
    for (int l = 0; l < deg; ++l) {
      EXPECT_NEAR(rz.nodes[l], rc.nodes[l], 1e-14);
      EXPECT_NEAR(rz.weights[l], rc.weights[l], 1e-14);
    }
    EXPECT_NEAR(bs_eval(z, deg, 0.7), bs_eval(BSParams::chebyshev(1), deg, 0.7), 1e-13);
  }
}
