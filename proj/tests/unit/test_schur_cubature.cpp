#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "symcub/error.hpp"
#include "symcub/partitions.hpp"
#include "symcub/schur_cubature.hpp"
#include "symcub/verify.hpp"

using namespace symcub;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

OrthoFamily bs_pair() {
  return OrthoFamily::bernstein_szego(BSParams(0, 0, {cd(0.3, 0.4), cd(0.3, -0.4)}));
}

double one(std::span<const double>) { return 1.0; }

}  // namespace

TEST(Schur, OneVariableIsUnivariate) {
  const SchurEvaluator ev(OrthoFamily::hermite(), 1);
  const std::vector<double> x{0.6};
  EXPECT_NEAR(ev({3}, x), OrthoFamily::hermite().eval(3, 0.6), 1e-14);
}

TEST(Schur, MonomialBasisGivesClassicalSchur) {
  const SchurEvaluator ev([](int l, double t) { return std::pow(t, l); }, [](double t) { return t; }, 2);
  const std::vector<double> x{1.7, -0.4};
  EXPECT_NEAR(ev({1, 0}, x), 1.3, 1e-14);
  EXPECT_NEAR(ev({1, 1}, x), 1.7 * -0.4, 1e-14);

  // s_(2,1)(x1,x2,x3) = M_(2,1) + 2 M_(1,1,1).
  const SchurEvaluator ev3([](int l, double t) { return std::pow(t, l); }, [](double t) { return t; }, 3);
  const std::vector<double> y{1.1, 0.3, -0.8};
  EXPECT_NEAR(ev3({2, 1, 0}, y), monomial_eval({2, 1, 0}, y) + 2 * monomial_eval({1, 1, 1}, y), 1e-13);
}

TEST(Schur, SymmetricUnderPermutation) {
  const SchurEvaluator ev(OrthoFamily::jacobi(0.5, 0.5), 3);
  const std::vector<double> x{0.8, 0.1, -0.6}, y{-0.6, 0.8, 0.1};
  EXPECT_NEAR(ev({2, 1, 0}, x), ev({2, 1, 0}, y), 1e-12);
}

TEST(Schur, RejectsNearCoincidentCoordinates) {
  const SchurEvaluator ev(OrthoFamily::hermite(), 2);
  EXPECT_THROW(ev({1, 0}, std::vector<double>{0.5, 0.5 + 1e-10}), IllConditionedInput);
}

TEST(Schur, LowerTriangularInMonomials) {
  // P_lambda = sum over mu <= lambda of c * M_mu, with a positive leading
  // coefficient; checked by expanding the determinant into exact polynomial
  // products of the univariate basis.
  const auto fam = OrthoFamily::hermite();
  const int n = 2;
  // Coefficients of p_l in x by interpolation at Chebyshev points.
  const auto coeffs = [&](int l) {
    std::vector<double> c(l + 1, 0.0);
    std::vector<std::vector<double>> a(l + 1, std::vector<double>(l + 2));
    for (int i = 0; i <= l; ++i) {
      const double t = std::cos(kPi * (i + 0.5) / (l + 1));
      for (int j = 0; j <= l; ++j) a[i][j] = std::pow(t, j);
      a[i][l + 1] = fam.eval(l, t);
    }
    for (int col = 0; col <= l; ++col) {
      int piv = col;
      for (int r = col + 1; r <= l; ++r)
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      std::swap(a[col], a[piv]);
      for (int r = 0; r <= l; ++r) {
        if (r == col) continue;
        const double f = a[r][col] / a[col][col];
        for (int j = col; j <= l + 1; ++j) a[r][j] -= f * a[col][j];
      }
    }
    for (int i = 0; i <= l; ++i) c[i] = a[i][l + 1] / a[i][i];
    return c;
  };
  for (const auto& lambda : enumerate_alcove(3, n)) {
    // det[p_{l1+1}(x_k); p_{l2}(x_k)] as a polynomial. Divided by x1 - x2,
    // the coefficient of x1^(mu1+1) x2^mu2 is that of the Schur polynomial
    // s_mu, and s_mu only contains M_nu with nu <= mu.
    const auto a = coeffs(lambda[0] + 1), b = coeffs(lambda[1]);
    testsupport::Poly det;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        det[{int(i), int(j)}] += a[i] * b[j];
        det[{int(j), int(i)}] -= a[i] * b[j];
      }
    for (const auto& [e, c] : det) {
      if (e[0] <= e[1] || std::abs(c) < 1e-12) continue;
      const Partition mu(std::vector<int>{e[0] - 1, e[1]});
      EXPECT_TRUE(dominance_leq(mu, lambda)) << lambda.to_string() << " has " << mu.to_string();
      if (mu == lambda) EXPECT_GT(c, 0.0);
    }
  }
}

TEST(Schur, ExpansionMatchesDeterminantChebyshev) {
  const auto p = BSParams::chebyshev(1);
  const SchurEvaluator ev(OrthoFamily::bernstein_szego(p), 2);
  const std::vector<double> xi{kPi / 5, 2 * kPi / 5};
  EXPECT_NEAR(ev({1, 1}, xi), bs_schur_expansion(p, {1, 1}, xi), 1e-12);
}

TEST(Schur, ExpansionMatchesDeterminantRandom) {
  std::mt19937_64 gen(31);
  for (int s = 0; s < 10; ++s) {
    const auto p = testsupport::random_bs_params(gen, 4, 0.7);
    const int n = 2 + s % 2;
    const SchurEvaluator ev(OrthoFamily::bernstein_szego(p), n);
    for (int k = 0; k < 5; ++k) {
      std::vector<int> parts(n);
      for (auto& v : parts) v = p.min_explicit_degree() + static_cast<int>(gen() % 4);
      std::sort(parts.begin(), parts.end(), std::greater<>());
      std::vector<double> xi(n);
      for (auto& v : xi) v = testsupport::uniform(gen, 0.05, kPi - 0.05);
      std::sort(xi.begin(), xi.end());
      const Partition lambda(parts);
      const double det = ev(lambda, xi);
      EXPECT_NEAR(det, bs_schur_expansion(p, lambda, xi), 1e-9 * (1 + std::abs(det)));
    }
  }
}

TEST(BuildRule, SingleNodeCarriesMass) {
  for (const auto& f : {OrthoFamily::hermite(), OrthoFamily::laguerre(1.0), OrthoFamily::jacobi(0.5, 0.5)}) {
    const auto r = build_rule(f, 0, 1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r.weights[0], f.total_mass(), 1e-13);
  }
  const auto h = build_rule(OrthoFamily::hermite(), 0, 1);
  EXPECT_NEAR(h.nodes[0], 0.0, 1e-15);
}

TEST(BuildRule, HermiteIndexArithmetic) {
  const auto r = build_rule(OrthoFamily::hermite(), 1, 2);
  ASSERT_EQ(r.size(), 3u);
  const double s = std::sqrt(1.5);
  // Labels (1,1), (1,0), (0,0) use roots (2,1), (2,0), (1,0) of h_3, with
  // roots indexed in increasing order -s, 0, s.
  const std::vector<std::vector<double>> expected{{s, 0}, {s, -s}, {0, -s}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(r.node(i)[0], expected[i][0], 1e-14);
    EXPECT_NEAR(r.node(i)[1], expected[i][1], 1e-14);
  }
}

TEST(BuildRule, NodeCountAndThreadsAgree) {
  const auto a = build_rule(OrthoFamily::laguerre(1.0), 3, 3, 1);
  const auto b = build_rule(OrthoFamily::laguerre(1.0), 3, 3, 3);
  EXPECT_EQ(a.size(), binomial(6, 3));
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.weights, b.weights);
}

TEST(BuildRule, BSRequiresDegreeHypothesis) {
  const BSParams p(0, 0, {cd(0.5, 0), cd(0.4, 0), cd(-0.3, 0), cd(0.2, 0), cd(0.1, 0), cd(-0.6, 0)});
  EXPECT_THROW(build_rule(OrthoFamily::bernstein_szego(p), 0, 2), UnsupportedDegree);
  EXPECT_NO_THROW(build_rule(OrthoFamily::bernstein_szego(p), 1, 2));
}

TEST(BuildRule, ChebyshevWeightsFactor) {
  for (int kind = 1; kind <= 4; ++kind) {
    const auto p = BSParams::chebyshev(kind);
    const int m = 2, n = 3;
    const auto r = build_rule(OrthoFamily::bernstein_szego(p), m, n);
    const double den = std::pow(2.0 * (m + n) + p.eps_plus() + p.eps_minus(), n);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto xi = r.node(i);
      double rho = 1.0;
      for (double t : xi) rho *= chebyshev_weight_factor(p, t);
      std::vector<double> x(xi.begin(), xi.end());
      for (auto& v : x) v = std::cos(v);
      rho *= std::pow(vandermonde(x), 2);
      EXPECT_NEAR(full_weight(r, i), rho / den, 1e-13);
    }
  }
}

TEST(Density, Examples) {
  EXPECT_NEAR(ensemble_density(OrthoFamily::hermite(), std::vector<double>{1, -1}),
              4 * std::exp(-2.0) / kPi, 1e-15);
  EXPECT_NEAR(ensemble_density(OrthoFamily::laguerre(1.0), std::vector<double>{0.4}),
              OrthoFamily::laguerre(1.0).weight(0.4), 1e-15);
  const std::vector<double> xi{0.4, 2.0};
  EXPECT_NEAR(ensemble_density(OrthoFamily::bernstein_szego(BSParams::chebyshev(1)), xi),
              std::pow(std::cos(0.4) - std::cos(2.0), 2), 1e-15);
  EXPECT_THROW(ensemble_density(OrthoFamily::laguerre(1.0), std::vector<double>{-1.0}), DomainError);
}

TEST(Integrate, SimpleValues) {
  for (int m = 0; m < 4; ++m) {
    const auto r = build_rule(OrthoFamily::bernstein_szego(BSParams::chebyshev(1)), m, 1);
    EXPECT_NEAR(integrate_rational_bs(r, one), 0.5, 1e-15);
  }
  const auto h = build_rule(OrthoFamily::hermite(), 2, 3);
  EXPECT_NEAR(integrate_symmetric(h, [](std::span<const double> x) { return monomial_eval({1, 0, 0}, x); }),
              0.0, 1e-13);
  EXPECT_THROW(integrate_rational_bs(h, one), InvalidArgument);
}

TEST(Integrate, DiscreteOrthogonalityOfSchur) {
  const auto fam = OrthoFamily::jacobi(0.5, 0.5);
  const auto r = build_rule(fam, 2, 2);
  const SchurEvaluator ev(fam, 2);
  const auto labels = enumerate_alcove(2, 2);
  for (const auto& a : labels)
    for (const auto& b : labels) {
      double g = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) g += ev(a, r.node(i)) * ev(b, r.node(i)) * full_weight(r, i);
      EXPECT_NEAR(g, a == b ? 1.0 : 0.0, 1e-10);
    }
}

TEST(Integrate, VanishingAtNodes) {
  const std::vector<OrthoFamily> fams{OrthoFamily::hermite(), OrthoFamily::laguerre(1.0),
                                      OrthoFamily::jacobi(0.5, 0.5), bs_pair()};
  for (const auto& fam : fams) {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}}) {
      const auto r = build_rule(fam, m, n);
      const SchurEvaluator ev(fam, n);
      for (const auto& mu : enumerate_alcove(m + 1, n - 1)) {
        std::vector<int> parts{m + 1};
        parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
        if (parts.back() < fam.min_explicit_degree()) continue;
        for (std::size_t i = 0; i < r.size(); ++i) EXPECT_LE(std::abs(ev(Partition(parts), r.node(i))), 1e-9);
      }
    }
  }
}

TEST(Integrate, RationalBSAgainstOracle) {
  const auto fam = bs_pair();
  const auto r = build_rule(fam, 3, 2);
  const EnsembleOracle oracle(fam, 2);
  const auto ref = oracle.integrate_monomial({2, 1});
  const double q = integrate_rational_bs(r, [](std::span<const double> x) { return monomial_eval({2, 1}, x); });
  EXPECT_LE(relative_error(q, ref), 1e-8);
}

TEST(Integrate, SpecChecksPolesAndLength) {
  const auto r = build_rule(bs_pair(), 1, 2);
  const IntegrandSpec ok({{Partition({1, 0}), 2.0}}, std::vector<cd>{cd(0.3, -0.4), cd(0.3, 0.4)});
  const IntegrandSpec none({{Partition({1, 0}), 2.0}});
  EXPECT_NEAR(integrate_spec(r, ok), integrate_spec(r, none), 1e-15);
  EXPECT_THROW(integrate_spec(r, IntegrandSpec({{Partition({1, 0}), 1.0}}, std::vector<cd>{cd(0.5, 0)})),
               InvalidArgument);
  EXPECT_THROW(integrate_spec(r, IntegrandSpec({{Partition({1, 0, 0}), 1.0}})), InvalidArgument);
  const auto h = build_rule(OrthoFamily::hermite(), 1, 2);
  EXPECT_THROW(integrate_spec(h, ok), InvalidArgument);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 4, [](std::size_t i) { if (i == 57) throw DomainError("x"); }), DomainError);
}
