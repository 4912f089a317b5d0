#pragma once

// Reference computations used only by the tests. None of them call into the
// library routine they are checking.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "symcub/bernstein_szego.hpp"
#include "symcub/partitions.hpp"

namespace symcub::testsupport {

/// Sparse multivariate polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, double>;

/// v_a(xi) by composite Gauss-Legendre integration of (1-a^2)/(1+2a cos t+a^2) over [0, xi].
std::complex<double> v_numeric(std::complex<double> a, double xi);

/// Root of the Bernstein-Szego root equation for index lhat by plain
/// bisection, with v_a from the scalar arctangent form for real a and from
/// numerical integration for complex a.
double bisection_root(const BSParams& params, int degree, int lhat);

/// Seeded parameter sets with d <= max_d mixing real poles and conjugate
/// pairs, |a| <= max_radius.
BSParams random_bs_params(std::mt19937_64& gen, int max_d, double max_radius);

/// Uniform double in [lo, hi).
double uniform(std::mt19937_64& gen, double lo, double hi);

}  // namespace symcub::testsupport
