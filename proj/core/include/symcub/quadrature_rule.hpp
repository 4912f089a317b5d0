#pragma once

#include <functional>
#include <vector>

namespace symcub {

/// Integration variable of a rule: the polynomial variable x, or the angle xi
/// with x = cos(xi) used by the Bernstein-Szego family.
enum class Variable { x, xi };

/// Univariate Gauss rule with `degree` nodes, strictly increasing in the rule's
/// variable, and strictly positive Christoffel weights.
struct QuadratureRule1D {
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  Variable variable = Variable::x;
};

/// Sum of f(node) * weight over the rule. f is called in the rule's variable.
double quadrature_apply(const QuadratureRule1D& rule,
                        const std::function<double(double)>& f);

}  // namespace symcub
