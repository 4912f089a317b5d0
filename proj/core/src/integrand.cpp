#include "symcub/integrand.hpp"

#include <algorithm>

#include "symcub/error.hpp"

namespace symcub {

IntegrandSpec::IntegrandSpec(std::vector<MonomialTerm> terms,
                             std::optional<std::vector<std::complex<double>>> poles)
    : terms_(std::move(terms)), poles_(std::move(poles)) {
  if (terms_.empty()) throw InvalidArgument("integrand needs at least one term");
  n_ = terms_.front().partition.size();
  if (n_ < 1) throw InvalidArgument("integrand partitions must have at least one part");
  for (const auto& t : terms_) {
    if (t.partition.size() != n_) {
      throw InvalidArgument("integrand partitions must all have the same length");
    }
  }
}

int IntegrandSpec::max_part() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.partition.front());
  return m;
}

double IntegrandSpec::numerator(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) throw InvalidArgument("point has the wrong dimension");
  double s = 0.0;
  for (const auto& t : terms_) s += t.coeff * monomial_eval(t.partition, x);
  return s;
}

}  // namespace symcub
