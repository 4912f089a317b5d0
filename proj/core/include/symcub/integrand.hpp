#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "symcub/partitions.hpp"

namespace symcub {

struct MonomialTerm {
  Partition partition;
  double coeff = 0.0;

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// A symmetric polynomial f = sum coeff * M_lambda in x, optionally divided
/// by prod_{r,j} (1 + 2 a_r x_j + a_r^2). The denominator is only meaningful
/// against a Bernstein-Szego rule with the same poles.
class IntegrandSpec {
 public:
  IntegrandSpec() = default;
  /// Throws InvalidArgument if the partitions differ in length or the list is
  /// empty.
  explicit IntegrandSpec(std::vector<MonomialTerm> terms,
                         std::optional<std::vector<std::complex<double>>> poles = std::nullopt);

  const std::vector<MonomialTerm>& terms() const { return terms_; }
  const std::optional<std::vector<std::complex<double>>>& poles() const { return poles_; }
  int n() const { return n_; }
  /// Largest part over all terms.
  int max_part() const;

  /// Numerator f(x).
  double numerator(std::span<const double> x) const;

 private:
  std::vector<MonomialTerm> terms_;
  std::optional<std::vector<std::complex<double>>> poles_;
  int n_ = 0;
};

}  // namespace symcub
