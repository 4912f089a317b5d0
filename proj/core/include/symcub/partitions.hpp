#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symcub {

/// Weakly decreasing vector of nonnegative integers. Labels symmetric
/// monomials, generalized Schur polynomials and cubature nodes alike.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument if the parts are negative or increase somewhere.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// All-zero partition of length n.
  static Partition zero(int n);

  std::span<const int> parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int j) const { return parts_[static_cast<std::size_t>(j)]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  /// |lambda|, the sum of the parts.
  int weight() const;

  /// Componentwise sum; both operands must have equal length.
  Partition operator+(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// binomial(n, k) in exact 64-bit arithmetic; requires n <= 64.
std::uint64_t binomial(int n, int k);

/// Every partition with n parts and largest part at most m, in descending
/// lexicographic order. The result has binomial(m + n, n) entries.
std::vector<Partition> enumerate_alcove(int m, int n);

/// Inhomogeneous dominance order: mu <= lambda iff every prefix sum of
/// lambda - mu is nonnegative.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Distinct rearrangements of lambda (the S_n orbit), each listed once, in
/// lexicographically increasing order.
std::vector<std::vector<int>> orbit(const Partition& lambda);

/// Symmetric monomial M_lambda(x): sum of x^mu over the orbit of lambda.
double monomial_eval(const Partition& lambda, std::span<const double> x);

/// Elementary symmetric polynomials (E_1(x), ..., E_n(x)).
std::vector<double> elementary_symmetric(std::span<const double> x);

/// A fixed list of symmetric monomials with their orbits expanded once, for
/// evaluating many monomials at many points.
class MonomialSet {
 public:
  explicit MonomialSet(std::vector<Partition> labels);

  const std::vector<Partition>& labels() const { return labels_; }
  int n() const { return n_; }
  int max_part() const { return max_part_; }
  std::size_t size() const { return labels_.size(); }

  /// Writes M_lambda(x) for every label into out (length size()).
  void evaluate(std::span<const double> x, std::span<double> out) const;

  /// Evaluates using a caller-provided power table: powers[j][e] = x_j^e for
  /// 0 <= e <= max_part().
  template <typename PowerRow>
  double evaluate_one(std::size_t label, const PowerRow* powers) const {
    double sum = 0.0;
    const auto& terms = orbits_[label];
    for (std::size_t t = 0; t < terms.size(); t += static_cast<std::size_t>(n_)) {
      double prod = 1.0;
      for (int j = 0; j < n_; ++j) prod *= powers[j][terms[t + static_cast<std::size_t>(j)]];
      sum += prod;
    }
    return sum;
  }

  /// Orbit of label i flattened as consecutive n-tuples.
  std::span<const int> flat_orbit(std::size_t i) const { return orbits_[i]; }

 private:
  std::vector<Partition> labels_;
  std::vector<std::vector<int>> orbits_;
  int n_ = 0;
  int max_part_ = 0;
};

}  // namespace symcub
