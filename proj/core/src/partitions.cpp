#include "symcub/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "symcub/error.hpp"

namespace symcub {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) {
      throw InvalidArgument("partition has a negative part: " + to_string());
    }
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing: " +
                            to_string());
    }
  }
}

Partition Partition::zero(int n) {
  if (n < 0) throw InvalidArgument("partition length must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

int Partition::weight() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

Partition Partition::operator+(const Partition& other) const {
  if (other.size() != size()) {
    throw InvalidArgument("partition length mismatch in sum");
  }
  std::vector<int> sum(parts_);
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += other.parts_[j];
  return Partition(std::move(sum));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out << ',';
    out << parts_[j];
  }
  out << ')';
  return out.str();
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) throw InvalidArgument("binomial requires 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is binomial(n - k + i, i); cancelling the gcd
    // first keeps every intermediate below the final value.
    const auto top = static_cast<std::uint64_t>(n - k + i);
    const auto g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = (result / g) * (top / (static_cast<std::uint64_t>(i) / g));
  }
  return result;
}

std::vector<Partition> enumerate_alcove(int m, int n) {
  if (m < 0) throw InvalidArgument("enumerate_alcove: m must be >= 0");
  if (n < 1) throw InvalidArgument("enumerate_alcove: n must be >= 1");
  if (m + n > 64) throw InvalidArgument("enumerate_alcove: m + n must be <= 64");

  std::vector<Partition> out;
  out.reserve(binomial(m + n, n));
  std::vector<int> parts(static_cast<std::size_t>(n), m);
  // Odometer in descending lexicographic order: decrement the last part that
  // can be decremented, then reset everything to its right to that value.
  while (true) {
    out.emplace_back(parts);
    int j = n - 1;
    while (j >= 0 && parts[static_cast<std::size_t>(j)] == 0) --j;
    if (j < 0) break;
    const int value = --parts[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < n; ++k) parts[static_cast<std::size_t>(k)] = value;
  }
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw InvalidArgument("dominance_leq: partitions differ in length");
  }
  long prefix = 0;
  for (int j = 0; j < mu.size(); ++j) {
    prefix += lambda[j] - mu[j];
    if (prefix < 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> orbit(const Partition& lambda) {
  std::vector<int> perm(lambda.parts().begin(), lambda.parts().end());
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

double monomial_eval(const Partition& lambda, std::span<const double> x) {
  if (static_cast<int>(x.size()) != lambda.size()) {
    throw InvalidArgument("monomial_eval: point dimension differs from partition length");
  }
  double sum = 0.0;
  for (const auto& mu : orbit(lambda)) {
    double term = 1.0;
    for (std::size_t j = 0; j < mu.size(); ++j) term *= std::pow(x[j], mu[j]);
    sum += term;
  }
  return sum;
}

std::vector<double> elementary_symmetric(std::span<const double> x) {
  // Coefficients of prod_j (1 + x_j t); e[k] is the coefficient of t^k.
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += x[j] * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

MonomialSet::MonomialSet(std::vector<Partition> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) return;
  n_ = labels_.front().size();
  orbits_.reserve(labels_.size());
  for (const auto& lambda : labels_) {
    if (lambda.size() != n_) {
      throw InvalidArgument("MonomialSet: all partitions must have the same length");
    }
    if (n_ > 0) max_part_ = std::max(max_part_, lambda.front());
    std::vector<int> flat;
    for (const auto& mu : orbit(lambda)) flat.insert(flat.end(), mu.begin(), mu.end());
    orbits_.push_back(std::move(flat));
  }
}

void MonomialSet::evaluate(std::span<const double> x, std::span<double> out) const {
  if (static_cast<int>(x.size()) != n_ || out.size() != labels_.size()) {
    throw InvalidArgument("MonomialSet::evaluate: size mismatch");
  }
  std::vector<std::vector<double>> powers(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    auto& row = powers[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(max_part_) + 1);
    row[0] = 1.0;
    for (int e = 1; e <= max_part_; ++e) {
      row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e) - 1] * x[static_cast<std::size_t>(j)];
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) out[i] = evaluate_one(i, powers.data());
}

}  // namespace symcub
