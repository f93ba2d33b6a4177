#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wk {

using Complex = std::complex<double>;
using cvec = std::vector<Complex>;

// Relative floor below which two entries of a root vector count as collided:
// |x_i - x_j| < eps * (1 + max|x|). The simultaneous iterations divide by
// pairwise differences, so collided entries make every formula singular.
inline constexpr double kDefaultCollisionEps = 1e-12;

// Two entries of a root vector are too close to divide by their difference.
class CollisionError : public std::runtime_error {
public:
  CollisionError(std::size_t i, std::size_t j, double separation)
      : std::runtime_error("root vector entries " + std::to_string(i) + " and " +
                           std::to_string(j) + " collide (separation " +
                           std::to_string(separation) + ")"),
        first(i), second(j), separation(separation) {}
  std::size_t first;
  std::size_t second;
  double separation;
};

// Degree-n monic polynomial t^n + a_{n-1} t^{n-1} + ... + a_0, stored as the
// ascending coefficient vector (a_0, ..., a_{n-1}). The leading 1 is implicit
// and never stored.
class MonicPolynomial {
public:
  explicit MonicPolynomial(cvec coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("monic polynomial needs degree >= 1");
  }

  std::size_t degree() const { return coeffs_.size(); }
  const cvec &coeffs() const { return coeffs_; }

  // Horner evaluation, seeded with the implicit leading 1.
  Complex operator()(Complex t) const {
    Complex acc(1.0);
    for (std::size_t j = coeffs_.size(); j-- > 0;)
      acc = acc * t + coeffs_[j];
    return acc;
  }

private:
  cvec coeffs_;
};

// Ascending coefficients (a_0, ..., a_{d-1}) of prod (t - r) over the given
// values, multiplied in exactly the given order; the leading 1 is implicit.
cvec expand_linear_factors(const cvec &roots);

// Monic polynomial with the given roots. The factors are accumulated in a
// value-canonical order, so the result is bit-identical under any permutation
// of the input.
MonicPolynomial from_roots(const cvec &roots);

// B^{(k)}(t) = -prod_{j != k} (t - x_j). Empty product (n = 1) gives -1.
Complex deflated_product(const cvec &x, std::size_t k, Complex t);

// B^{(lk)}(t) = prod_{v != l, v != k} (t - x_v), l != k. Empty product
// (n = 2) gives 1. l == k is rejected; that column is zero by definition and
// is never reached through this product.
Complex pairwise_deflated_product(const cvec &x, std::size_t l, std::size_t k,
                                  Complex t);

// min_{i<j} |x_i - x_j|; +inf for fewer than two entries.
double min_pairwise_separation(const cvec &x);

double max_abs(const cvec &x);

// Absolute separation below which entries count as collided.
inline double collision_floor(const cvec &x, double eps = kDefaultCollisionEps) {
  return eps * (1.0 + max_abs(x));
}

// First offending pair under the relative floor, if any.
std::optional<std::pair<std::size_t, std::size_t>>
find_collision(const cvec &x, double eps = kDefaultCollisionEps);

// Indices of x sorted by (re, im). Iterating products and sums in this order
// makes per-component results independent of how the entries are stored.
std::vector<std::size_t> canonical_order(const cvec &x);

} // namespace wk
