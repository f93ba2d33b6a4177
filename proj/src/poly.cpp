#include "wk/poly.hpp"

#include <algorithm>
#include <cmath>

namespace wk {

cvec expand_linear_factors(const cvec &roots) {
  // Incremental multiplication by (t - r); O(n^2) instead of the exponential
  // subset sums it is equal to.
  cvec c{Complex(1.0)};
  c.reserve(roots.size() + 1);
  for (const Complex &r : roots) {
    c.push_back(c.back());
    for (std::size_t i = c.size() - 2; i >= 1; --i)
      c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  c.pop_back(); // drop the leading 1
  return c;
}

std::vector<std::size_t> canonical_order(const cvec &x) {
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a].real() != x[b].real())
      return x[a].real() < x[b].real();
    return x[a].imag() < x[b].imag();
  });
  return order;
}

MonicPolynomial from_roots(const cvec &roots) {
  if (roots.empty())
    throw std::invalid_argument("from_roots needs at least one root");
  cvec sorted(roots.size());
  const auto order = canonical_order(roots);
  for (std::size_t i = 0; i < roots.size(); ++i)
    sorted[i] = roots[order[i]];
  return MonicPolynomial(expand_linear_factors(sorted));
}

Complex deflated_product(const cvec &x, std::size_t k, Complex t) {
  if (k >= x.size())
    throw std::invalid_argument("deflated_product: index out of range");
  Complex prod(1.0);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != k)
      prod *= t - x[j];
  return -prod;
}

Complex pairwise_deflated_product(const cvec &x, std::size_t l, std::size_t k,
                                  Complex t) {
  if (l >= x.size() || k >= x.size())
    throw std::invalid_argument("pairwise_deflated_product: index out of range");
  if (l == k)
    throw std::invalid_argument(
        "pairwise_deflated_product: l == k has no product form");
  Complex prod(1.0);
  for (std::size_t v = 0; v < x.size(); ++v)
    if (v != l && v != k)
      prod *= t - x[v];
  return prod;
}

double min_pairwise_separation(const cvec &x) {
  if (x.size() < 2)
    return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      best = std::min(best, std::abs(x[i] - x[j]));
  return best;
}

double max_abs(const cvec &x) {
  double m = 0.0;
  for (const Complex &z : x)
    m = std::max(m, std::abs(z));
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>>
find_collision(const cvec &x, double eps) {
  const double floor = collision_floor(x, eps);
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (std::abs(x[i] - x[j]) < floor)
        return std::make_pair(i, j);
  return std::nullopt;
}

} // namespace wk
