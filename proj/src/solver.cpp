#include "wk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wk {

namespace {

void require_lengths(const cvec &x, const MonicPolynomial &p,
                     const char *where) {
  if (x.size() != p.degree())
    throw std::invalid_argument(std::string(where) +
                                ": root vector length != degree");
}

void require_separated(const cvec &x, double eps) {
  if (auto pair = find_collision(x, eps))
    throw CollisionError(pair->first, pair->second,
                         std::abs(x[pair->first] - x[pair->second]));
}

// Weierstrass quotients u_l = p(x_l) / B^{(l)}(x_l). Products run in the
// canonical value order, which keeps each component a function of the entry
// values alone; permuting the vector permutes the result bit for bit.
cvec weierstrass_quotients(const cvec &x, const MonicPolynomial &p,
                           const std::vector<std::size_t> &order) {
  cvec u(x.size());
  for (std::size_t l = 0; l < x.size(); ++l) {
    Complex prod(1.0);
    for (std::size_t idx : order)
      if (idx != l)
        prod *= x[l] - x[idx];
    u[l] = p(x[l]) / -prod;
  }
  return u;
}

} // namespace

cvec wdk_step(const cvec &x, const MonicPolynomial &p, double collision_eps) {
  require_lengths(x, p, "wdk_step");
  require_separated(x, collision_eps);
  const auto order = canonical_order(x);
  const cvec u = weierstrass_quotients(x, p, order);
  cvec next(x.size());
  for (std::size_t l = 0; l < x.size(); ++l)
    next[l] = x[l] + u[l];
  return next;
}

cvec chebyshev_step(const cvec &x, const MonicPolynomial &p,
                    double collision_eps) {
  require_lengths(x, p, "chebyshev_step");
  require_separated(x, collision_eps);
  const auto order = canonical_order(x);
  const cvec u = weierstrass_quotients(x, p, order);
  cvec next(x.size());
  for (std::size_t l = 0; l < x.size(); ++l) {
    Complex sum(0.0);
    for (std::size_t v : order)
      if (v != l)
        sum += u[v] / (x[v] - x[l]);
    next[l] = x[l] - u[l] * (sum - Complex(1.0));
  }
  return next;
}

double step_norm1(const cvec &a, const cvec &b) {
  double norm = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    norm += std::abs(a[i] - b[i]);
  return norm;
}

double max_residual(const MonicPolynomial &p, const cvec &x) {
  double worst = 0.0;
  for (const Complex &z : x)
    worst = std::max(worst, std::abs(p(z)));
  return worst;
}

SolverResult solve(const MonicPolynomial &p, const cvec &x0,
                   const SolverConfig &config) {
  require_lengths(x0, p, "solve");
  if (!(config.tol > 0.0) || config.max_iter < 1 || config.collision_eps < 0.0)
    throw std::invalid_argument("solve: bad config");

  SolverResult result;
  result.status = SolveStatus::max_iter_reached;
  cvec x = x0;
  if (config.record_trace)
    result.trace.iterates.push_back(x);

  for (int m = 1; m <= config.max_iter; ++m) {
    if (find_collision(x, config.collision_eps)) {
      result.status = SolveStatus::collision_detected;
      break;
    }
    const cvec next = config.method == Method::weierstrass_kerner
                          ? wdk_step(x, p, config.collision_eps)
                          : chebyshev_step(x, p, config.collision_eps);
    result.iterations = m;
    result.final_step_norm = step_norm1(next, x);
    x = next;
    if (config.record_trace) {
      result.trace.iterates.push_back(x);
      result.trace.step_norms.push_back(result.final_step_norm);
      result.trace.residual_norms.push_back(max_residual(p, x));
    }
    if (result.final_step_norm < config.tol) {
      result.status = SolveStatus::converged;
      break;
    }
  }
  result.roots = x;
  result.final_residual = max_residual(p, x);
  return result;
}

cvec default_initial_guess(const MonicPolynomial &p, std::uint64_t seed) {
  const std::size_t n = p.degree();
  const double radius = 1.0 + max_abs(p.coeffs());
  const Complex center = -p.coeffs()[n - 1] / static_cast<double>(n);
  // Golden-ratio multiples of 2*pi never align with the n-fold symmetry of
  // the circle points, whatever the seed.
  constexpr double golden = 0.61803398874989484820;
  const double phase0 =
      2.0 * std::numbers::pi * std::fmod((static_cast<double>(seed) + 1.0) * golden, 1.0);
  cvec guess(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi =
        phase0 + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    guess[k] = center + std::polar(radius, phi);
  }
  return guess;
}

double estimate_convergence_order(const IterationTrace &trace) {
  const auto &e = trace.step_norms;
  if (e.size() < 4)
    throw UndefinedOrderError("need at least 4 step norms");
  if (trace.iterates.size() != e.size() + 1)
    throw std::invalid_argument(
        "estimate_convergence_order: trace is missing iterates");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto usable = [&](std::size_t m) {
    // below 100 eps of the iterate magnitude a step norm is roundoff jitter
    return e[m] > 100.0 * eps * max_abs(trace.iterates[m + 1]);
  };

  std::vector<double> orders;
  for (std::size_t m = 1; m + 1 < e.size(); ++m) {
    if (!usable(m - 1) || !usable(m) || !usable(m + 1))
      continue;
    const double denom = std::log(e[m] / e[m - 1]);
    if (denom == 0.0)
      continue;
    const double q = std::log(e[m + 1] / e[m]) / denom;
    if (std::isfinite(q))
      orders.push_back(q);
  }
  if (orders.empty())
    throw UndefinedOrderError("no usable step-norm triple");

  // The early triples sample the pre-asymptotic phase; only the last few say
  // anything about the local order. Median of up to the last three.
  std::vector<double> tail(
      orders.end() - static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, orders.size())),
      orders.end());
  std::sort(tail.begin(), tail.end());
  const std::size_t mid = tail.size() / 2;
  if (tail.size() % 2 == 1)
    return tail[mid];
  return 0.5 * (tail[mid - 1] + tail[mid]);
}

} // namespace wk
