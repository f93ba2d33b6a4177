#pragma once

#include <cstdint>

#include "wk/poly.hpp"

namespace wk {

enum class Method { weierstrass_kerner, chebyshev };

enum class SolveStatus { converged, max_iter_reached, collision_detected };

struct SolverConfig {
  double tol = 1e-15;     // stop when ||x^{m+1} - x^m||_1 < tol
  int max_iter = 1000;
  double collision_eps = kDefaultCollisionEps;
  Method method = Method::weierstrass_kerner;
  bool record_trace = false;
};

// Per-iteration history. step_norms[m] = ||x^{m+1} - x^m||_1 and
// residual_norms[m] = max_l |p(x^{m+1}_l)|; iterates holds one more entry
// than either, starting with x^{(0)}.
struct IterationTrace {
  std::vector<cvec> iterates;
  std::vector<double> step_norms;
  std::vector<double> residual_norms;
};

struct SolverResult {
  cvec roots;
  int iterations = 0;
  SolveStatus status = SolveStatus::max_iter_reached;
  double final_step_norm = 0.0;
  double final_residual = 0.0;
  IterationTrace trace; // filled when SolverConfig::record_trace
};

// No usable step-norm triple from which to estimate a convergence order.
class UndefinedOrderError : public std::runtime_error {
public:
  explicit UndefinedOrderError(const std::string &what)
      : std::runtime_error(what) {}
};

// One simultaneous second-order sweep:
//   x_l <- x_l - p(x_l) / prod_{j != l} (x_l - x_j).
// Every correction is computed from the input vector before any entry moves.
// Throws CollisionError naming the offending pair when two entries are closer
// than the relative floor.
cvec wdk_step(const cvec &x, const MonicPolynomial &p,
              double collision_eps = kDefaultCollisionEps);

// One simultaneous third-order sweep:
//   x_l <- x_l - p(x_l)/B^{(l)}(x_l) *
//          ( sum_{v != l} p(x_v) / ((x_v - x_l) B^{(v)}(x_v)) - 1 )
// with B^{(k)}(t) = -prod_{j != k} (t - x_j). The n quotients p(x_v)/B^{(v)}
// are computed once and reused, so a sweep costs O(n^2).
cvec chebyshev_step(const cvec &x, const MonicPolynomial &p,
                    double collision_eps = kDefaultCollisionEps);

// Iterates the configured step from x0 until the 1-norm of the step drops
// below tol or max_iter sweeps have run. A collision aborts with the partial
// trace instead of perturbing the iterate.
SolverResult solve(const MonicPolynomial &p, const cvec &x0,
                   const SolverConfig &config = {});

// n points on the circle of radius 1 + max|a_j| around -a_{n-1}/n, rotated by
// a seed-dependent irrational phase so no point lands on a symmetry axis.
cvec default_initial_guess(const MonicPolynomial &p, std::uint64_t seed = 0);

// Empirical convergence order: median of
//   log(e_{m+1}/e_m) / log(e_m/e_{m-1})
// over consecutive step-norm triples, ignoring triples in which any norm has
// dropped below 100 * eps * (1 + max|x|) of its iterate (those are roundoff,
// not convergence). Throws UndefinedOrderError when no triple survives.
double estimate_convergence_order(const IterationTrace &trace);

double step_norm1(const cvec &a, const cvec &b);
double max_residual(const MonicPolynomial &p, const cvec &x);

} // namespace wk
