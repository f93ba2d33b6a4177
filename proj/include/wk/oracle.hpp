#pragma once

#include <random>

#include "wk/solver.hpp"
#include "wk/vieta.hpp"

namespace wk {

// Side-by-side result of one closed-form step and its structure-free twin.
// The deviation metric is max_l |closed_l - generic_l| / (1 + |generic_l|).
struct DenseStepReport {
  cvec closed_form;
  cvec generic;
  double max_relative_deviation = 0.0;
};

Eigen::MatrixXcd assemble_jacobian(const cvec &x);
Eigen::MatrixXcd assemble_hessian_block(const cvec &x, std::size_t k);
DerivativeTensor assemble_derivative_tensor(const cvec &x);

// Closed-form inverse of Beobachtung-3 shape, rows stacked into a matrix.
Eigen::MatrixXcd assemble_closed_form_inverse(const cvec &x);

// Newton iterate x - F'(x)^{-1} F(x) through a dense pivoted solve; makes no
// use of the explicit inverse.
cvec newton_step_generic(const cvec &x, const MonicPolynomial &p);

// Third-order iterate x - F'^{-1} (F + 1/2 F''(F'^{-1}F, F'^{-1}F)) through
// assembled tensors and one reused LU factorization; makes no use of the
// cross-matrix collapse.
cvec chebyshev_step_generic(const cvec &x, const MonicPolynomial &p);

// Central differences of V, columnwise; step is scaled by (1 + |x_k|).
Eigen::MatrixXcd finite_difference_jacobian(const cvec &x, double step = 1e-6);

// Central differences of the Jacobian columns with respect to x_k, assembled
// to A^{(k)}.
Eigen::MatrixXcd finite_difference_hessian_block(const cvec &x, std::size_t k,
                                                 double step = 1e-6);

double relative_deviation(const Complex &a, const Complex &b);
double max_relative_deviation(const cvec &a, const cvec &b);
double max_relative_deviation(const Eigen::MatrixXcd &a,
                              const Eigen::MatrixXcd &b);

DenseStepReport compare_newton_step(const cvec &x, const MonicPolynomial &p);
DenseStepReport compare_chebyshev_step(const cvec &x,
                                       const MonicPolynomial &p);

// Deterministic sampling for the randomized cross-validation suites. The raw
// mt19937_64 stream is standardized, so reports are byte-identical across
// platforms for a fixed seed.
class CheckRng {
public:
  explicit CheckRng(std::uint64_t seed) : engine_(seed) {}
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  Complex in_disk(double radius);

private:
  std::mt19937_64 engine_;
};

// n points in the disk of the given radius with pairwise separation at least
// min_sep, by rejection.
cvec sample_separated_points(CheckRng &rng, std::size_t n, double radius,
                             double min_sep);

// A polynomial with well-separated roots plus an iterate perturbed from those
// roots by at most max_perturbation (re-drawn until the iterate itself keeps
// a pairwise separation of at least iterate_min_sep).
struct RandomInstance {
  cvec roots;
  cvec iterate;
};
RandomInstance random_instance(CheckRng &rng, std::size_t n,
                               double max_perturbation = 0.3,
                               double iterate_min_sep = 0.08);

// Randomized cross-validation: closed-form steps against the dense generic
// steps, the closed-form inverse against dense inversion, and the assembled
// derivatives against finite differences.
struct CheckSummary {
  std::size_t degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_dev_wdk = 0.0;        // vs newton_step_generic, bound 1e-9
  double max_dev_chebyshev = 0.0;  // vs chebyshev_step_generic, bound 1e-9
  double max_dev_inverse = 0.0;    // vs dense inversion, bound 1e-9
  double max_dev_fd_jacobian = 0.0; // vs finite differences, bound 1e-6
  double max_dev_fd_hessian = 0.0;  // vs finite differences, bound 1e-5
  bool pass() const {
    return max_dev_wdk < 1e-9 && max_dev_chebyshev < 1e-9 &&
           max_dev_inverse < 1e-9 && max_dev_fd_jacobian < 1e-6 &&
           max_dev_fd_hessian < 1e-5;
  }
};
CheckSummary run_check_suite(std::size_t degree, int trials,
                             std::uint64_t seed);

} // namespace wk
