#include "wk/oracle.hpp"

#include <cmath>

namespace wk {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Eigen::VectorXcd to_eigen(const cvec &v) {
  Eigen::VectorXcd out(idx(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(idx(i)) = v[i];
  return out;
}

cvec to_cvec(const Eigen::VectorXcd &v) {
  cvec out(static_cast<std::size_t>(v.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = v(idx(i));
  return out;
}

void require_separated(const cvec &x, const char *where) {
  if (auto pair = find_collision(x))
    throw SingularJacobianError(std::string(where) +
                                ": coincident entries make the assembled "
                                "Jacobian numerically singular");
}

} // namespace

Eigen::MatrixXcd assemble_jacobian(const cvec &x) {
  const std::size_t n = x.size();
  Eigen::MatrixXcd m(idx(n), idx(n));
  for (std::size_t k = 0; k < n; ++k)
    m.col(idx(k)) = to_eigen(jacobian_column(x, k));
  return m;
}

Eigen::MatrixXcd assemble_hessian_block(const cvec &x, std::size_t k) {
  const std::size_t n = x.size();
  Eigen::MatrixXcd m(idx(n), idx(n));
  for (std::size_t l = 0; l < n; ++l)
    m.col(idx(l)) = to_eigen(hessian_block_column(x, k, l));
  return m;
}

DerivativeTensor assemble_derivative_tensor(const cvec &x) {
  DerivativeTensor tensor;
  tensor.jacobian = assemble_jacobian(x);
  tensor.hessian_blocks.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    tensor.hessian_blocks.push_back(assemble_hessian_block(x, k));
  return tensor;
}

Eigen::MatrixXcd assemble_closed_form_inverse(const cvec &x) {
  const std::size_t n = x.size();
  Eigen::MatrixXcd m(idx(n), idx(n));
  for (std::size_t l = 0; l < n; ++l) {
    const cvec row = jacobian_inverse_row(x, l);
    for (std::size_t j = 0; j < n; ++j)
      m(idx(l), idx(j)) = row[j];
  }
  return m;
}

cvec newton_step_generic(const cvec &x, const MonicPolynomial &p) {
  if (x.size() != p.degree())
    throw std::invalid_argument("newton_step_generic: length mismatch");
  require_separated(x, "newton_step_generic");
  const Eigen::VectorXcd f = to_eigen(eval_F(x, p.coeffs()));
  const Eigen::VectorXcd d = assemble_jacobian(x).partialPivLu().solve(f);
  cvec next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    next[i] = x[i] - d(idx(i));
  return next;
}

cvec chebyshev_step_generic(const cvec &x, const MonicPolynomial &p) {
  if (x.size() != p.degree())
    throw std::invalid_argument("chebyshev_step_generic: length mismatch");
  require_separated(x, "chebyshev_step_generic");
  const DerivativeTensor tensor = assemble_derivative_tensor(x);
  const auto lu = tensor.jacobian.partialPivLu(); // one factorization, two solves
  const Eigen::VectorXcd f = to_eigen(eval_F(x, p.coeffs()));
  const Eigen::VectorXcd d = lu.solve(f);
  const cvec dd = to_cvec(d);
  const Eigen::VectorXcd h = to_eigen(bilinear_apply(tensor, dd, dd));
  const Eigen::VectorXcd c = lu.solve(f + 0.5 * h);
  cvec next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    next[i] = x[i] - c(idx(i));
  return next;
}

Eigen::MatrixXcd finite_difference_jacobian(const cvec &x, double step) {
  if (!(step > 0.0))
    throw std::invalid_argument("finite_difference_jacobian: step must be > 0");
  const std::size_t n = x.size();
  Eigen::MatrixXcd m(idx(n), idx(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double h = step * (1.0 + std::abs(x[k]));
    cvec hi = x, lo = x;
    hi[k] += h;
    lo[k] -= h;
    const cvec vhi = eval_V(hi), vlo = eval_V(lo);
    for (std::size_t i = 0; i < n; ++i)
      m(idx(i), idx(k)) = (vhi[i] - vlo[i]) / (2.0 * h);
  }
  return m;
}

Eigen::MatrixXcd finite_difference_hessian_block(const cvec &x, std::size_t k,
                                                 double step) {
  if (!(step > 0.0))
    throw std::invalid_argument(
        "finite_difference_hessian_block: step must be > 0");
  const std::size_t n = x.size();
  const double h = step * (1.0 + std::abs(x[k]));
  cvec hi = x, lo = x;
  hi[k] += h;
  lo[k] -= h;
  Eigen::MatrixXcd m(idx(n), idx(n));
  for (std::size_t l = 0; l < n; ++l) {
    const cvec chi = jacobian_column(hi, l), clo = jacobian_column(lo, l);
    for (std::size_t i = 0; i < n; ++i)
      m(idx(i), idx(l)) = (chi[i] - clo[i]) / (2.0 * h);
  }
  return m;
}

double relative_deviation(const Complex &a, const Complex &b) {
  return std::abs(a - b) / (1.0 + std::abs(b));
}

double max_relative_deviation(const cvec &a, const cvec &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, relative_deviation(a[i], b[i]));
  return worst;
}

double max_relative_deviation(const Eigen::MatrixXcd &a,
                              const Eigen::MatrixXcd &b) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      worst = std::max(worst, relative_deviation(a(i, j), b(i, j)));
  return worst;
}

DenseStepReport compare_newton_step(const cvec &x, const MonicPolynomial &p) {
  DenseStepReport report;
  report.closed_form = wdk_step(x, p);
  report.generic = newton_step_generic(x, p);
  report.max_relative_deviation =
      max_relative_deviation(report.closed_form, report.generic);
  return report;
}

DenseStepReport compare_chebyshev_step(const cvec &x,
                                       const MonicPolynomial &p) {
  DenseStepReport report;
  report.closed_form = chebyshev_step(x, p);
  report.generic = chebyshev_step_generic(x, p);
  report.max_relative_deviation =
      max_relative_deviation(report.closed_form, report.generic);
  return report;
}

Complex CheckRng::in_disk(double radius) {
  for (;;) {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    if (re * re + im * im <= 1.0)
      return Complex(radius * re, radius * im);
  }
}

cvec sample_separated_points(CheckRng &rng, std::size_t n, double radius,
                             double min_sep) {
  for (;;) {
    cvec pts(n);
    for (auto &z : pts)
      z = rng.in_disk(radius);
    if (min_pairwise_separation(pts) >= min_sep)
      return pts;
  }
}

RandomInstance random_instance(CheckRng &rng, std::size_t n,
                               double max_perturbation,
                               double iterate_min_sep) {
  RandomInstance inst;
  inst.roots = sample_separated_points(rng, n, 1.0, 0.35);
  for (;;) {
    inst.iterate = inst.roots;
    for (auto &z : inst.iterate)
      z += rng.in_disk(max_perturbation);
    if (n < 2 || min_pairwise_separation(inst.iterate) >= iterate_min_sep)
      return inst;
  }
}

CheckSummary run_check_suite(std::size_t degree, int trials,
                             std::uint64_t seed) {
  if (degree < 1 || trials < 1)
    throw std::invalid_argument("run_check_suite: degree and trials must be >= 1");
  CheckSummary summary;
  summary.degree = degree;
  summary.trials = trials;
  summary.seed = seed;
  CheckRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const RandomInstance inst = random_instance(rng, degree);
    const MonicPolynomial p = from_roots(inst.roots);
    const cvec &x = inst.iterate;

    summary.max_dev_wdk = std::max(
        summary.max_dev_wdk, compare_newton_step(x, p).max_relative_deviation);
    summary.max_dev_chebyshev =
        std::max(summary.max_dev_chebyshev,
                 compare_chebyshev_step(x, p).max_relative_deviation);
    summary.max_dev_inverse = std::max(
        summary.max_dev_inverse,
        max_relative_deviation(
            assemble_closed_form_inverse(x),
            Eigen::MatrixXcd(assemble_jacobian(x).partialPivLu().inverse())));
    summary.max_dev_fd_jacobian = std::max(
        summary.max_dev_fd_jacobian,
        max_relative_deviation(assemble_jacobian(x),
                               finite_difference_jacobian(x)));
    double fd_hess = 0.0;
    for (std::size_t k = 0; k < degree; ++k)
      fd_hess = std::max(
          fd_hess, max_relative_deviation(assemble_hessian_block(x, k),
                                          finite_difference_hessian_block(x, k)));
    summary.max_dev_fd_hessian = std::max(summary.max_dev_fd_hessian, fd_hess);
  }
  return summary;
}

} // namespace wk
