#include "wk/vieta.hpp"

namespace wk {

namespace {

void require_no_collision(const cvec &x, double eps, const char *where) {
  if (auto pair = find_collision(x, eps))
    throw SingularJacobianError(
        std::string(where) + ": entries " + std::to_string(pair->first) +
        " and " + std::to_string(pair->second) +
        " coincide, Jacobian of the coefficient map is singular");
}

cvec expand_skipping(const cvec &x, std::size_t skip_a, std::size_t skip_b) {
  cvec reduced;
  reduced.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != skip_a && j != skip_b)
      reduced.push_back(x[j]);
  return expand_linear_factors(reduced);
}

} // namespace

CoeffVector eval_V(const cvec &x) { return from_roots(x).coeffs(); }

cvec eval_F(const cvec &x, const CoeffVector &a) {
  if (x.size() != a.size())
    throw std::invalid_argument("eval_F: length mismatch");
  cvec f = eval_V(x);
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] -= a[i];
  return f;
}

cvec jacobian_column(const cvec &x, std::size_t k) {
  if (k >= x.size())
    throw std::invalid_argument("jacobian_column: index out of range");
  // Coefficients of prod_{j != k} (t - x_j), negated; the implicit leading 1
  // becomes the trailing -1.
  cvec c = expand_skipping(x, k, k);
  cvec col(x.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    col[i] = -c[i];
  col[x.size() - 1] = Complex(-1.0);
  return col;
}

cvec jacobian_inverse_row(const cvec &x, std::size_t l, double collision_eps) {
  if (l >= x.size())
    throw std::invalid_argument("jacobian_inverse_row: index out of range");
  require_no_collision(x, collision_eps, "jacobian_inverse_row");
  const Complex scale = Complex(1.0) / deflated_product(x, l, x[l]);
  cvec row(x.size());
  Complex power(1.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    row[j] = scale * power;
    power *= x[l];
  }
  return row;
}

cvec hessian_block_column(const cvec &x, std::size_t k, std::size_t l) {
  const std::size_t n = x.size();
  if (k >= n || l >= n)
    throw std::invalid_argument("hessian_block_column: index out of range");
  cvec col(n, Complex(0.0));
  if (l == k)
    return col;
  cvec c = expand_skipping(x, k, l);
  for (std::size_t i = 0; i < c.size(); ++i)
    col[i] = c[i];
  col[n - 2] = Complex(1.0);
  return col;
}

cvec bilinear_apply(const DerivativeTensor &tensor, const cvec &y,
                    const cvec &z) {
  const std::size_t n = tensor.hessian_blocks.size();
  if (y.size() != n || z.size() != n)
    throw std::invalid_argument("bilinear_apply: length mismatch");
  Eigen::VectorXcd ye(n);
  for (std::size_t j = 0; j < n; ++j)
    ye(static_cast<Eigen::Index>(j)) = y[j];
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k)
    acc += z[k] * (tensor.hessian_blocks[k] * ye);
  cvec out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = acc(static_cast<Eigen::Index>(i));
  return out;
}

Eigen::MatrixXcd inverse_times_hessian_block(const cvec &x, std::size_t k,
                                             double collision_eps) {
  const std::size_t n = x.size();
  if (k >= n)
    throw std::invalid_argument(
        "inverse_times_hessian_block: index out of range");
  require_no_collision(x, collision_eps, "inverse_times_hessian_block");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k)
      continue;
    const auto je = static_cast<Eigen::Index>(j);
    const auto ke = static_cast<Eigen::Index>(k);
    m(je, je) = Complex(1.0) / (x[k] - x[j]);
    m(ke, je) = Complex(1.0) / (x[j] - x[k]);
  }
  return m;
}

} // namespace wk
