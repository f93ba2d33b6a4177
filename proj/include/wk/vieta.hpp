#pragma once

#include <Eigen/Dense>

#include "wk/poly.hpp"

namespace wk {

// The coefficient map F'(x) has no eigen-decomposable structure worth a
// dedicated class; a coefficient vector is just (a_0, ..., a_{n-1}) with the
// leading 1 implicit.
using CoeffVector = cvec;

// A root vector with two entries closer than the collision floor makes the
// Jacobian of the coefficients-from-roots map singular.
class SingularJacobianError : public std::runtime_error {
public:
  explicit SingularJacobianError(const std::string &what)
      : std::runtime_error(what) {}
};

// Materialized derivatives of V: the n x n Jacobian F'(x) and the n blocks
// A^{(k)}(x) of the second-derivative bilinear form. Only the oracle and the
// tests build these; the closed-form iterations never allocate a matrix.
struct DerivativeTensor {
  Eigen::MatrixXcd jacobian;
  std::vector<Eigen::MatrixXcd> hessian_blocks;
};

// V(x): ascending coefficients of the monic polynomial with roots x. Equals
// from_roots(x).coeffs() bit for bit.
CoeffVector eval_V(const cvec &x);

// F(x) = V(x) - a. Zero exactly when x is a permutation of the roots of the
// polynomial with coefficient vector a.
cvec eval_F(const cvec &x, const CoeffVector &a);

// Column k of F'(x): the negated coefficients of the monic degree-(n-1)
// polynomial with roots {x_j : j != k}, ending in -1. Satisfies
// (1, t, ..., t^{n-1}) . column = B^{(k)}(t).
cvec jacobian_column(const cvec &x, std::size_t k);

// Row l of F'(x)^{-1} in closed form:
//   (1 / B^{(l)}(x_l)) * (1, x_l, x_l^2, ..., x_l^{n-1}).
// Throws SingularJacobianError when entries of x collide.
cvec jacobian_inverse_row(const cvec &x, std::size_t l,
                          double collision_eps = kDefaultCollisionEps);

// Column l of A^{(k)}(x): coefficients of the monic degree-(n-2) polynomial
// with roots {x_v : v not in {k, l}}, followed by 1 and 0. The zero vector
// when l == k. Satisfies (1, t, ..., t^{n-1}) . column = B^{(lk)}(t).
cvec hessian_block_column(const cvec &x, std::size_t k, std::size_t l);

// F''(x)(y, z), component i = sum_k (sum_j a^{(k)}_{ij} y_j) z_k.
cvec bilinear_apply(const DerivativeTensor &tensor, const cvec &y,
                    const cvec &z);

// F'(x)^{-1} A^{(k)}(x) assembled directly from its closed form: entry (j,j)
// is 1/(x_k - x_j) for j != k, entry (k,l) is 1/(x_l - x_k) for l != k, and
// every other entry, (k,k) included, is an exact zero rather than a computed
// near-zero ratio.
Eigen::MatrixXcd
inverse_times_hessian_block(const cvec &x, std::size_t k,
                            double collision_eps = kDefaultCollisionEps);

} // namespace wk
