#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "wk/oracle.hpp"

using namespace wk;

namespace {
const MonicPolynomial kQuartic(cvec{{6, 0}, {0, 0}, {-5, 0}, {0, 0}});
const cvec kRealStart{{1.2, 0}, {1.8, 0}, {-1.2, 0}, {-1.8, 0}};
} // namespace

TEST_CASE("generic newton step against hand-solved 2x2 system") {
  // p = t^2 - 3t + 2, x = (0, 5): F = (-2, -2), F' = [[5, 0], [-1, -1]],
  // solving gives d = (-0.4, 2.4).
  const MonicPolynomial p(cvec{{2, 0}, {-3, 0}});
  const cvec next = newton_step_generic({{0, 0}, {5, 0}}, p);
  CHECK(std::abs(next[0] - Complex(0.4, 0)) < 1e-12);
  CHECK(std::abs(next[1] - Complex(2.6, 0)) < 1e-12);
}

TEST_CASE("generic steps fix exact root vectors") {
  CheckRng rng(41);
  const cvec roots = sample_separated_points(rng, 6, 1.5, 0.3);
  const MonicPolynomial p = from_roots(roots);
  CHECK(testutil::bit_equal(newton_step_generic(roots, p), roots));
  CHECK(testutil::bit_equal(chebyshev_step_generic(roots, p), roots));
}

TEST_CASE("closed-form steps match the dense generic steps") {
  CHECK(compare_newton_step(kRealStart, kQuartic).max_relative_deviation <
        1e-10);
  CHECK(compare_chebyshev_step(kRealStart, kQuartic).max_relative_deviation <
        1e-10);

  CheckRng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    cvec x(6), coeffs(6);
    for (auto &z : coeffs)
      z = rng.in_disk(2.0);
    x = sample_separated_points(rng, 6, 2.0, 0.1);
    const MonicPolynomial p(coeffs);
    CHECK(compare_newton_step(x, p).max_relative_deviation < 1e-9);
    CHECK(compare_chebyshev_step(x, p).max_relative_deviation < 1e-9);
  }
}

TEST_CASE("stacked newton direction equals the dense solve") {
  CheckRng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomInstance inst = random_instance(rng, 6);
    const MonicPolynomial p = from_roots(inst.roots);
    const cvec &x = inst.iterate;
    Eigen::VectorXcd f(static_cast<Eigen::Index>(x.size()));
    const cvec fv = eval_F(x, p.coeffs());
    for (std::size_t i = 0; i < x.size(); ++i)
      f(static_cast<Eigen::Index>(i)) = fv[i];
    const Eigen::VectorXcd dense = assemble_jacobian(x).partialPivLu().solve(f);
    for (std::size_t l = 0; l < x.size(); ++l) {
      const Complex closed = -p(x[l]) / deflated_product(x, l, x[l]);
      CHECK(std::abs(closed - dense(static_cast<Eigen::Index>(l))) <=
            1e-10 * (1.0 + std::abs(closed)));
    }
  }
}

TEST_CASE("closed-form inverse matches dense inversion") {
  CheckRng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomInstance inst = random_instance(rng, 5);
    const Eigen::MatrixXcd closed = assemble_closed_form_inverse(inst.iterate);
    const Eigen::MatrixXcd dense =
        assemble_jacobian(inst.iterate).partialPivLu().inverse();
    CHECK(max_relative_deviation(closed, dense) < 1e-9);
  }
}

TEST_CASE("finite differences reproduce the jacobian") {
  const Eigen::MatrixXcd fd =
      finite_difference_jacobian({{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(std::abs(fd(0, 0) - Complex(24, 0)) < 1e-4);
  CHECK(std::abs(fd(1, 0) - Complex(-26, 0)) < 1e-4);
  CHECK(std::abs(fd(2, 0) - Complex(9, 0)) < 1e-5);
  CHECK(std::abs(fd(3, 0) - Complex(-1, 0)) < 1e-6);

  const Eigen::MatrixXcd one = finite_difference_jacobian({{0.7, 0.2}});
  CHECK(std::abs(one(0, 0) - Complex(-1, 0)) < 1e-9);

  CheckRng rng(49);
  for (int trial = 0; trial < 20; ++trial) {
    cvec x(5);
    for (auto &z : x)
      z = rng.in_disk(1.5);
    CHECK(max_relative_deviation(assemble_jacobian(x),
                                 finite_difference_jacobian(x)) < 1e-6);
  }
  CHECK_THROWS_AS(finite_difference_jacobian({{1, 0}}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("finite differences reproduce the hessian blocks") {
  const cvec x{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
  const Eigen::MatrixXcd fd = finite_difference_hessian_block(x, 0);
  // zero column at k and zero last row, visible through the differences
  for (Eigen::Index i = 0; i < 4; ++i) {
    CHECK(std::abs(fd(i, 0)) < 1e-9);
    CHECK(std::abs(fd(3, i)) < 1e-9);
  }
  CHECK(std::abs(fd(0, 1) - Complex(12, 0)) < 1e-4);
  CHECK(std::abs(fd(1, 1) - Complex(-7, 0)) < 1e-5);

  CheckRng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    cvec y(5);
    for (auto &z : y)
      z = rng.in_disk(1.5);
    for (std::size_t k = 0; k < y.size(); ++k)
      CHECK(max_relative_deviation(assemble_hessian_block(y, k),
                                   finite_difference_hessian_block(y, k)) <
            1e-5);
  }
}

TEST_CASE("generic steps refuse coincident entries") {
  const MonicPolynomial p = from_roots({{1, 0}, {2, 0}, {3, 0}});
  CHECK_THROWS_AS(newton_step_generic({{1, 0}, {1, 0}, {2, 0}}, p),
                  SingularJacobianError);
  CHECK_THROWS_AS(chebyshev_step_generic({{1, 0}, {1, 0}, {2, 0}}, p),
                  SingularJacobianError);
}

TEST_CASE("check suite is deterministic and passes") {
  const CheckSummary a = run_check_suite(6, 25, 123);
  const CheckSummary b = run_check_suite(6, 25, 123);
  CHECK(a.pass());
  CHECK(a.max_dev_wdk == b.max_dev_wdk);
  CHECK(a.max_dev_chebyshev == b.max_dev_chebyshev);
  CHECK(a.max_dev_inverse == b.max_dev_inverse);
  CHECK(a.max_dev_fd_jacobian == b.max_dev_fd_jacobian);
  CHECK(a.max_dev_fd_hessian == b.max_dev_fd_hessian);

  const CheckSummary degree1 = run_check_suite(1, 1, 0);
  CHECK(degree1.pass());

  CHECK_THROWS_AS(run_check_suite(0, 1, 0), std::invalid_argument);
}
