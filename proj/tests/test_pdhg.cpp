#include <cmath>
#include <random>
#include <vector>

#include "Eigen/Dense"
#include "cclp/pdhg.hpp"
#include "cclp/scaling.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cclp;

TEST_CASE("matrix norm estimates") {
  SparseMat row = make_sparse(1, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  CHECK(estimate_matrix_norm(row, 50, 1) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  SparseMat eye = make_sparse(3, 3, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}});
  CHECK(estimate_matrix_norm(eye, 10, 1) == doctest::Approx(1.0).epsilon(1e-12));
  SparseMat diag = make_sparse(2, 2, {{0, 0, 3.0}, {1, 1, 4.0}});
  CHECK(estimate_matrix_norm(diag, 100, 1) ==
        doctest::Approx(4.0).epsilon(1e-10));
  SparseMat zero(4, 4);
  zero.makeCompressed();
  CHECK(estimate_matrix_norm(zero, 10, 1) == 0.0);
}

TEST_CASE("norm estimate within 1% of dense SVD for 50 iterations") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 25; ++rep) {
    const Index m = 2 + static_cast<Index>(rng() % 20);
    const Index n = 2 + static_cast<Index>(rng() % 20);
    SparseMat A = testing::random_sparse(m, n, 0.5, rng);
    if (A.nonZeros() == 0) continue;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd{Eigen::MatrixXd(A)};
    const double truth = svd.singularValues()[0];
    const double est = estimate_matrix_norm(A, 50, rep);
    CHECK(std::abs(est - truth) <= 0.01 * truth);
  }
}

TEST_CASE("hand-evaluated first step on the two-variable LP") {
  LinearProgram lp = testing::two_var_lp();
  PdhgState s = make_initial_state(lp);
  CHECK(s.current.x == Vector::Zero(2));
  pdhg_step(lp, s, 0.5, 0.5);
  CHECK(s.current.x == Vector::Zero(2));  // proj of -0.5*(1,2) onto x >= 0
  CHECK(s.current.y == Vector{{1.0}});    // 0 + 0.5*(2 - 0)
  CHECK(s.iteration == 1);
}

TEST_CASE("the optimum is a fixed point of the step") {
  LinearProgram lp = testing::two_var_lp();
  PdhgState s = make_initial_state(lp);
  s.current.x = Vector{{2.0, 0.0}};
  s.current.y = Vector{{1.0}};
  refresh_products(lp, s);
  for (int t = 0; t < 5; ++t) pdhg_step(lp, s, 0.3, 0.7);
  CHECK(s.current.x == Vector{{2.0, 0.0}});
  CHECK(s.current.y == Vector{{1.0}});
}

TEST_CASE("projection keeps every emitted x within bounds") {
  std::mt19937_64 rng(59);
  testing::GeneratedLp g = testing::generate_equality_lp(4, 8, 0.5, rng);
  LinearProgram lp = g.lp;
  for (Index j = 0; j < lp.num_cols(); j += 2) lp.col_upper[j] = 1.0;
  PdhgState s = make_initial_state(lp);
  for (int t = 0; t < 100; ++t) {
    pdhg_step(lp, s, 0.2, 0.2);
    CHECK((s.current.x.array() >= lp.col_lower.array()).all());
    CHECK((s.current.x.array() <= lp.col_upper.array()).all());
  }
}

TEST_CASE("restart rule application") {
  LinearProgram lp = testing::two_var_lp();
  PdhgState s = make_initial_state(lp);
  pdhg_step(lp, s, 0.5, 0.5);
  s.last_restart_resid = 1e-2;
  SUBCASE("improved average restarts") {
    CHECK(restart_if_improved(lp, s, 4e-3, 0.5));
    CHECK(s.window == 0);
    CHECK(s.restarts == 1);
    CHECK(s.last_restart_resid == 4e-3);
  }
  SUBCASE("insufficient improvement does not") {
    CHECK(!restart_if_improved(lp, s, 6e-3, 0.5));
    CHECK(s.window == 1);
    CHECK(s.restarts == 0);
  }
}

TEST_CASE("non-finite data raises a numerical error with the iteration") {
  LinearProgram lp = testing::two_var_lp();
  lp.c[0] = 1e308;
  PdhgState s = make_initial_state(lp);
  bool threw = false;
  try {
    for (int t = 0; t < 64; ++t) pdhg_step(lp, s, 1e300, 1e300);
  } catch (const PdhgNumericalError& e) {
    threw = true;
    CHECK(e.iteration() >= 0);
  }
  CHECK(threw);
}

TEST_CASE("two-variable LP converges and recovers the vertex") {
  LinearProgram lp = testing::two_var_lp();
  PdhgConfig config;
  Tolerances tol;
  PdhgResult res = run_pdhg(lp, config, tol);
  REQUIRE(res.stop == PdhgStopReason::kConverged);
  CHECK(res.report.maxresid_rel <= 1e-6);
  CHECK(std::abs(res.iterate.x[0] - 2.0) < 1e-4);
  CHECK(std::abs(res.iterate.x[1] - 0.0) < 1e-4);
  // oracle: optimal objective by vertex enumeration
  auto opt = testing::enumerate_vertices_objective(lp);
  REQUIRE(opt.has_value());
  CHECK(res.report.primal_objective == doctest::Approx(*opt).epsilon(1e-5));
}

TEST_CASE("snapshots fire once per threshold, in decreasing order") {
  LinearProgram lp = testing::two_var_lp();
  PdhgConfig config;
  Tolerances tol;
  std::vector<PdhgSnapshot> snaps;
  PdhgResult res = run_pdhg(lp, config, tol, {1e-2, 1e-3},
                            [&](const PdhgSnapshot& s) { snaps.push_back(s); });
  REQUIRE(res.stop == PdhgStopReason::kConverged);
  REQUIRE(snaps.size() == 2);
  CHECK(snaps[0].threshold == 1e-2);
  CHECK(snaps[1].threshold == 1e-3);
  CHECK(snaps[0].maxresid <= 1e-2);
  CHECK(snaps[1].maxresid <= 1e-3);
  CHECK(snaps[0].iteration < snaps[1].iteration);
}

TEST_CASE("zero iteration budget returns immediately") {
  LinearProgram lp = testing::two_var_lp();
  PdhgConfig config;
  config.max_iterations = 0;
  PdhgResult res = run_pdhg(lp, config, Tolerances{});
  CHECK(res.stop == PdhgStopReason::kIterationLimit);
  CHECK(res.iterations == 0);
}

TEST_CASE("identical config gives a bit-identical iterate stream") {
  std::mt19937_64 rng(77);
  testing::GeneratedLp g = testing::generate_equality_lp(6, 12, 0.5, rng);
  PdhgConfig config;
  config.max_iterations = 500;
  PdhgResult a = run_pdhg(g.lp, config, Tolerances{});
  PdhgResult b = run_pdhg(g.lp, config, Tolerances{});
  CHECK(a.stop == b.stop);
  CHECK(a.iterate.x == b.iterate.x);
  CHECK(a.iterate.y == b.iterate.y);
  CHECK(a.report.maxresid_rel == b.report.maxresid_rel);
}

TEST_CASE("restart-average residual is non-increasing across restarts") {
  std::mt19937_64 rng(13);
  testing::GeneratedLp g = testing::generate_equality_lp(5, 10, 0.5, rng);
  // drive the loop manually to observe restart points
  auto [slp, scaling] = ruiz_scale(g.lp, 10);
  PdhgState s = make_initial_state(slp);
  const Scalar norm = estimate_matrix_norm(slp.A, 100, 0);
  const Scalar tau = 0.9 / norm, sigma = 0.9 / norm;
  std::vector<Scalar> restart_resids;
  for (int t = 0; t < 20000; ++t) {
    pdhg_step(slp, s, tau, sigma);
    if (s.window == 0) continue;
    const Scalar inv = 1.0 / static_cast<Scalar>(s.window);
    Iterate avg;
    avg.x = scaling.unscale_x(s.x_sum * inv);
    avg.y = scaling.unscale_y(s.y_sum * inv);
    // all columns sit in [0, inf), so admissible reduced costs are >= 0
    avg.z = (g.lp.c - Vector(g.lp.A.transpose() * avg.y)).cwiseMax(0.0);
    ResidualReport rep = relative_report(g.lp, avg);
    if (s.last_restart_resid == kInf) s.last_restart_resid = rep.maxresid_rel;
    if (restart_if_improved(slp, s, rep.maxresid_rel, 0.5)) {
      restart_resids.push_back(rep.maxresid_rel);
    }
  }
  REQUIRE(restart_resids.size() >= 2);
  for (size_t i = 1; i < restart_resids.size(); ++i) {
    CHECK(restart_resids[i] <= restart_resids[i - 1]);
  }
}
