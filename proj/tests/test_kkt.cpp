#include <cmath>
#include <random>

#include "cclp/kkt.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace cclp;

namespace {

Iterate make_iterate(Vector x, Vector y, Vector z) {
  Iterate it;
  it.x = std::move(x);
  it.y = std::move(y);
  it.z = std::move(z);
  return it;
}

}  // namespace

TEST_CASE("primal residual on the two-variable LP") {
  LinearProgram lp = testing::two_var_lp();
  Iterate feasible = make_iterate(Vector{{1.0, 1.0}}, Vector::Zero(1),
                                  Vector::Zero(2));
  CHECK(primal_residual(lp, feasible)[0] == 0.0);
  Iterate zero = make_iterate(Vector::Zero(2), Vector::Zero(1),
                              Vector::Zero(2));
  CHECK(primal_residual(lp, zero)[0] == 2.0);
}

TEST_CASE("residuals match a dense recomputation on random LPs") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 25; ++rep) {
    testing::GeneratedLp g = testing::generate_equality_lp(5, 9, 0.5, rng);
    Iterate it = make_iterate(testing::random_vector(9, rng),
                              testing::random_vector(5, rng),
                              testing::random_vector(9, rng));
    Eigen::MatrixXd D(g.lp.A);
    Vector rp_dense = g.lp.row_lower - D * it.x;
    Vector rd_dense = D.transpose() * it.y + it.z - g.lp.c;
    CHECK((primal_residual(g.lp, it) - rp_dense).lpNorm<Eigen::Infinity>() <
          1e-12);
    CHECK((dual_residual(g.lp, it) - rd_dense).lpNorm<Eigen::Infinity>() <
          1e-12);
  }
}

TEST_CASE("optimal dual pair of the two-variable LP has zero residuals") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it = make_iterate(Vector{{2.0, 0.0}}, Vector{{1.0}},
                            Vector{{0.0, 1.0}});
  CHECK(dual_residual(lp, it).isZero(0.0));
  auto [pobj, dobj] = objective_gap(lp, it);
  CHECK(pobj == 2.0);
  CHECK(dobj == 2.0);
  ResidualReport rep = relative_report(lp, it);
  CHECK(rep.maxresid_rel == 0.0);
  CHECK(converged_relative(rep, 1e-16));
}

TEST_CASE("all-zero iterate reproduces the hand-evaluated ratios") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it = make_iterate(Vector::Zero(2), Vector::Zero(1), Vector::Zero(2));
  ResidualReport rep = relative_report(lp, it);
  CHECK(rep.rel_primal == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double s5 = std::sqrt(5.0);
  CHECK(rep.rel_dual == doctest::Approx(s5 / (1.0 + s5)).epsilon(1e-15));
  CHECK(rep.rel_gap == 0.0);
  CHECK(rep.maxresid_rel == std::max(rep.rel_primal, rep.rel_dual));
  auto [pobj, dobj] = objective_gap(lp, it);
  CHECK(pobj == 0.0);
  CHECK(dobj == 0.0);
}

TEST_CASE("report formulas match direct recomputation when data scales") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    testing::GeneratedLp g = testing::generate_equality_lp(4, 7, 0.6, rng);
    LinearProgram doubled = g.lp;
    doubled.c *= 2.0;
    doubled.row_lower *= 2.0;
    doubled.row_upper *= 2.0;
    Iterate it = make_iterate(testing::random_vector(7, rng),
                              testing::random_vector(4, rng),
                              testing::random_vector(7, rng));
    ResidualReport r = relative_report(doubled, it);
    // recompute every ratio from its definition
    Vector rp = primal_residual(doubled, it);
    Vector rd = dual_residual(doubled, it);
    auto [pobj, dobj] = objective_gap(doubled, it);
    CHECK(r.rel_primal ==
          rp.norm() / (1.0 + doubled.representative_rhs().norm()));
    CHECK(r.rel_dual == rd.norm() / (1.0 + doubled.c.norm()));
    CHECK(r.rel_gap ==
          std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj)));
    CHECK(r.maxresid_rel == std::max({r.rel_primal, r.rel_dual, r.rel_gap}));
  }
}

TEST_CASE("converged_relative uses <= at the boundary") {
  ResidualReport rep;
  rep.maxresid_rel = 0.0;
  CHECK(converged_relative(rep, 1e-300));
  rep.maxresid_rel = 1e-5;
  CHECK(!converged_relative(rep, 1e-6));
  rep.maxresid_rel = 1e-6;
  CHECK(converged_relative(rep, 1e-6));
}

TEST_CASE("absolute violation picks the dominant term") {
  LinearProgram lp = testing::two_var_lp();
  Iterate opt = make_iterate(Vector{{2.0, 0.0}}, Vector{{1.0}},
                             Vector{{0.0, 1.0}});
  CHECK(absolute_violation(lp, opt) < 1e-12);
  Iterate off = make_iterate(Vector{{2.001, 0.0}}, Vector{{1.0}},
                             Vector{{0.0, 1.0}});
  CHECK(absolute_violation(lp, off) == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("perturbing x moves the violation by at most the norm bound") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 25; ++rep) {
    testing::GeneratedLp g = testing::generate_equality_lp(5, 8, 0.5, rng);
    Iterate it = make_iterate(testing::random_vector(8, rng),
                              testing::random_vector(5, rng),
                              testing::random_vector(8, rng));
    Vector delta = testing::random_vector(8, rng, -0.01, 0.01);
    Iterate moved = it;
    moved.x += delta;
    const double a = absolute_violation(g.lp, it);
    const double b = absolute_violation(g.lp, moved);
    Eigen::MatrixXd D(g.lp.A);
    const double row_gain = D.cwiseAbs().rowwise().sum().maxCoeff();
    const double z_gain = it.z.lpNorm<Eigen::Infinity>();
    const double bound = (std::max(row_gain, 1.0) + z_gain) *
                         delta.lpNorm<Eigen::Infinity>();
    CHECK(std::abs(a - b) <= bound + 1e-12);
  }
}

TEST_CASE("tolerance validation") {
  Tolerances tol;
  CHECK_NOTHROW(tol.validate());
  tol.decrement = 1.0;
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
  tol = Tolerances{};
  tol.eps_rel = 1e-1;  // above eps_cross
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
}

TEST_CASE("report serializes to JSON with stable field names") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it = make_iterate(Vector::Zero(2), Vector::Zero(1), Vector::Zero(2));
  auto j = nlohmann::json::parse(relative_report(lp, it).to_json());
  CHECK(j.contains("rel_primal"));
  CHECK(j.contains("rel_dual"));
  CHECK(j.contains("rel_gap"));
  CHECK(j.contains("maxresid_rel"));
  CHECK(j.contains("complementarity"));
  CHECK(j["rel_gap"].get<double>() == 0.0);
}
