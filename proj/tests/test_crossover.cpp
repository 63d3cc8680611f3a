#include <atomic>
#include <random>

#include "cclp/crossover.hpp"
#include "cclp/standard_form.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cclp;

namespace {

CrossoverTask make_task(const LinearProgram& lp, Iterate snapshot,
                        Scalar threshold) {
  CrossoverTask t;
  t.std_lp = &lp;
  t.snapshot = std::move(snapshot);
  t.launch_threshold = threshold;
  return t;
}

}  // namespace

TEST_CASE("partition of the exact optimal vertex") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it;
  it.x = Vector{{2.0, 0.0}};
  it.y = Vector{{1.0}};
  it.z = Vector{{0.0, 1.0}};
  Partition p = guess_partition(lp, it, 1e-2);
  CHECK(p.label[0] == PartitionLabel::kCandidateBasic);
  CHECK(p.label[1] == PartitionLabel::kAtLower);
  REQUIRE(p.candidates.size() == 1);
  CHECK(p.candidates[0] == 0);
}

TEST_CASE("all-zero iterate snaps every bounded column") {
  LinearProgram lp = testing::two_var_lp();
  lp.col_lower[1] = -kInf;  // make column 2 free
  lp.col_upper[1] = kInf;
  Iterate it;
  it.x = Vector::Zero(2);
  it.y = Vector::Zero(1);
  it.z = Vector::Zero(2);
  Partition p = guess_partition(lp, it, 1e-2);
  CHECK(p.label[0] == PartitionLabel::kAtLower);   // at its bound
  CHECK(p.label[1] == PartitionLabel::kCandidateBasic);  // free
}

TEST_CASE("column at its upper bound with negative z snaps at-upper") {
  LinearProgram lp = testing::two_var_lp();
  lp.col_upper[0] = 2.0;
  Iterate it;
  it.x = Vector{{2.0, 0.0}};
  it.y = Vector{{1.0}};
  it.z = Vector{{-0.5, 1.0}};
  Partition p = guess_partition(lp, it, 1e-2);
  CHECK(p.label[0] == PartitionLabel::kAtUpper);
}

TEST_CASE("build_basis draws from candidates when enough are independent") {
  std::mt19937_64 rng(4);
  testing::GeneratedLp g = testing::generate_equality_lp(4, 10, 0.6, rng);
  Iterate it;
  it.x = Vector::Constant(10, 0.5);  // everything interior
  it.y = Vector::Zero(4);
  it.z = Vector::Zero(10);
  Partition p = guess_partition(g.lp, it, 1e-2);
  CHECK(p.candidates.size() == 10);
  Basis b = build_basis(g.lp, p);
  for (Index j : b.basic) {
    CHECK(j < 10);  // no logicals needed
  }
  EngineModel model(g.lp);
  CHECK_NOTHROW(FactorizedBasis(model, b.basic));
}

TEST_CASE("empty candidate set gives the all-slack basis") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it;
  it.x = Vector::Zero(2);
  it.y = Vector::Zero(1);
  it.z = Vector{{1.0, 2.0}};  // z dominates, both snapped
  Partition p = guess_partition(lp, it, 1e-2);
  CHECK(p.candidates.empty());
  Basis b = build_basis(lp, p);
  EngineModel model(lp);
  CHECK(b.basic == std::vector<Index>{model.num_structural()});
}

TEST_CASE("dependent candidates: exactly one enters, factorization succeeds") {
  // one row, two proportional columns
  LinearProgram lp;
  lp.c = Vector{{1.0, 1.0}};
  lp.A = make_sparse(1, 2, {{0, 0, 1.0}, {0, 1, 2.0}});
  lp.sense = {RowSense::kEq};
  lp.row_lower = Vector{{3.0}};
  lp.row_upper = Vector{{3.0}};
  lp.col_lower = Vector::Zero(2);
  lp.col_upper = Vector::Constant(2, kInf);
  Iterate it;
  it.x = Vector{{1.0, 1.0}};
  it.y = Vector::Zero(1);
  it.z = Vector::Zero(2);
  Partition p = guess_partition(lp, it, 1e-2);
  CHECK(p.candidates.size() == 2);
  Basis b = build_basis(lp, p);
  int structural = 0;
  for (Index j : b.basic) {
    if (j < 2) ++structural;
  }
  CHECK(structural == 1);
  EngineModel model(lp);
  CHECK_NOTHROW(FactorizedBasis(model, b.basic));
}

TEST_CASE("crossover from the exact optimum needs no cleanup pivots") {
  LinearProgram lp = testing::two_var_lp();
  Iterate it;
  it.x = Vector{{2.0, 0.0}};
  it.y = Vector{{1.0}};
  it.z = Vector{{0.0, 1.0}};
  CrossoverResult res = run_crossover(make_task(lp, it, 1e-2));
  REQUIRE(res.status == CrossoverStatus::kSuccess);
  CHECK(res.cleanup_pivots == 0);
  CHECK(res.abs_violation <= 1e-6);
  CHECK(lp.c.dot(res.iterate.x) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("crossover from a noisy optimum recovers the objective") {
  LinearProgram lp = testing::two_var_lp();
  std::mt19937_64 rng(8);
  Iterate it;
  it.x = Vector{{2.0, 0.0}} + testing::random_vector(2, rng, -1e-3, 1e-3);
  it.x = it.x.cwiseMax(0.0);
  it.y = Vector{{1.0}} + testing::random_vector(1, rng, -1e-3, 1e-3);
  it.z = Vector{{0.0, 1.0}};
  CrossoverResult res = run_crossover(make_task(lp, it, 1e-3));
  REQUIRE(res.status == CrossoverStatus::kSuccess);
  CHECK(lp.c.dot(res.iterate.x) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(res.abs_violation <= 1e-6);
}

TEST_CASE("cancelled crossover reports promptly with its wall time") {
  std::mt19937_64 rng(21);
  testing::GeneratedLp g = testing::generate_equality_lp(10, 25, 0.4, rng);
  Iterate it;
  it.x = Vector::Constant(25, 0.3);
  it.y = Vector::Zero(10);
  it.z = Vector::Zero(25);
  std::atomic<bool> cancel{true};
  CrossoverTask task = make_task(g.lp, it, 1e-2);
  task.simplex.cancel = &cancel;
  CrossoverResult res = run_crossover(task);
  CHECK(res.status == CrossoverStatus::kCancelled);
  CHECK(res.seconds >= 0.0);
}

TEST_CASE("verifier accepts the optimal basis and rejects the others") {
  LinearProgram lp = testing::two_var_lp();
  EngineModel model(lp);
  auto with_basic = [&](Index j) {
    Basis b;
    b.basic = {j};
    b.status.assign(model.num_cols(), ColStatus::kAtLower);
    b.status[2] = ColStatus::kFixed;
    b.status[j] = ColStatus::kBasic;
    return b;
  };
  VerifyOutcome good = verify_basic_optimal(lp, with_basic(0), 1e-6);
  CHECK(good.ok);
  CHECK(good.iterate.x[0] == doctest::Approx(2.0));
  // basis {x2}: x = (0,2), reduced cost of x1 = 1 - 2 = -1 < 0
  VerifyOutcome bad = verify_basic_optimal(lp, with_basic(1), 1e-6);
  CHECK(!bad.ok);
  CHECK(bad.violation == doctest::Approx(1.0));
}

TEST_CASE("verifier rejects a primal-infeasible slack basis") {
  // x1 + x2 <= -1 with x >= 0: slack basis forces the slack negative
  LinearProgram lp;
  lp.c = Vector{{1.0, 1.0}};
  lp.A = make_sparse(1, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  lp.sense = {RowSense::kLe};
  lp.row_lower = Vector{{-kInf}};
  lp.row_upper = Vector{{-1.0}};
  lp.col_lower = Vector::Zero(2);
  lp.col_upper = Vector::Constant(2, kInf);
  StandardFormMap map = to_standard_form(lp);
  EngineModel model(map.std_lp);
  Basis b;
  b.basic = {2};  // the slack column of the row
  b.status.assign(model.num_cols(), ColStatus::kAtLower);
  b.status[2] = ColStatus::kBasic;
  b.status[3] = ColStatus::kFixed;  // logical
  VerifyOutcome out = verify_basic_optimal(map.std_lp, b, 1e-6);
  CHECK(!out.ok);
  CHECK(out.violation >= 1.0);
}

TEST_CASE("verification is independent of the snapshot") {
  // run crossover from a terrible snapshot; the verifier must still accept
  // only because the basis itself checks out
  std::mt19937_64 rng(77);
  testing::GeneratedLp g = testing::generate_equality_lp(6, 15, 0.5, rng);
  Iterate junk;
  junk.x = Vector::Constant(15, 7.0);
  junk.y = testing::random_vector(6, rng, -5.0, 5.0);
  junk.z = testing::random_vector(15, rng, -5.0, 5.0);
  CrossoverResult res = run_crossover(make_task(g.lp, junk, 1e-2));
  REQUIRE(res.status == CrossoverStatus::kSuccess);
  CHECK(g.lp.c.dot(res.iterate.x) ==
        doctest::Approx(g.objective).epsilon(1e-7));
  VerifyOutcome again = verify_basic_optimal(g.lp, res.basis, 1e-6);
  CHECK(again.ok);
  // every nonbasic column is exactly on its bound
  EngineModel model(g.lp);
  for (Index j = 0; j < model.num_cols(); ++j) {
    if (res.basis.status[j] == ColStatus::kBasic) continue;
    if (j < 15) {
      CHECK(again.iterate.x[j] == res.basis.nonbasic_value(model, j));
    }
  }
}

TEST_CASE("cleanup pivots do not explode for tighter snapshots") {
  std::mt19937_64 rng(99);
  testing::GeneratedLp g = testing::generate_equality_lp(8, 20, 0.5, rng);
  auto noisy = [&](double noise) {
    Iterate it;
    it.x = g.x_star + testing::random_vector(20, rng, -noise, noise);
    it.x = it.x.cwiseMax(0.0);
    it.y = g.y_star + testing::random_vector(8, rng, -noise, noise);
    it.z = g.z_star;
    CrossoverResult res = run_crossover(make_task(g.lp, it, noise));
    REQUIRE(res.status == CrossoverStatus::kSuccess);
    return res.cleanup_pivots;
  };
  const auto coarse = noisy(1e-2);
  const auto fine = noisy(1e-8);
  CHECK(fine <= coarse);
}
