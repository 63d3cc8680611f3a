// Shared helpers for the test suites: tiny reference problems, seeded random
// instance generators, and brute-force oracles kept deliberately independent
// of the library's solver path (dense Eigen algebra only).
#ifndef CCLP_TESTS_TEST_UTIL_HPP_
#define CCLP_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "Eigen/Dense"
#include "cclp/kernels.hpp"
#include "cclp/lp.hpp"

namespace cclp::testing {

// min x1 + 2 x2  s.t.  x1 + x2 = 2,  x >= 0.  Optimum x = (2, 0), obj 2,
// dual y = 1, z = (0, 1).
inline LinearProgram two_var_lp() {
  LinearProgram lp;
  lp.name = "TWOVAR";
  lp.objective_name = "COST";
  lp.c = Vector{{1.0, 2.0}};
  lp.A = make_sparse(1, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  lp.sense = {RowSense::kEq};
  lp.row_lower = Vector{{2.0}};
  lp.row_upper = Vector{{2.0}};
  lp.col_lower = Vector::Zero(2);
  lp.col_upper = Vector::Constant(2, kInf);
  lp.row_names = {"R1"};
  lp.col_names = {"X1", "X2"};
  return lp;
}

inline SparseMat random_sparse(Index nrows, Index ncols, double density,
                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Eigen::Triplet<Scalar>> t;
  for (Index j = 0; j < ncols; ++j) {
    for (Index i = 0; i < nrows; ++i) {
      if (coin(rng) < density) {
        Scalar v = val(rng);
        if (v == 0.0) v = 1.0;
        t.emplace_back(i, j, v);
      }
    }
  }
  return make_sparse(nrows, ncols, t);
}

inline Vector random_vector(Index n, std::mt19937_64& rng, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> val(lo, hi);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = val(rng);
  return v;
}

// A feasible, bounded equality-form LP with a known optimal value, built
// from a complementary primal/dual pair: x* basic-ish and interior on its
// support, z* > 0 off support, c = A'y* + z*. (x*, y*, z*) then satisfies
// every optimality condition, so opt = c'x*.
struct GeneratedLp {
  LinearProgram lp;
  Vector x_star, y_star, z_star;
  Scalar objective;
};

inline GeneratedLp generate_equality_lp(Index nrows, Index ncols,
                                        double density,
                                        std::mt19937_64& rng) {
  GeneratedLp g;
  SparseMat A = random_sparse(nrows, ncols, density, rng);
  // make sure no column is empty: add a diagonal-ish band
  std::vector<Eigen::Triplet<Scalar>> extra;
  for (Index j = 0; j < ncols; ++j) extra.emplace_back(j % nrows, j, 1.0);
  for (Index j = 0; j < ncols; ++j) {
    for (SparseMat::InnerIterator it(A, j); it; ++it) {
      extra.emplace_back(static_cast<Index>(it.row()), j, it.value());
    }
  }
  A = make_sparse(nrows, ncols, extra);

  std::vector<Index> perm(ncols);
  for (Index j = 0; j < ncols; ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), rng);

  g.x_star = Vector::Zero(ncols);
  g.z_star = Vector::Zero(ncols);
  std::uniform_real_distribution<double> pos(0.5, 2.0);
  for (Index k = 0; k < ncols; ++k) {
    if (k < nrows) {
      g.x_star[perm[k]] = pos(rng);  // support, z = 0
    } else {
      g.z_star[perm[k]] = pos(rng);  // at lower bound, z > 0
    }
  }
  g.y_star = random_vector(nrows, rng);

  g.lp.c = A.transpose() * g.y_star + g.z_star;
  g.lp.A = A;
  g.lp.sense.assign(nrows, RowSense::kEq);
  Vector b = A * g.x_star;
  g.lp.row_lower = b;
  g.lp.row_upper = b;
  g.lp.col_lower = Vector::Zero(ncols);
  g.lp.col_upper = Vector::Constant(ncols, kInf);
  g.objective = g.lp.c.dot(g.x_star);
  return g;
}

// Exhaustive vertex enumeration for equality-form LPs with small dimensions.
// Tries every basis candidate set and every bound assignment of the
// nonbasic columns; returns the best feasible objective, or nullopt when no
// vertex is feasible.
inline std::optional<double> enumerate_vertices_objective(
    const LinearProgram& lp, double feas_tol = 1e-8) {
  const Index m = lp.num_rows();
  const Index n = lp.num_cols();
  const Eigen::MatrixXd A = Eigen::MatrixXd(lp.A);
  const Vector b = lp.row_lower;  // all-equality form
  std::optional<double> best;

  std::vector<Index> pick(m);
  auto feasible_value = [&](const std::vector<Index>& basic) {
    std::vector<bool> is_basic(n, false);
    for (Index j : basic) is_basic[j] = true;
    std::vector<Index> nonbasic;
    for (Index j = 0; j < n; ++j) {
      if (!is_basic[j]) nonbasic.push_back(j);
    }
    Eigen::MatrixXd B(m, m);
    for (Index k = 0; k < m; ++k) B.col(k) = A.col(basic[k]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) return;
    // every assignment of nonbasic columns to a finite bound
    const size_t nn = nonbasic.size();
    std::vector<int> which(nn, 0);
    while (true) {
      Vector x = Vector::Zero(n);
      bool representable = true;
      for (size_t t = 0; t < nn && representable; ++t) {
        const Index j = nonbasic[t];
        const Scalar v = which[t] == 0 ? lp.col_lower[j] : lp.col_upper[j];
        if (!is_finite(v)) {
          representable = false;
        } else {
          x[j] = v;
        }
      }
      if (representable) {
        Vector rhs = b;
        for (size_t t = 0; t < nn; ++t) rhs -= A.col(nonbasic[t]) * x[nonbasic[t]];
        Vector xb = lu.solve(rhs);
        bool ok = true;
        for (Index k = 0; k < m && ok; ++k) {
          const Index j = basic[k];
          ok = xb[k] >= lp.col_lower[j] - feas_tol &&
               xb[k] <= lp.col_upper[j] + feas_tol;
          x[j] = xb[k];
        }
        if (ok) {
          const double v = lp.c.dot(x);
          if (!best || v < *best) best = v;
        }
      }
      // next bound assignment
      size_t t = 0;
      for (; t < nn; ++t) {
        if (which[t] == 0 && is_finite(lp.col_upper[nonbasic[t]]) &&
            lp.col_upper[nonbasic[t]] != lp.col_lower[nonbasic[t]]) {
          which[t] = 1;
          break;
        }
        which[t] = 0;
      }
      if (t == nn) break;
    }
  };

  // enumerate m-subsets of columns
  std::vector<Index> idx(m);
  auto rec = [&](auto&& self, Index start, Index depth) -> void {
    if (depth == m) {
      feasible_value(idx);
      return;
    }
    for (Index j = start; j < n; ++j) {
      idx[depth] = j;
      self(self, j + 1, depth + 1);
    }
  };
  if (m <= n) rec(rec, 0, 0);
  return best;
}

}  // namespace cclp::testing

#endif  // CCLP_TESTS_TEST_UTIL_HPP_
