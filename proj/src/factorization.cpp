// Copyright 2026 The cclp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cclp/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "Eigen/Dense"

namespace cclp {

std::vector<Index> dependent_positions(const EngineModel& model,
                                       const std::vector<Index>& basic,
                                       Scalar tol) {
  const Index m = model.num_rows();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
  for (Index k = 0; k < static_cast<Index>(basic.size()); ++k) {
    Vector col = Vector::Zero(m);
    model.add_column(basic[k], 1.0, col);
    B.col(k) = col;
  }
  const Scalar scale = std::max(1.0, B.cwiseAbs().maxCoeff());
  std::vector<bool> row_used(m, false);
  std::vector<Index> dependent;
  for (Index k = 0; k < m; ++k) {
    Index pivot_row = -1;
    Scalar best = tol * scale;
    for (Index i = 0; i < m; ++i) {
      if (!row_used[i] && std::abs(B(i, k)) > best) {
        best = std::abs(B(i, k));
        pivot_row = i;
      }
    }
    if (pivot_row < 0) {
      dependent.push_back(k);
      continue;
    }
    row_used[pivot_row] = true;
    const Scalar piv = B(pivot_row, k);
    for (Index i = 0; i < m; ++i) {
      if (row_used[i] || B(i, k) == 0.0) continue;
      const Scalar f = B(i, k) / piv;
      B.row(i).tail(m - k) -= f * B.row(pivot_row).tail(m - k);
    }
  }
  return dependent;
}

FactorizedBasis::FactorizedBasis(const EngineModel& model,
                                 const std::vector<Index>& basic)
    : dim_(model.num_rows()) {
  if (static_cast<Index>(basic.size()) != dim_) {
    throw std::invalid_argument("factorize: basis size != nrows");
  }
  {
    std::set<Index> unique(basic.begin(), basic.end());
    if (static_cast<Index>(unique.size()) != dim_) {
      std::vector<Index> dups;
      std::set<Index> seen;
      for (Index j : basic) {
        if (!seen.insert(j).second) dups.push_back(j);
      }
      std::string names;
      for (Index j : dups) names += " " + model.column_label(j);
      throw SingularBasisError("singular basis: duplicate columns" + names,
                               dups);
    }
  }
  if (dim_ == 0) return;
  SparseMat B = model.basis_matrix(basic);
  lu_ = std::make_unique<
      Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<Index>>>();
  lu_->isSymmetric(false);
  lu_->compute(B);
  if (lu_->info() != Eigen::Success) {
    std::vector<Index> positions = dependent_positions(model, basic);
    std::vector<Index> dependent;
    std::string names;
    for (Index p : positions) {
      dependent.push_back(basic[p]);
      names += " " + model.column_label(basic[p]);
    }
    throw SingularBasisError("singular basis: dependent columns" + names,
                             dependent);
  }
  if (dim_ > 0) {
    // deterministic pseudo-random probe for a conditioning signal
    Vector probe(dim_);
    for (Index i = 0; i < dim_; ++i) {
      probe[i] = (i % 2 == 0 ? 1.0 : -1.0) * (1.0 + 0.5 * ((i * 7919) % 13));
    }
    const Scalar denom = probe.lpNorm<Eigen::Infinity>();
    Vector sol = lu_->solve(probe);
    cond_ = sol.lpNorm<Eigen::Infinity>() / denom;
  }
}

Vector FactorizedBasis::ftran(const Eigen::Ref<const Vector>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("ftran: wrong length");
  Vector u = lu_->solve(v);
  for (const auto& [p, w] : etas_) {
    const Scalar t = u[p] / w[p];
    u -= t * w;
    u[p] = t;
  }
  return u;
}

Vector FactorizedBasis::btran(const Eigen::Ref<const Vector>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("btran: wrong length");
  Vector u = v;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    const auto& [p, w] = *it;
    u[p] = (u[p] - (w.dot(u) - w[p] * u[p])) / w[p];
  }
  return lu_->adjoint().solve(u);
}

void FactorizedBasis::update(Index slot, Vector w) {
  if (slot < 0 || slot >= dim_) {
    throw std::invalid_argument("update: slot out of range");
  }
  if (w[slot] == 0.0) {
    throw SingularBasisError("basis update with zero pivot", {});
  }
  etas_.emplace_back(slot, std::move(w));
}

}  // namespace cclp
