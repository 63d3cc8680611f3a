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

#include "cclp/basis.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cclp/kernels.hpp"

namespace cclp {

EngineModel::EngineModel(const LinearProgram& std_lp) : lp_(&std_lp) {
  if (!std_lp.all_rows_equality()) {
    throw std::invalid_argument("EngineModel needs an equality-form LP");
  }
  m_ = std_lp.num_rows();
  n_ = std_lp.num_cols();
}

Scalar EngineModel::column_dot(Index j, const Vector& v) const {
  if (j >= n_) return v[j - n_];
  Scalar acc = 0.0;
  for (SparseMat::InnerIterator it(lp_->A, j); it; ++it) {
    acc += it.value() * v[it.row()];
  }
  return acc;
}

void EngineModel::add_column(Index j, Scalar mult, Vector& out) const {
  if (j >= n_) {
    out[j - n_] += mult;
    return;
  }
  for (SparseMat::InnerIterator it(lp_->A, j); it; ++it) {
    out[it.row()] += mult * it.value();
  }
}

Scalar EngineModel::column_norm(Index j) const {
  if (j >= n_) return 1.0;
  Scalar acc = 0.0;
  for (SparseMat::InnerIterator it(lp_->A, j); it; ++it) {
    acc += it.value() * it.value();
  }
  return std::sqrt(acc);
}

SparseMat EngineModel::basis_matrix(const std::vector<Index>& basic) const {
  std::vector<Eigen::Triplet<Scalar>> t;
  for (Index k = 0; k < static_cast<Index>(basic.size()); ++k) {
    const Index j = basic[k];
    if (j >= n_) {
      t.emplace_back(j - n_, k, 1.0);
    } else {
      for (SparseMat::InnerIterator it(lp_->A, j); it; ++it) {
        t.emplace_back(static_cast<Index>(it.row()), k, it.value());
      }
    }
  }
  return make_sparse(m_, static_cast<Index>(basic.size()), t);
}

std::string EngineModel::column_label(Index j) const {
  if (j >= n_) {
    const Index i = j - n_;
    return lp_->row_names.empty() ? "R" + std::to_string(i)
                                  : lp_->row_names[i];
  }
  return lp_->col_names.empty() ? "C" + std::to_string(j) : lp_->col_names[j];
}

Index EngineModel::column_by_label(const std::string& label) const {
  for (Index j = 0; j < n_; ++j) {
    if (column_label(j) == label) return j;
  }
  for (Index i = 0; i < m_; ++i) {
    if (column_label(n_ + i) == label) return n_ + i;
  }
  return -1;
}

ColStatus default_status(const EngineModel& model, Index j) {
  const Scalar l = model.lower(j);
  const Scalar u = model.upper(j);
  if (l == u) return ColStatus::kFixed;
  if (is_finite(l)) return ColStatus::kAtLower;
  if (is_finite(u)) return ColStatus::kAtUpper;
  return ColStatus::kFreeAtZero;
}

void Basis::validate(const EngineModel& model) const {
  const Index m = model.num_rows();
  if (static_cast<Index>(basic.size()) != m) {
    throw std::invalid_argument("basis: need exactly nrows basic columns");
  }
  if (static_cast<Index>(status.size()) != model.num_cols()) {
    throw std::invalid_argument("basis: status vector has wrong length");
  }
  std::vector<bool> seen(model.num_cols(), false);
  for (Index j : basic) {
    if (j < 0 || j >= model.num_cols()) {
      throw std::invalid_argument("basis: column index out of range");
    }
    if (seen[j]) {
      throw std::invalid_argument("basis: duplicate basic column " +
                                  model.column_label(j));
    }
    seen[j] = true;
    if (status[j] != ColStatus::kBasic) {
      throw std::invalid_argument("basis: basic column lacks basic status");
    }
  }
  for (Index j = 0; j < model.num_cols(); ++j) {
    if (seen[j]) continue;
    switch (status[j]) {
      case ColStatus::kBasic:
        throw std::invalid_argument("basis: stray basic status on " +
                                    model.column_label(j));
      case ColStatus::kAtLower:
        if (!is_finite(model.lower(j))) {
          throw std::invalid_argument("basis: at-lower without lower bound");
        }
        break;
      case ColStatus::kAtUpper:
        if (!is_finite(model.upper(j))) {
          throw std::invalid_argument("basis: at-upper without upper bound");
        }
        break;
      case ColStatus::kFixed:
        if (model.lower(j) != model.upper(j)) {
          throw std::invalid_argument("basis: fixed status on ranged column");
        }
        break;
      case ColStatus::kFreeAtZero:
        break;
    }
  }
}

Scalar Basis::nonbasic_value(const EngineModel& model, Index j) const {
  switch (status[j]) {
    case ColStatus::kAtLower:
    case ColStatus::kFixed:
      return model.lower(j);
    case ColStatus::kAtUpper:
      return model.upper(j);
    case ColStatus::kFreeAtZero:
      return 0.0;
    case ColStatus::kBasic:
      break;
  }
  throw std::logic_error("nonbasic_value on a basic column");
}

Basis slack_basis(const EngineModel& model) {
  Basis b;
  b.status.resize(model.num_cols());
  for (Index j = 0; j < model.num_structural(); ++j) {
    b.status[j] = default_status(model, j);
  }
  for (Index i = 0; i < model.num_rows(); ++i) {
    const Index j = model.num_structural() + i;
    b.basic.push_back(j);
    b.status[j] = ColStatus::kBasic;
  }
  return b;
}

void write_basis(const EngineModel& model, const Basis& basis,
                 std::ostream& out) {
  out << "* basis\n";
  for (Index j : basis.basic) {
    out << "B " << (model.is_logical(j) ? 'R' : 'C') << ' '
        << model.column_label(j) << "\n";
  }
  for (Index j = 0; j < model.num_cols(); ++j) {
    if (basis.status[j] == ColStatus::kAtUpper) {
      out << "U " << (model.is_logical(j) ? 'R' : 'C') << ' '
          << model.column_label(j) << "\n";
    }
  }
}

Basis read_basis(const EngineModel& model, std::istream& in) {
  Basis b;
  b.status.resize(model.num_cols());
  for (Index j = 0; j < model.num_cols(); ++j) {
    b.status[j] = default_status(model, j);
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    std::istringstream fields(line);
    std::string tag, kind, label;
    fields >> tag >> kind >> label;
    if (tag.empty()) continue;
    if ((tag != "B" && tag != "U") || (kind != "C" && kind != "R") ||
        label.empty()) {
      throw std::invalid_argument("basis file: malformed line '" + line + "'");
    }
    Index j = model.column_by_label(label);
    if (j < 0 || (kind == "R") != model.is_logical(j)) {
      throw std::invalid_argument("basis file: unknown column '" + label +
                                  "'");
    }
    if (tag == "B") {
      b.basic.push_back(j);
      b.status[j] = ColStatus::kBasic;
    } else {
      b.status[j] = ColStatus::kAtUpper;
    }
  }
  b.validate(model);
  return b;
}

}  // namespace cclp
