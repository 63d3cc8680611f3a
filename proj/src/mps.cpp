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

#include "cclp/mps.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cclp/kernels.hpp"

namespace cclp {

namespace {

enum class Section {
  kNone,
  kObjsense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kDone,
};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

Scalar parse_value(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    Scalar v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw MpsParseError(line, "cannot parse numeric value '" + tok + "'");
  }
}

struct Builder {
  std::string name;
  ObjSense obj_sense = ObjSense::kMin;
  std::string objective_name;
  Scalar obj_offset = 0.0;

  std::vector<std::string> row_names;
  std::vector<RowSense> sense;
  std::unordered_map<std::string, Index> row_index;
  std::set<std::string> free_rows;  // non-objective N rows, entries ignored

  std::vector<std::string> col_names;
  std::unordered_map<std::string, Index> col_index;
  std::vector<Scalar> c;
  std::vector<Eigen::Triplet<Scalar>> entries;
  std::set<std::pair<Index, Index>> seen;  // duplicate coefficient guard

  std::vector<Scalar> rhs;
  std::vector<bool> has_rhs;
  std::vector<Scalar> range;
  std::vector<bool> has_range;

  std::vector<Scalar> lower, upper;
  std::vector<bool> lower_set, upper_set;

  Index col(const std::string& cname, int line, bool create) {
    auto it = col_index.find(cname);
    if (it != col_index.end()) return it->second;
    if (!create) {
      throw MpsParseError(line, "unknown column '" + cname + "'");
    }
    Index j = static_cast<Index>(col_names.size());
    col_index.emplace(cname, j);
    col_names.push_back(cname);
    c.push_back(0.0);
    lower.push_back(0.0);
    upper.push_back(kInf);
    lower_set.push_back(false);
    upper_set.push_back(false);
    return j;
  }

  Index row(const std::string& rname, int line) {
    auto it = row_index.find(rname);
    if (it == row_index.end()) {
      throw MpsParseError(line, "unknown row '" + rname + "'");
    }
    return it->second;
  }
};

void handle_rows_line(Builder& b, const std::vector<std::string>& f,
                      int line) {
  if (f.size() != 2) throw MpsParseError(line, "ROWS entry needs type + name");
  const std::string type = upper(f[0]);
  const std::string& rname = f[1];
  if (b.row_index.count(rname) || b.free_rows.count(rname) ||
      rname == b.objective_name) {
    throw MpsParseError(line, "duplicate row name '" + rname + "'");
  }
  if (type == "N") {
    if (b.objective_name.empty()) {
      b.objective_name = rname;
    } else {
      b.free_rows.insert(rname);  // extra free rows are dropped
    }
    return;
  }
  RowSense s;
  if (type == "L") {
    s = RowSense::kLe;
  } else if (type == "G") {
    s = RowSense::kGe;
  } else if (type == "E") {
    s = RowSense::kEq;
  } else {
    throw MpsParseError(line, "unknown row type '" + f[0] + "'");
  }
  b.row_index.emplace(rname, static_cast<Index>(b.row_names.size()));
  b.row_names.push_back(rname);
  b.sense.push_back(s);
  b.rhs.push_back(0.0);
  b.has_rhs.push_back(false);
  b.range.push_back(0.0);
  b.has_range.push_back(false);
}

void handle_columns_pair(Builder& b, const std::string& cname,
                         const std::string& rname, const std::string& val,
                         int line) {
  Index j = b.col(cname, line, /*create=*/true);
  Scalar v = parse_value(val, line);
  if (rname == b.objective_name) {
    b.c[j] += v;
    return;
  }
  if (b.free_rows.count(rname)) return;
  Index i = b.row(rname, line);
  if (!b.seen.insert({i, j}).second) {
    throw MpsParseError(line, "duplicate coefficient for column '" + cname +
                                  "' in row '" + rname + "'");
  }
  if (v != 0.0) b.entries.emplace_back(i, j, v);
}

void handle_rhs_pair(Builder& b, const std::string& rname,
                     const std::string& val, int line) {
  Scalar v = parse_value(val, line);
  if (rname == b.objective_name) {
    b.obj_offset = -v;  // standard MPS convention
    return;
  }
  if (b.free_rows.count(rname)) return;
  Index i = b.row(rname, line);
  b.rhs[i] = v;
  b.has_rhs[i] = true;
}

void handle_ranges_pair(Builder& b, const std::string& rname,
                        const std::string& val, int line) {
  if (rname == b.objective_name || b.free_rows.count(rname)) {
    throw MpsParseError(line, "RANGES on free row '" + rname + "'");
  }
  Index i = b.row(rname, line);
  b.range[i] = parse_value(val, line);
  b.has_range[i] = true;
}

void handle_bounds_line(Builder& b, const std::vector<std::string>& f,
                        int line) {
  if (f.size() < 3) {
    throw MpsParseError(line, "BOUNDS entry needs type, set name, column");
  }
  const std::string type = upper(f[0]);
  const std::string& cname = f[2];
  auto it = b.col_index.find(cname);
  if (it == b.col_index.end()) {
    throw MpsParseError(line, "bound on unknown column '" + cname + "'");
  }
  Index j = it->second;
  const bool needs_value =
      type == "LO" || type == "UP" || type == "FX";
  if (needs_value && f.size() < 4) {
    throw MpsParseError(line, "bound type " + type + " needs a value");
  }
  Scalar v = needs_value ? parse_value(f[3], line) : 0.0;
  if (type == "LO") {
    b.lower[j] = v;
    b.lower_set[j] = true;
  } else if (type == "UP") {
    b.upper[j] = v;
    b.upper_set[j] = true;
    // Classic MPS quirk: a negative upper bound on a column whose lower
    // bound was never stated frees the lower bound.
    if (v < 0.0 && !b.lower_set[j]) b.lower[j] = -kInf;
  } else if (type == "FX") {
    b.lower[j] = v;
    b.upper[j] = v;
    b.lower_set[j] = true;
    b.upper_set[j] = true;
  } else if (type == "FR") {
    b.lower[j] = -kInf;
    b.upper[j] = kInf;
    b.lower_set[j] = true;
  } else if (type == "MI") {
    b.lower[j] = -kInf;
    b.lower_set[j] = true;
  } else if (type == "PL") {
    b.upper[j] = kInf;
  } else {
    throw MpsParseError(line, "unsupported bound type '" + f[0] + "'");
  }
}

LinearProgram finish(Builder& b, int line) {
  const Index m = static_cast<Index>(b.row_names.size());
  const Index n = static_cast<Index>(b.col_names.size());
  LinearProgram lp;
  lp.name = b.name;
  lp.objective_name =
      b.objective_name.empty() ? std::string("COST") : b.objective_name;
  lp.obj_sense = b.obj_sense;
  lp.obj_offset = b.obj_offset;
  lp.row_names = std::move(b.row_names);
  lp.col_names = std::move(b.col_names);
  lp.sense = std::move(b.sense);
  lp.c = Eigen::Map<const Vector>(b.c.data(), n);
  lp.A = make_sparse(m, n, b.entries);
  lp.row_lower = Vector::Constant(m, -kInf);
  lp.row_upper = Vector::Constant(m, kInf);
  for (Index i = 0; i < m; ++i) {
    const Scalar bi = b.rhs[i];
    switch (lp.sense[i]) {
      case RowSense::kLe:
        lp.row_upper[i] = bi;
        if (b.has_range[i]) lp.row_lower[i] = bi - std::abs(b.range[i]);
        break;
      case RowSense::kGe:
        lp.row_lower[i] = bi;
        if (b.has_range[i]) lp.row_upper[i] = bi + std::abs(b.range[i]);
        break;
      case RowSense::kEq:
        if (b.has_range[i]) {
          if (b.range[i] >= 0.0) {
            lp.row_lower[i] = bi;
            lp.row_upper[i] = bi + b.range[i];
          } else {
            lp.row_lower[i] = bi + b.range[i];
            lp.row_upper[i] = bi;
          }
        } else {
          lp.row_lower[i] = bi;
          lp.row_upper[i] = bi;
        }
        break;
    }
  }
  lp.col_lower = Eigen::Map<const Vector>(b.lower.data(), n);
  lp.col_upper = Eigen::Map<const Vector>(b.upper.data(), n);
  for (Index j = 0; j < n; ++j) {
    if (lp.col_lower[j] > lp.col_upper[j]) {
      throw MpsParseError(line, "crossed bounds on column '" +
                                    lp.col_names[j] + "'");
    }
  }
  lp.validate();
  return lp;
}

}  // namespace

LinearProgram parse_mps(std::istream& in) {
  Builder b;
  Section section = Section::kNone;
  std::string raw;
  int line = 0;
  bool saw_endata = false;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '*') continue;
    const bool is_header = !std::isspace(static_cast<unsigned char>(raw[0]));
    std::vector<std::string> f = split_fields(raw);
    if (f.empty()) continue;
    if (is_header) {
      const std::string head = upper(f[0]);
      if (head == "NAME") {
        if (f.size() > 1) b.name = f[1];
      } else if (head == "OBJSENSE") {
        section = Section::kObjsense;
        if (f.size() > 1) {
          const std::string v = upper(f[1]);
          b.obj_sense = (v == "MAX" || v == "MAXIMIZE") ? ObjSense::kMax
                                                        : ObjSense::kMin;
          section = Section::kNone;
        }
      } else if (head == "ROWS") {
        section = Section::kRows;
      } else if (head == "COLUMNS") {
        section = Section::kColumns;
      } else if (head == "RHS") {
        section = Section::kRhs;
      } else if (head == "RANGES") {
        section = Section::kRanges;
      } else if (head == "BOUNDS") {
        section = Section::kBounds;
      } else if (head == "ENDATA") {
        saw_endata = true;
        section = Section::kDone;
        break;
      } else {
        throw MpsParseError(line, "unknown section '" + f[0] + "'");
      }
      continue;
    }
    switch (section) {
      case Section::kObjsense: {
        const std::string v = upper(f[0]);
        b.obj_sense = (v == "MAX" || v == "MAXIMIZE") ? ObjSense::kMax
                                                      : ObjSense::kMin;
        section = Section::kNone;
        break;
      }
      case Section::kRows:
        handle_rows_line(b, f, line);
        break;
      case Section::kColumns: {
        if (f.size() >= 3 && upper(f[1]) == "'MARKER'") {
          throw MpsParseError(line, "integer markers are not supported");
        }
        if (f.size() != 3 && f.size() != 5) {
          throw MpsParseError(line, "COLUMNS entry needs 3 or 5 fields");
        }
        handle_columns_pair(b, f[0], f[1], f[2], line);
        if (f.size() == 5) handle_columns_pair(b, f[0], f[3], f[4], line);
        break;
      }
      case Section::kRhs: {
        // First field is the RHS set name.
        if (f.size() != 3 && f.size() != 5) {
          throw MpsParseError(line, "RHS entry needs 3 or 5 fields");
        }
        handle_rhs_pair(b, f[1], f[2], line);
        if (f.size() == 5) handle_rhs_pair(b, f[3], f[4], line);
        break;
      }
      case Section::kRanges: {
        if (f.size() != 3 && f.size() != 5) {
          throw MpsParseError(line, "RANGES entry needs 3 or 5 fields");
        }
        handle_ranges_pair(b, f[1], f[2], line);
        if (f.size() == 5) handle_ranges_pair(b, f[3], f[4], line);
        break;
      }
      case Section::kBounds:
        handle_bounds_line(b, f, line);
        break;
      case Section::kNone:
      case Section::kDone:
        throw MpsParseError(line, "data outside of any section");
    }
  }
  if (!saw_endata && section == Section::kNone && b.objective_name.empty() &&
      b.col_names.empty() && b.row_names.empty()) {
    throw MpsParseError(line, "empty MPS input");
  }
  return finish(b, line);
}

LinearProgram parse_mps(const std::string& text) {
  std::istringstream in(text);
  return parse_mps(in);
}

LinearProgram read_mps_file(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw MpsParseError(0, "cannot open '" + path + "'");
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  probe.close();
  if (magic[0] == 0x1f && magic[1] == 0x8b) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (gz == nullptr) throw MpsParseError(0, "cannot open '" + path + "'");
    std::string text;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(gz, buf, sizeof(buf))) > 0) text.append(buf, got);
    const bool bad = got < 0;
    gzclose(gz);
    if (bad) throw MpsParseError(0, "gzip read failure on '" + path + "'");
    return parse_mps(text);
  }
  std::ifstream in(path);
  return parse_mps(in);
}

namespace {

std::string fmt(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string row_name_of(const LinearProgram& lp, Index i) {
  if (!lp.row_names.empty()) return lp.row_names[i];
  return "R" + std::to_string(i);
}

std::string col_name_of(const LinearProgram& lp, Index j) {
  if (!lp.col_names.empty()) return lp.col_names[j];
  return "C" + std::to_string(j);
}

}  // namespace

void write_mps(const LinearProgram& lp, std::ostream& out) {
  const Index m = lp.num_rows();
  const Index n = lp.num_cols();
  out << "NAME " << (lp.name.empty() ? "LP" : lp.name) << "\n";
  if (lp.obj_sense == ObjSense::kMax) out << "OBJSENSE\n MAX\n";
  out << "ROWS\n";
  out << " N " << lp.objective_name << "\n";
  for (Index i = 0; i < m; ++i) {
    out << " " << static_cast<char>(lp.sense[i]) << " " << row_name_of(lp, i)
        << "\n";
  }
  out << "COLUMNS\n";
  for (Index j = 0; j < n; ++j) {
    const std::string cname = col_name_of(lp, j);
    if (lp.c[j] != 0.0) {
      out << " " << cname << " " << lp.objective_name << " " << fmt(lp.c[j])
          << "\n";
    }
    for (SparseMat::InnerIterator it(lp.A, j); it; ++it) {
      out << " " << cname << " " << row_name_of(lp, it.row()) << " "
          << fmt(it.value()) << "\n";
    }
  }
  out << "RHS\n";
  if (lp.obj_offset != 0.0) {
    out << " RHS " << lp.objective_name << " " << fmt(-lp.obj_offset) << "\n";
  }
  for (Index i = 0; i < m; ++i) {
    Scalar b;
    switch (lp.sense[i]) {
      case RowSense::kLe:
        b = lp.row_upper[i];
        break;
      case RowSense::kGe:
        b = lp.row_lower[i];
        break;
      default:
        b = lp.row_lower[i];
        break;
    }
    if (b != 0.0 && is_finite(b)) {
      out << " RHS " << row_name_of(lp, i) << " " << fmt(b) << "\n";
    }
  }
  bool any_range = false;
  for (Index i = 0; i < m; ++i) {
    const bool ranged = is_finite(lp.row_lower[i]) &&
                        is_finite(lp.row_upper[i]) &&
                        lp.row_lower[i] != lp.row_upper[i];
    if (!ranged) continue;
    if (!any_range) {
      out << "RANGES\n";
      any_range = true;
    }
    out << " RNG " << row_name_of(lp, i) << " "
        << fmt(lp.row_upper[i] - lp.row_lower[i]) << "\n";
  }
  bool any_bound = false;
  auto bound_header = [&]() {
    if (!any_bound) {
      out << "BOUNDS\n";
      any_bound = true;
    }
  };
  for (Index j = 0; j < n; ++j) {
    const std::string cname = col_name_of(lp, j);
    const Scalar l = lp.col_lower[j], u = lp.col_upper[j];
    if (l == 0.0 && u == kInf) continue;
    bound_header();
    if (l == u) {
      out << " FX BND " << cname << " " << fmt(l) << "\n";
      continue;
    }
    if (l == -kInf && u == kInf) {
      out << " FR BND " << cname << "\n";
      continue;
    }
    if (l == -kInf) {
      out << " MI BND " << cname << "\n";
    } else if (l != 0.0) {
      out << " LO BND " << cname << " " << fmt(l) << "\n";
    }
    if (u != kInf) {
      // Guard the negative-upper-bound quirk: state LO explicitly first.
      if (l == 0.0 && u < 0.0) out << " LO BND " << cname << " 0\n";
      out << " UP BND " << cname << " " << fmt(u) << "\n";
    }
  }
  out << "ENDATA\n";
}

std::string write_mps(const LinearProgram& lp) {
  std::ostringstream out;
  write_mps(lp, out);
  return out.str();
}

}  // namespace cclp
