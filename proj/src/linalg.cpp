// Copyright 2026 The polyreg Authors
//
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

#include "polyreg/linalg.hpp"

#include <algorithm>

namespace polyreg {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    Rational& slot = y[i];
    slot += a * v;
    if (slot == 0) y.erase(i);
  }
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  SparseVector r;
  if (a == 0) return r;
  for (const auto& [i, v] : x) r.emplace(i, v * a);
  return r;
}

Rref rref(const std::vector<SparseVector>& input) {
  std::map<int, SparseVector> by_pivot;
  for (SparseVector row : input) {
    // Reduce against existing pivots.
    for (auto it = by_pivot.begin(); it != by_pivot.end() && !row.empty(); ++it) {
      auto hit = row.find(it->first);
      if (hit != row.end()) {
        const Rational c = hit->second;
        axpy(row, -c, it->second);
      }
    }
    if (row.empty()) continue;
    const int p = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [i, v] : row) v *= inv;
    for (auto& [q, other] : by_pivot) {
      auto hit = other.find(p);
      if (hit != other.end()) {
        const Rational c = hit->second;
        axpy(other, -c, row);
      }
    }
    by_pivot.emplace(p, std::move(row));
  }
  Rref out;
  for (auto& [p, row] : by_pivot) {
    out.pivots.push_back(p);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& rows, int ncols) {
  const Rref r = rref(rows);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<SparseVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SparseVector v;
    v[f] = 1;
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      auto hit = r.rows[k].find(f);
      if (hit != r.rows[k].end()) v[r.pivots[k]] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, const SparseVector& b) {
  IncrementalBasis basis;
  for (std::size_t j = 0; j < columns.size(); ++j) basis.add(columns[j], static_cast<int>(j));
  return basis.express(b);
}

bool IncrementalBasis::add(const SparseVector& v0, int id) {
  SparseVector v = v0;
  SparseVector combo;
  combo[id] = 1;
  for (const auto& [p, row] : rows_) {
    auto hit = v.find(p);
    if (hit == v.end()) continue;
    const Rational c = hit->second;
    axpy(v, -c, row.v);
    axpy(combo, -c, row.combo);
  }
  if (v.empty()) return false;
  const int p = v.begin()->first;
  const Rational inv = 1 / v.begin()->second;
  for (auto& [i, x] : v) x *= inv;
  for (auto& [i, x] : combo) x *= inv;
  // Keep the echelon rows fully reduced so `express` can work in one pass.
  for (auto& [q, row] : rows_) {
    auto hit = row.v.find(p);
    if (hit == row.v.end()) continue;
    const Rational c = hit->second;
    axpy(row.v, -c, v);
    axpy(row.combo, -c, combo);
  }
  rows_.emplace(p, Row{std::move(v), std::move(combo)});
  return true;
}

std::optional<SparseVector> IncrementalBasis::express(const SparseVector& v0) const {
  SparseVector v = v0;
  SparseVector out;
  for (const auto& [p, row] : rows_) {
    auto hit = v.find(p);
    if (hit == v.end()) continue;
    const Rational c = hit->second;
    axpy(v, -c, row.v);
    axpy(out, c, row.combo);
  }
  if (!v.empty()) return std::nullopt;
  return out;
}

}  // namespace polyreg
