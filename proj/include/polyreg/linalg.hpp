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

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polyreg/rational.hpp"

namespace polyreg {

/// Sparse rational vector: column index -> nonzero value.
using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);

/// Reduced row echelon form of a list of sparse rows.
struct Rref {
  std::vector<SparseVector> rows;  ///< sorted by pivot, each pivot entry 1
  std::vector<int> pivots;
};

Rref rref(const std::vector<SparseVector>& rows);

/// Basis of {x : A x = 0}, A given by rows over `ncols` unknowns. Each basis
/// vector has a 1 at one free column.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& rows, int ncols);

/// Some x with A x = b, or nullopt. A is given by columns here, since the
/// callers build it column by column.
std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, const SparseVector& b);

/// Greedy basis of the span of vectors fed in order; remembers how each
/// echelon row is written in terms of accepted vectors.
class IncrementalBasis {
 public:
  /// Returns true (and records id) when v is independent of the vectors so far.
  bool add(const SparseVector& v, int id);
  /// Coefficients (by id) writing v in the accepted vectors, or nullopt.
  std::optional<SparseVector> express(const SparseVector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    SparseVector v;       // pivot entry 1
    SparseVector combo;   // v = sum combo[id] * input[id]
  };
  std::map<int, Row> rows_;  // keyed by pivot column
};

}  // namespace polyreg
