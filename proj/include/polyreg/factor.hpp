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

#include <utility>
#include <vector>

#include "polyreg/polynomial.hpp"

namespace polyreg {

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

/// Squarefree decomposition of a nonzero polynomial: monic pairwise coprime
/// squarefree parts with their multiplicities (Yun's algorithm).
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

struct Factorization {
  Rational unit;                                    ///< leading coefficient
  std::vector<std::pair<Polynomial, int>> factors;  ///< monic irreducible, sorted
};

/// Complete factorization over Q: squarefree decomposition followed by
/// Zassenhaus (modular factorization, Hensel lifting, recombination).
Factorization factor_over_q(const Polynomial& f);

/// True iff f has degree >= 1 and is irreducible over Q.
bool is_irreducible(const Polynomial& f);

}  // namespace polyreg
