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

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "polyreg/symbols.hpp"

namespace polyreg {

// Formal terms  sign * D^I phi_k(args), where I is an ordered tuple of
// coordinate indices, args lists coordinates (0 stands for the value 0) and
// phi_k is alternating in its arguments.

namespace {

using Key = std::tuple<std::vector<int>, int, std::vector<int>>;
using FormalSum = std::map<Key, long>;

int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

// Sorts the arguments (0 first) with the alternation sign; 0 when two
// arguments coincide.
int canonical_args(std::vector<int>& args) {
  const int sign = permutation_sign(args);
  std::sort(args.begin(), args.end());
  if (std::adjacent_find(args.begin(), args.end()) != args.end()) return 0;
  return sign;
}

void accumulate(FormalSum& acc, Key key, long c) {
  if (c == 0) return;
  const int s = canonical_args(std::get<2>(key));
  if (s == 0) return;
  long& slot = acc[key];
  slot += s * c;
  if (slot == 0) acc.erase(key);
}

void ordered_tuples(int m, std::vector<int>& cur, std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int i = 1; i <= m; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    cur.push_back(i);
    ordered_tuples(m, cur, used, out);
    cur.pop_back();
    used[static_cast<std::size_t>(i)] = false;
  }
}

FormalSum build(int n) {
  const int m = n - 1;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  ordered_tuples(m, cur, used, tuples);
  FormalSum phi;
  for (const auto& I : tuples) {
    std::vector<int> rest;
    for (int i = 1; i <= m; ++i)
      if (std::find(I.begin(), I.end(), i) == I.end()) rest.push_back(i);
    std::vector<int> joined = I;
    joined.insert(joined.end(), rest.begin(), rest.end());
    const long sign = (I.size() % 2 == 0 ? 1 : -1) * permutation_sign(joined);
    accumulate(phi, Key{I, static_cast<int>(I.size()), rest}, sign);
  }
  return phi;
}

FormalSum restrict_at_zero(const FormalSum& phi, int j) {
  FormalSum out;
  for (const auto& [key, c] : phi) {
    const auto& [I, k, args] = key;
    auto pos = std::find(I.begin(), I.end(), j);
    if (pos != I.end()) {
      if (pos + 1 != I.end()) continue;  // j in I but not last
      // D^{I'} d phi_k, with d phi_k(args) = phi_{k-1}(0, args)
      std::vector<int> shorter(I.begin(), I.end() - 1);
      std::vector<int> a{0};
      a.insert(a.end(), args.begin(), args.end());
      accumulate(out, Key{shorter, k - 1, a}, c);
    } else {
      std::vector<int> a = args;
      std::replace(a.begin(), a.end(), j, 0);
      accumulate(out, Key{I, k, a}, c);
    }
  }
  return out;
}

FormalSum transpose(const FormalSum& phi, int a, int b) {
  auto swap_index = [&](int i) { return i == a ? b : (i == b ? a : i); };
  FormalSum out;
  for (const auto& [key, c] : phi) {
    auto [I, k, args] = key;
    std::transform(I.begin(), I.end(), I.begin(), swap_index);
    std::transform(args.begin(), args.end(), args.begin(), swap_index);
    accumulate(out, Key{I, k, args}, c);
  }
  return out;
}

}  // namespace

std::size_t lemma419_term_count(int n) {
  std::size_t total = 0, falling = 1;
  const int m = n - 1;
  for (int k = 0; k <= m; ++k) {
    total += falling;
    falling *= static_cast<std::size_t>(m - k);
  }
  return total;
}

Verdict lemma419_check(int n) {
  Verdict v;
  v.name = "alternating sum cancels at t_j = 0";
  if (n < 2 || n > 7) {
    v.details.push_back("n must lie in 2..7");
    return v;
  }
  const FormalSum phi = build(n);
  v.claimed = "0";
  v.computed = std::to_string(phi.size()) + " terms";
  v.details.push_back("term count " + std::to_string(lemma419_term_count(n)));
  v.pass = true;
  for (int j = 1; j <= n - 1; ++j) {
    Verdict c;
    c.name = "restriction t_" + std::to_string(j) + " = 0";
    const FormalSum r = restrict_at_zero(phi, j);
    c.pass = r.empty();
    c.claimed = "0";
    c.computed = std::to_string(r.size()) + " surviving terms";
    v.children.push_back(std::move(c));
  }
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n - 1; ++b) {
      FormalSum s = transpose(phi, a, b);
      for (const auto& [key, c] : phi) accumulate(s, key, c);
      Verdict c;
      c.name = "alternation under (" + std::to_string(a) + " " + std::to_string(b) + ")";
      c.pass = s.empty();
      c.claimed = "0";
      c.computed = std::to_string(s.size()) + " surviving terms";
      v.children.push_back(std::move(c));
    }
  v.absorb_children();
  v.mode = "formal";
  return v;
}

}  // namespace polyreg
