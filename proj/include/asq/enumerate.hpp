#pragma once

#include <vector>

#include "asq/poset.hpp"

namespace asq {

// All labeled posets on {1..n}, by brute force over strict-order bitmasks.
// Meant for exhaustive sweeps at n <= 5.
inline std::vector<Poset> enumerate_all_posets(int n) {
  if (n < 0) fail(errc::index_out_of_range, "size must be nonnegative");
  if (n == 0) return {Poset::trivial(0)};
  std::vector<std::pair<int, int>> slots;  // ordered pairs a != b
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) slots.push_back({a, b});
  int m = static_cast<int>(slots.size());
  std::vector<int> opposite(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (slots[j] == std::make_pair(slots[i].second, slots[i].first)) opposite[i] = j;

  std::vector<Poset> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if ((mask >> i & 1) && (mask >> opposite[i] & 1)) ok = false;  // antisymmetry
    if (!ok) continue;
    // strict-order matrix
    std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int a, int b) -> char& { return lt[(a - 1) * n + (b - 1)]; };
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) at(slots[i].first, slots[i].second) = 1;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b) {
        if (!at(a, b)) continue;
        for (int c = 1; c <= n; ++c)
          if (at(b, c) && !at(a, c)) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) pairs.push_back(slots[i]);
    out.push_back(Poset::from_leq_pairs(n, pairs));
  }
  return out;
}

// All labeled forest posets on {1..n}: every element covers at most one
// element, so a parent vector (the covered element, or none) determines the
// poset; acyclic vectors only.
inline std::vector<Poset> enumerate_forest_posets(int n) {
  if (n < 0) fail(errc::index_out_of_range, "size must be nonnegative");
  if (n == 0) return {Poset::trivial(0)};
  std::vector<Poset> out;
  std::vector<int> parent(n + 1, 0);  // parent[x] = the element x covers, 0 for none
  auto acyclic = [&]() {
    for (int x = 1; x <= n; ++x) {
      int steps = 0, cur = x;
      while (cur != 0 && ++steps <= n) cur = parent[cur];
      if (cur != 0) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int x) {
    if (x > n) {
      if (!acyclic()) return;
      std::vector<std::pair<int, int>> covers;
      for (int y = 1; y <= n; ++y)
        if (parent[y] != 0) covers.push_back({parent[y], y});
      out.push_back(Poset::from_covers(n, covers));
      return;
    }
    for (int p = 0; p <= n; ++p) {
      if (p == x) continue;
      parent[x] = p;
      rec(x + 1);
    }
    parent[x] = 0;
  };
  rec(1);
  return out;
}

}  // namespace asq
