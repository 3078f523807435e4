#pragma once

#include <algorithm>
#include <vector>

#include "asq/poset.hpp"

namespace asq {

namespace detail {

inline void subtree_size_rec(const Poset& P, int x, std::vector<int>& size) {
  size[x] = 1;
  for (int c : P.upper_covers(x)) {
    subtree_size_rec(P, c, size);
    size[x] += size[c];
  }
}

inline void standard_visit(const Poset& P, const std::vector<int>& size, int x, int& next,
                           std::vector<int>& label) {
  label[x - 1] = next++;
  std::vector<int> kids = P.upper_covers(x);
  std::sort(kids.begin(), kids.end(), [&](int a, int b) {
    if (size[a] != size[b]) return size[a] < size[b];
    return a < b;
  });
  for (int c : kids) standard_visit(P, size, c, next, label);
}

}  // namespace detail

inline std::vector<int> minimal_elements(const Poset& P) {
  std::vector<int> out;
  for (int a = 1; a <= P.size(); ++a)
    if (P.lower_covers(a).empty()) out.push_back(a);
  return out;
}

// Depth-first relabeling of the Hasse forest; within each sibling set the
// node with the biggest subtree is visited last, ties by ascending label.
inline Poset standard_labeling(const Poset& P) {
  if (!P.is_thin_forest()) fail(errc::not_thin_forest, "standard labeling needs a thin forest");
  std::vector<int> size(P.size() + 1, 0);
  for (int r : minimal_elements(P)) detail::subtree_size_rec(P, r, size);
  std::vector<int> roots = minimal_elements(P);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    if (size[a] != size[b]) return size[a] < size[b];
    return a < b;
  });
  std::vector<int> label(P.size());
  int next = 1;
  for (int r : roots) detail::standard_visit(P, size, r, next, label);
  return P.relabeled(label);
}

inline bool is_standardly_labeled(const Poset& P) { return standard_labeling(P) == P; }

namespace detail {

// Recursive form of the dual: an isolated 1 dualizes to a root over the
// dual of the rest; a rooted 1 dualizes to an isolated 1 beside it.
inline Poset thin_dual_recursive(const Poset& P) {
  int n = P.size();
  if (n == 0) return P;
  Poset rest = [&] {
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : P.cover_pairs())
      if (a != 1) covers.push_back({a - 1, b - 1});
    return Poset::from_covers(n - 1, covers);
  }();
  Poset dual_rest = thin_dual_recursive(rest);
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : dual_rest.cover_pairs()) covers.push_back({a + 1, b + 1});
  if (P.upper_covers(1).empty()) {
    for (int r : minimal_elements(dual_rest)) covers.push_back({1, r + 1});
  }
  return Poset::from_covers(n, covers);
}

}  // namespace detail

// Dual thin forest: a <= b in the dual iff a = b, or a and b are incomparable
// and a < b. Requires a standardly labeled thin forest; the direct definition
// is cross-checked against the recursive description.
inline Poset thin_dual(const Poset& P) {
  if (!P.is_thin_forest()) fail(errc::not_thin_forest, "dual needs a thin forest");
  if (!is_standardly_labeled(P))
    fail(errc::not_thin_forest, "dual needs the standard labeling");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= P.size(); ++a)
    for (int b = a + 1; b <= P.size(); ++b)
      if (P.incomparable(a, b)) pairs.push_back({a, b});
  Poset direct = Poset::from_leq_pairs(P.size(), pairs);
  if (direct != detail::thin_dual_recursive(P))
    fail(errc::invalid_poset, "dual routes disagree");
  return direct;
}

// All standardly labeled thin forest posets of the given size (2^{n-1} of
// them for n >= 1), in a deterministic order.
inline std::vector<Poset> enumerate_thin_forests(int n) {
  if (n < 0) fail(errc::index_out_of_range, "size must be nonnegative");
  if (n == 0) return {Poset::trivial(0)};
  if (n == 1) return {Poset::trivial(1)};
  std::vector<Poset> rests = enumerate_thin_forests(n - 1);
  std::vector<Poset> out;
  out.reserve(2 * rests.size());
  for (const Poset& rest : rests) {
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : rest.cover_pairs()) covers.push_back({a + 1, b + 1});
    out.push_back(Poset::from_covers(n, covers));  // isolated 1 beside rest
  }
  for (const Poset& rest : rests) {
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : rest.cover_pairs()) covers.push_back({a + 1, b + 1});
    for (int r : minimal_elements(rest)) covers.push_back({1, r + 1});
    out.push_back(Poset::from_covers(n, covers));  // 1 rooted over rest
  }
  return out;
}

}  // namespace asq
