#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "asq/errors.hpp"

namespace asq {

// Finite partial order on {1..n}, stored as a dense comparability matrix.
// Values are immutable after construction.
class Poset {
 public:
  Poset() : n_(0) {}

  // covers are (lower, upper) pairs; the order is their reflexive-transitive
  // closure. Rejects out-of-range ids and cycles.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    Poset p = raw(n);
    for (auto [a, b] : covers) {
      p.check_range(a);
      p.check_range(b);
      if (a == b) fail(errc::invalid_poset, "cover with equal endpoints");
      p.set(a, b);
    }
    p.close_transitively();
    p.validate();
    return p;
  }

  // pairs list every non-reflexive a <= b relation (closure is still taken,
  // so listing a generating set is accepted too).
  static Poset from_leq_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    return from_covers(n, pairs);
  }

  static Poset trivial(int n) { return from_covers(n, {}); }

  static Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int a = 1; a < n; ++a) covers.push_back({a, a + 1});
    return from_covers(n, covers);
  }

  int size() const { return n_; }

  bool leq(int a, int b) const {
    check_range(a);
    check_range(b);
    return leq_[idx(a, b)];
  }

  bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  bool incomparable(int a, int b) const { return !comparable(a, b); }

  // The partial min of a comparable pair.
  int meet_up(int a, int b) const {
    if (leq(a, b)) return a;
    if (leq(b, a)) return b;
    fail(errc::incomparable_elements,
         std::to_string(a) + " and " + std::to_string(b) + " are incomparable");
  }

  long long intervals_count() const {
    long long c = 0;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        if (leq_[idx(a, b)]) ++c;
    return c;
  }

  // b covers a when a < b with nothing strictly between.
  bool covers(int a, int b) const {
    if (!strictly_less(a, b)) return false;
    for (int c = 1; c <= n_; ++c)
      if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
  }

  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> cs;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        if (covers(a, b)) cs.push_back({a, b});
    return cs;
  }

  // Lower covers of b, i.e. elements it covers.
  std::vector<int> lower_covers(int b) const {
    std::vector<int> out;
    for (int a = 1; a <= n_; ++a)
      if (covers(a, b)) out.push_back(a);
    return out;
  }

  std::vector<int> upper_covers(int a) const {
    std::vector<int> out;
    for (int b = 1; b <= n_; ++b)
      if (covers(a, b)) out.push_back(b);
    return out;
  }

  // Hasse diagram is a forest rooted at minimal elements: every element
  // covers at most one element.
  bool is_forest() const {
    for (int b = 1; b <= n_; ++b)
      if (lower_covers(b).size() > 1) return false;
    return true;
  }

  // Forest avoiding two disjoint 2-chains.
  bool is_thin_forest() const {
    if (!is_forest()) return false;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b) {
        if (!strictly_less(a, b)) continue;
        for (int c = 1; c <= n_; ++c)
          for (int d = 1; d <= n_; ++d) {
            if (!strictly_less(c, d)) continue;
            if (incomparable(a, c) && incomparable(a, d) && incomparable(b, c) &&
                incomparable(b, d))
              return false;
          }
      }
    return true;
  }

  bool is_trivial() const {
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        if (a != b && leq_[idx(a, b)]) return false;
    return true;
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }
  bool operator!=(const Poset& o) const { return !(*this == o); }
  bool operator<(const Poset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return leq_ < o.leq_;
  }

  // Canonical text form, e.g. "3:1<2,1<3" from cover pairs.
  std::string to_key() const {
    std::string s = std::to_string(n_) + ":";
    bool first = true;
    for (auto [a, b] : cover_pairs()) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(a) + "<" + std::to_string(b);
    }
    return s;
  }

  Poset relabeled(const std::vector<int>& new_label) const {
    Poset p = raw(n_);
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        if (leq_[idx(a, b)]) p.set(new_label[a - 1], new_label[b - 1]);
    p.validate();
    return p;
  }

 private:
  static Poset raw(int n) {
    if (n < 0) fail(errc::invalid_poset, "negative size");
    Poset p;
    p.n_ = n;
    p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 1; a <= n; ++a) p.leq_[p.idx(a, a)] = 1;
    return p;
  }

  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
  }

  void check_range(int a) const {
    if (a < 1 || a > n_) fail(errc::invalid_poset, "element " + std::to_string(a) + " out of range");
  }

  void set(int a, int b) { leq_[idx(a, b)] = 1; }

  void close_transitively() {
    for (int k = 1; k <= n_; ++k)
      for (int a = 1; a <= n_; ++a) {
        if (!leq_[idx(a, k)]) continue;
        for (int b = 1; b <= n_; ++b)
          if (leq_[idx(k, b)]) leq_[idx(a, b)] = 1;
      }
  }

  void validate() const {
    for (int a = 1; a <= n_; ++a) {
      if (!leq_[idx(a, a)]) fail(errc::invalid_poset, "not reflexive");
      for (int b = 1; b <= n_; ++b) {
        if (a != b && leq_[idx(a, b)] && leq_[idx(b, a)])
          fail(errc::invalid_poset, "cycle through " + std::to_string(a) + " and " + std::to_string(b));
        for (int c = 1; c <= n_; ++c)
          if (leq_[idx(a, b)] && leq_[idx(b, c)] && !leq_[idx(a, c)])
            fail(errc::invalid_poset, "not transitive");
      }
    }
  }

  int n_;
  std::vector<char> leq_;
};

struct PosetMorphism {
  Poset source;
  Poset target;
  std::vector<int> map;  // map[a-1] in 1..target.size()

  int operator()(int a) const { return map[a - 1]; }
};

inline bool is_morphism(const PosetMorphism& phi) {
  if (static_cast<int>(phi.map.size()) != phi.source.size()) return false;
  for (int v : phi.map)
    if (v < 1 || v > phi.target.size()) return false;
  for (int a = 1; a <= phi.source.size(); ++a)
    for (int b = 1; b <= phi.source.size(); ++b)
      if (phi.source.leq(a, b) && !phi.target.leq(phi(a), phi(b))) return false;
  return true;
}

// phi(a ^ b) == phi(a) ^ phi(b) over all comparable pairs of the source.
inline bool preserves_min(const PosetMorphism& phi) {
  for (int a = 1; a <= phi.source.size(); ++a)
    for (int b = 1; b <= phi.source.size(); ++b) {
      if (!phi.source.comparable(a, b)) continue;
      if (!phi.target.comparable(phi(a), phi(b))) return false;
      if (phi(phi.source.meet_up(a, b)) != phi.target.meet_up(phi(a), phi(b))) return false;
    }
  return true;
}

inline PosetMorphism compose(const PosetMorphism& psi, const PosetMorphism& phi) {
  PosetMorphism out;
  out.source = phi.source;
  out.target = psi.target;
  out.map.resize(phi.map.size());
  for (std::size_t i = 0; i < phi.map.size(); ++i) out.map[i] = psi.map[phi.map[i] - 1];
  return out;
}

}  // namespace asq
