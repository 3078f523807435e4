#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "asq/syntax_tree.hpp"

namespace asq {

struct RewriteRule {
  SyntaxTree lhs, rhs;
};

// Strict-increase comparator for a termination measure: less(s, t) holds
// when phi(s) < phi(t), with rewriting oriented towards larger values.
using TerminationLess = std::function<bool(const SyntaxTree&, const SyntaxTree&)>;

// Finite ground-tree rewrite system of bounded degree.
class RewriteSystem {
 public:
  explicit RewriteSystem(std::vector<RewriteRule> rules, TerminationLess measure = {})
      : rules_(std::move(rules)), measure_(std::move(measure)) {
    degree_ = 0;
    two_node_only_ = true;
    for (const RewriteRule& r : rules_) {
      if (r.lhs.arity() != r.rhs.arity())
        fail(errc::arity_mismatch, "rule sides have different arities");
      if (r.lhs == r.rhs) fail(errc::arity_mismatch, "rule with equal sides");
      if (r.lhs.degree() < 1) fail(errc::arity_mismatch, "rule lhs must have an internal node");
      degree_ = std::max(degree_, r.lhs.degree());
      if (r.lhs.degree() != 2 || r.lhs.arity() != 3) two_node_only_ = false;
    }
    if (two_node_only_) {
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        const SyntaxTree& l = rules_[i].lhs;
        int side = l.left().is_leaf() ? 2 : 1;
        Generator child = side == 1 ? l.left().gen() : l.right().gen();
        keyed_[{l.gen(), side, child}].push_back(i);
      }
    }
  }

  const std::vector<RewriteRule>& rules() const { return rules_; }
  int degree() const { return degree_; }
  const TerminationLess& measure() const { return measure_; }

  // Generators appearing in the rules, sorted.
  std::vector<Generator> alphabet() const {
    std::set<Generator> gens;
    std::function<void(const SyntaxTree&)> walk = [&](const SyntaxTree& t) {
      if (t.is_leaf()) return;
      gens.insert(t.gen());
      walk(t.left());
      walk(t.right());
    };
    for (const RewriteRule& r : rules_) {
      walk(r.lhs);
      walk(r.rhs);
    }
    return {gens.begin(), gens.end()};
  }

  // Rule indices applicable at the root of t, in rule order.
  std::vector<std::size_t> applicable_at(const SyntaxTree& t) const {
    std::vector<std::size_t> out;
    if (t.is_leaf()) return out;
    if (two_node_only_) {
      if (!t.left().is_leaf()) {
        auto it = keyed_.find({t.gen(), 1, t.left().gen()});
        if (it != keyed_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
      if (!t.right().is_leaf()) {
        auto it = keyed_.find({t.gen(), 2, t.right().gen()});
        if (it != keyed_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (detail::matches_middle(t, rules_[i].lhs)) out.push_back(i);
    return out;
  }

 private:
  std::vector<RewriteRule> rules_;
  TerminationLess measure_;
  int degree_;
  bool two_node_only_;
  std::map<std::tuple<Generator, int, Generator>, std::vector<std::size_t>> keyed_;
};

namespace detail {

inline void one_step_rec(const RewriteSystem& R, const SyntaxTree& whole, const SyntaxTree& here,
                         Position& pos, std::set<SyntaxTree, TreeLess>& out) {
  if (here.is_leaf()) return;
  for (std::size_t i : R.applicable_at(here))
    out.insert(replace_at(whole, pos, R.rules()[i].lhs, R.rules()[i].rhs));
  pos.push_back(1);
  one_step_rec(R, whole, here.left(), pos, out);
  pos.back() = 2;
  one_step_rec(R, whole, here.right(), pos, out);
  pos.pop_back();
}

// First redex in post order = leftmost-innermost; rules in list order.
inline std::optional<std::pair<Position, std::size_t>> first_redex(const RewriteSystem& R,
                                                                   const SyntaxTree& t,
                                                                   Position& pos) {
  if (t.is_leaf()) return std::nullopt;
  pos.push_back(1);
  if (auto hit = first_redex(R, t.left(), pos)) return hit;
  pos.back() = 2;
  if (auto hit = first_redex(R, t.right(), pos)) return hit;
  pos.pop_back();
  auto rules = R.applicable_at(t);
  if (!rules.empty()) return std::make_pair(pos, rules.front());
  return std::nullopt;
}

}  // namespace detail

// All trees reachable from t in exactly one rewrite step.
inline std::set<SyntaxTree, TreeLess> one_step(const RewriteSystem& R, const SyntaxTree& t) {
  std::set<SyntaxTree, TreeLess> out;
  Position pos;
  detail::one_step_rec(R, t, t, pos, out);
  return out;
}

inline unsigned long long default_step_budget(const SyntaxTree& t) {
  int d = t.degree();
  if (d >= 30) return ~0ull;
  unsigned long long b = 1;
  for (int i = 0; i < d; ++i) b *= 4;
  return b;
}

// Leftmost-innermost normalization with deterministic rule order. A budget
// overrun signals suspected non-termination.
inline SyntaxTree normalize(const RewriteSystem& R, SyntaxTree t,
                            unsigned long long budget = 0) {
  if (budget == 0) budget = default_step_budget(t);
  unsigned long long steps = 0;
  for (;;) {
    Position pos;
    auto hit = detail::first_redex(R, t, pos);
    if (!hit) return t;
    if (++steps > budget) fail(errc::budget_exceeded, "normalization exceeded step budget");
    const RewriteRule& r = R.rules()[hit->second];
    t = replace_at(t, hit->first, r.lhs, r.rhs);
  }
}

// Certifies that the measure strictly increases along every rewrite step out
// of every tree of degree <= max_degree over the system's alphabet. A finite
// certificate, not a proof for arbitrary systems.
inline bool check_termination_measure(const RewriteSystem& R, const TerminationLess& less,
                                      int max_degree = 4) {
  std::vector<Generator> gens = R.alphabet();
  for (int d = 1; d <= max_degree; ++d) {
    for (const SyntaxTree& s : enumerate_trees(gens, d + 1)) {
      for (const SyntaxTree& t : one_step(R, s))
        if (!less(s, t)) return false;
    }
  }
  return true;
}

struct CriticalPair {
  SyntaxTree peak;
  SyntaxTree left_result;
  SyntaxTree right_result;
  bool joinable;
  std::optional<SyntaxTree> joint;
};

// All critical pairs on peaks with at most 2*degree - 1 internal nodes;
// joinability decided by normalizing both sides.
inline std::vector<CriticalPair> critical_pairs(const RewriteSystem& R) {
  std::vector<CriticalPair> out;
  if (R.rules().empty()) return out;
  std::vector<Generator> gens = R.alphabet();
  int max_deg = 2 * R.degree() - 1;
  for (int d = 1; d <= max_deg; ++d) {
    for (const SyntaxTree& peak : enumerate_trees(gens, d + 1)) {
      std::set<SyntaxTree, TreeLess> next = one_step(R, peak);
      if (next.size() < 2) continue;
      std::vector<SyntaxTree> results(next.begin(), next.end());
      for (std::size_t i = 0; i < results.size(); ++i)
        for (std::size_t j = i + 1; j < results.size(); ++j) {
          SyntaxTree n1 = normalize(R, results[i]);
          SyntaxTree n2 = normalize(R, results[j]);
          CriticalPair cp{peak, results[i], results[j], n1 == n2, std::nullopt};
          if (cp.joinable) cp.joint = n1;
          out.push_back(std::move(cp));
        }
    }
  }
  return out;
}

struct ConfluenceResult {
  bool confluent;
  std::optional<CriticalPair> witness;  // a non-joinable pair when not confluent
};

// Diamond-lemma confluence check for a terminating system. When the system
// carries a registered termination measure, the certificate is re-checked
// first.
inline ConfluenceResult is_confluent(const RewriteSystem& R) {
  if (R.measure() && !check_termination_measure(R, R.measure()))
    fail(errc::not_terminating, "registered termination measure rejected the system");
  for (const CriticalPair& cp : critical_pairs(R))
    if (!cp.joinable) return {false, cp};
  return {true, std::nullopt};
}

}  // namespace asq
