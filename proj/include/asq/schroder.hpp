#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "asq/poset.hpp"
#include "asq/rational.hpp"
#include "asq/syntax_tree.hpp"

namespace asq {

// Planar rooted tree with internal nodes labeled in the poset and at least
// two children per internal node. Immutable, structure-sharing.
class SchroderTree {
 public:
  SchroderTree() = default;  // leaf

  static SchroderTree leaf() { return SchroderTree(); }

  static SchroderTree node(int label, std::vector<SchroderTree> children) {
    if (children.size() < 2)
      fail(errc::arity_mismatch, "internal nodes need at least two children");
    int lv = 0, in = 1;
    for (const SchroderTree& c : children) {
      lv += c.leaves();
      in += c.internal_nodes();
    }
    SchroderTree t;
    t.n_ = std::make_shared<const Node>(Node{label, std::move(children), lv, in});
    return t;
  }

  bool is_leaf() const { return !n_; }
  int label() const { return n_->label; }
  const std::vector<SchroderTree>& children() const { return n_->children; }
  int leaves() const { return n_ ? n_->leaves : 1; }
  int internal_nodes() const { return n_ ? n_->internal : 0; }

  std::strong_ordering compare(const SchroderTree& o) const {
    if (n_ == o.n_) return std::strong_ordering::equal;
    if (!n_) return std::strong_ordering::less;
    if (!o.n_) return std::strong_ordering::greater;
    if (auto c = n_->label <=> o.n_->label; c != 0) return c;
    std::size_t k = std::min(n_->children.size(), o.n_->children.size());
    for (std::size_t i = 0; i < k; ++i)
      if (auto c = n_->children[i].compare(o.n_->children[i]); c != 0) return c;
    return n_->children.size() <=> o.n_->children.size();
  }

  bool operator==(const SchroderTree& o) const { return compare(o) == 0; }
  bool operator!=(const SchroderTree& o) const { return compare(o) != 0; }
  bool operator<(const SchroderTree& o) const { return compare(o) < 0; }

  std::string to_string() const {
    if (is_leaf()) return "_";
    std::string s = "(" + std::to_string(label());
    for (const SchroderTree& c : children()) s += " " + c.to_string();
    return s + ")";
  }

 private:
  struct Node {
    int label;
    std::vector<SchroderTree> children;
    int leaves;
    int internal;
  };
  std::shared_ptr<const Node> n_;
};

struct SchroderLess {
  bool operator()(const SchroderTree& a, const SchroderTree& b) const { return a < b; }
};

inline SchroderTree schroder_corolla(int label, int arity) {
  return SchroderTree::node(label, std::vector<SchroderTree>(arity, SchroderTree::leaf()));
}

// Every internal parent-child pair carries incomparable labels.
inline bool is_alternating(const Poset& P, const SchroderTree& t) {
  if (t.is_leaf()) return true;
  for (const SchroderTree& c : t.children()) {
    if (!c.is_leaf() && P.comparable(t.label(), c.label())) return false;
    if (!is_alternating(P, c)) return false;
  }
  return true;
}

namespace detail {

class AlternatingTable {
 public:
  AlternatingTable(const Poset& P, int n) : P_(P), rooted_(n + 1) {
    for (int m = 2; m <= n; ++m) {
      rooted_[m].assign(P.size() + 1, {});
      for (int a = 1; a <= P.size(); ++a) {
        std::vector<SchroderTree> acc;
        build_children(m, a, acc, rooted_[m][a]);
      }
    }
  }

  const std::vector<SchroderTree>& rooted(int m, int a) const { return rooted_[m][a]; }

  std::vector<SchroderTree> all(int n) const {
    if (n == 1) return {SchroderTree::leaf()};
    std::vector<SchroderTree> out;
    for (int a = 1; a <= P_.size(); ++a)
      out.insert(out.end(), rooted_[n][a].begin(), rooted_[n][a].end());
    std::sort(out.begin(), out.end(), SchroderLess{});
    return out;
  }

 private:
  void build_children(int leaves_left, int a, std::vector<SchroderTree>& acc,
                      std::vector<SchroderTree>& out) {
    if (leaves_left == 0) {
      if (acc.size() >= 2) out.push_back(SchroderTree::node(a, acc));
      return;
    }
    for (int p = 1; p <= leaves_left; ++p) {
      if (p == 1) {
        acc.push_back(SchroderTree::leaf());
        build_children(leaves_left - 1, a, acc, out);
        acc.pop_back();
      } else {
        for (int b = 1; b <= P_.size(); ++b) {
          if (!P_.incomparable(a, b)) continue;
          for (const SchroderTree& sub : rooted_[p][b]) {
            acc.push_back(sub);
            build_children(leaves_left - p, a, acc, out);
            acc.pop_back();
          }
        }
      }
    }
  }

  const Poset& P_;
  std::vector<std::vector<std::vector<SchroderTree>>> rooted_;
};

}  // namespace detail

// All alternating Schroder trees with n leaves, canonically sorted.
inline std::vector<SchroderTree> enumerate_alternating(const Poset& P, int n) {
  if (n < 1) fail(errc::index_out_of_range, "leaf count must be positive");
  return detail::AlternatingTable(P, n).all(n);
}

namespace detail {

// Contract the child at position ci into t: the pair collapses to one node
// labeled by the meet, child's children spliced in place.
inline SchroderTree schroder_contract(const Poset& P, const SchroderTree& t, std::size_t ci) {
  const SchroderTree& child = t.children()[ci];
  std::vector<SchroderTree> kids;
  kids.reserve(t.children().size() + child.children().size() - 1);
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i == ci)
      kids.insert(kids.end(), child.children().begin(), child.children().end());
    else
      kids.push_back(t.children()[i]);
  }
  return SchroderTree::node(P.meet_up(t.label(), child.label()), std::move(kids));
}

inline void schroder_one_step_rec(const Poset& P, const SchroderTree& whole,
                                  const SchroderTree& here, std::vector<int>& path,
                                  std::set<SchroderTree, SchroderLess>& out) {
  if (here.is_leaf()) return;
  for (std::size_t i = 0; i < here.children().size(); ++i) {
    const SchroderTree& c = here.children()[i];
    if (!c.is_leaf() && P.comparable(here.label(), c.label())) {
      // rebuild the whole tree with the contraction applied at path + i
      std::vector<int> at = path;
      at.push_back(static_cast<int>(i));
      std::function<SchroderTree(const SchroderTree&, std::size_t)> apply =
          [&](const SchroderTree& node, std::size_t depth) -> SchroderTree {
        if (depth + 1 == at.size()) return schroder_contract(P, node, at[depth]);
        std::vector<SchroderTree> kids = node.children();
        kids[at[depth]] = apply(kids[at[depth]], depth + 1);
        return SchroderTree::node(node.label(), std::move(kids));
      };
      out.insert(apply(whole, 0));
    }
  }
  for (std::size_t i = 0; i < here.children().size(); ++i) {
    path.push_back(static_cast<int>(i));
    schroder_one_step_rec(P, whole, here.children()[i], path, out);
    path.pop_back();
  }
}

}  // namespace detail

// All single contractions of comparable parent-child pairs.
inline std::set<SchroderTree, SchroderLess> schroder_one_step(const Poset& P,
                                                              const SchroderTree& t) {
  std::set<SchroderTree, SchroderLess> out;
  std::vector<int> path;
  detail::schroder_one_step_rec(P, t, t, path, out);
  return out;
}

// Leftmost-innermost contraction to the normal form; terminates since every
// step removes an internal node.
inline SchroderTree schroder_normalize(const Poset& P, SchroderTree t) {
  std::function<std::optional<SchroderTree>(const SchroderTree&)> step =
      [&](const SchroderTree& node) -> std::optional<SchroderTree> {
    if (node.is_leaf()) return std::nullopt;
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      if (auto sub = step(node.children()[i])) {
        std::vector<SchroderTree> kids = node.children();
        kids[i] = *sub;
        return SchroderTree::node(node.label(), std::move(kids));
      }
    }
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const SchroderTree& c = node.children()[i];
      if (!c.is_leaf() && P.comparable(node.label(), c.label()))
        return detail::schroder_contract(P, node, i);
    }
    return std::nullopt;
  };
  while (auto next = step(t)) t = *next;
  return t;
}

struct SchroderCriticalPair {
  SchroderTree peak, left_result, right_result;
  bool joinable;
  std::optional<SchroderTree> joint;
};

namespace detail {

// Q-Schroder trees with at most max_internal internal nodes and node arities
// at most max_children, for the bounded critical-peak sweep.
inline std::vector<SchroderTree> bounded_schroder_trees(const Poset& P, int max_internal,
                                                        int max_children) {
  std::vector<SchroderTree> frontier = {SchroderTree::leaf()};
  std::vector<std::vector<SchroderTree>> by_internal(max_internal + 1);
  by_internal[0] = frontier;
  // grow by number of internal nodes
  for (int in = 1; in <= max_internal; ++in) {
    std::set<SchroderTree, SchroderLess> acc;
    // a tree with `in` internal nodes: root labeled, children trees whose
    // internal counts sum to in - 1
    std::function<void(int, int, int, std::vector<SchroderTree>&)> rec =
        [&](int label, int feed, int slots_left, std::vector<SchroderTree>& kids) {
          if (static_cast<int>(kids.size()) >= 2 && feed == 0) {
            acc.insert(SchroderTree::node(label, kids));
            if (slots_left == 0) return;
          }
          if (slots_left == 0) return;
          for (int ci = 0; ci <= feed; ++ci) {
            for (const SchroderTree& c :
                 ci == 0 ? std::vector<SchroderTree>{SchroderTree::leaf()} : by_internal[ci]) {
              kids.push_back(c);
              rec(label, feed - ci, slots_left - 1, kids);
              kids.pop_back();
            }
          }
        };
    for (int label = 1; label <= P.size(); ++label) {
      std::vector<SchroderTree> kids;
      rec(label, in - 1, max_children, kids);
    }
    by_internal[in].assign(acc.begin(), acc.end());
  }
  std::vector<SchroderTree> out;
  for (int in = 1; in <= max_internal; ++in)
    out.insert(out.end(), by_internal[in].begin(), by_internal[in].end());
  return out;
}

}  // namespace detail

// Bounded critical-pair sweep for the contraction rule: peaks with at most
// three internal nodes (degree-2 rule), node arities capped. Joinability is
// decided by normalizing both sides.
inline std::vector<SchroderCriticalPair> schroder_critical_pairs(const Poset& P,
                                                                 int max_children = 4) {
  std::vector<SchroderCriticalPair> out;
  for (const SchroderTree& peak : detail::bounded_schroder_trees(P, 3, max_children)) {
    std::set<SchroderTree, SchroderLess> next = schroder_one_step(P, peak);
    if (next.size() < 2) continue;
    std::vector<SchroderTree> res(next.begin(), next.end());
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = i + 1; j < res.size(); ++j) {
        SchroderTree n1 = schroder_normalize(P, res[i]);
        SchroderTree n2 = schroder_normalize(P, res[j]);
        SchroderCriticalPair cp{peak, res[i], res[j], n1 == n2, std::nullopt};
        if (cp.joinable) cp.joint = n1;
        out.push_back(std::move(cp));
      }
  }
  return out;
}

struct SchroderConfluence {
  bool confluent;
  std::optional<SchroderCriticalPair> witness;
};

inline SchroderConfluence schroder_confluent(const Poset& P, int max_children = 4) {
  for (const SchroderCriticalPair& cp : schroder_critical_pairs(P, max_children))
    if (!cp.joinable) return {false, cp};
  return {true, std::nullopt};
}

inline SchroderTree schroder_graft(const SchroderTree& s, int i, const SchroderTree& t) {
  if (i < 1 || i > s.leaves()) fail(errc::index_out_of_range, "leaf index " + std::to_string(i));
  if (s.is_leaf()) return t;
  std::vector<SchroderTree> kids = s.children();
  int seen = 0;
  for (SchroderTree& c : kids) {
    if (i <= seen + c.leaves()) {
      c = schroder_graft(c, i - seen, t);
      return SchroderTree::node(s.label(), std::move(kids));
    }
    seen += c.leaves();
  }
  fail(errc::index_out_of_range, "leaf index walk failed");
}

// Partial composition of the realization: graft, then normalize. Confluence
// of the contraction rule needs a forest poset.
inline SchroderTree compose(const Poset& P, const SchroderTree& s, int i, const SchroderTree& t) {
  if (!P.is_forest()) fail(errc::not_forest, "composition needs a forest poset");
  return schroder_normalize(P, schroder_graft(s, i, t));
}

// Collapse maximal right-comb runs of equal labels into corollas.
inline SchroderTree pbw_to_schroder(const Poset& P, const SyntaxTree& t) {
  if (t.is_leaf()) return SchroderTree::leaf();
  int a = t.gen().label;
  std::vector<SchroderTree> kids;
  SyntaxTree cur = t;
  for (;;) {
    const SyntaxTree& l = cur.left();
    if (!l.is_leaf() && !P.incomparable(a, l.gen().label))
      fail(errc::not_a_normal_form, "left child label comparable to parent");
    kids.push_back(pbw_to_schroder(P, l));
    const SyntaxTree& r = cur.right();
    if (!r.is_leaf() && r.gen().label == a && r.gen() == cur.gen()) {
      cur = r;
      continue;
    }
    if (!r.is_leaf() && !P.incomparable(a, r.gen().label))
      fail(errc::not_a_normal_form, "right child label comparable to parent");
    kids.push_back(pbw_to_schroder(P, r));
    break;
  }
  return SchroderTree::node(a, std::move(kids));
}

// Inverse: expand each corolla into a right comb of equal labels.
inline SyntaxTree schroder_to_pbw(const Poset& P, const SchroderTree& t) {
  if (t.is_leaf()) return SyntaxTree::leaf();
  int a = t.label();
  for (const SchroderTree& c : t.children())
    if (!c.is_leaf() && P.comparable(a, c.label()))
      fail(errc::not_a_normal_form, "tree is not alternating");
  SyntaxTree acc = schroder_to_pbw(P, t.children().back());
  for (std::size_t i = t.children().size() - 1; i-- > 0;)
    acc = SyntaxTree::node({Alphabet::star, a}, schroder_to_pbw(P, t.children()[i]), acc);
  return acc;
}

// Product of the free one-generator algebra of the realization: the normal
// form of the binary a-corolla with the operands as children.
inline SchroderTree free_algebra_star(const Poset& P, int a, const SchroderTree& s,
                                      const SchroderTree& t) {
  if (!P.is_forest()) fail(errc::not_forest, "the free algebra needs a forest poset");
  return schroder_normalize(P, SchroderTree::node(a, {s, t}));
}

// ---- antichain algebra ----------------------------------------------------

// Reduced monomials are antichains; reduction keeps the minimal elements of
// the support.
inline std::vector<int> antichain_reduce(const Poset& P, std::vector<int> monomial) {
  std::sort(monomial.begin(), monomial.end());
  monomial.erase(std::unique(monomial.begin(), monomial.end()), monomial.end());
  std::vector<int> out;
  for (int a : monomial) {
    bool minimal = true;
    for (int b : monomial)
      if (b != a && P.leq(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

inline std::vector<int> antichain_star(const Poset& P, int a, std::vector<int> m1,
                                       const std::vector<int>& m2) {
  m1.push_back(a);
  m1.insert(m1.end(), m2.begin(), m2.end());
  return antichain_reduce(P, m1);
}

// ---- finite algebras given by structure constants --------------------------

// product[a-1][i][j] is the coefficient vector of e_i *_a e_j.
struct AlgebraTable {
  int dim = 0;
  std::vector<std::vector<std::vector<std::vector<Rational>>>> product;

  std::vector<Rational> mul(int a, const std::vector<Rational>& x,
                            const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        const std::vector<Rational>& e = product[a - 1][i][j];
        for (int k = 0; k < dim; ++k) out[k] += x[i] * y[j] * e[k];
      }
    }
    return out;
  }

  std::vector<Rational> basis_vec(int i) const {
    std::vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    return v;
  }
};

// The defining relations hold on all basis triples:
// (x *_a y) *_b z = x *_a (y *_b z) = (x *_c y) *_a z = x *_c (y *_a z)
// whenever a <= b and a <= c.
inline bool check_q_associative(const Poset& P, const AlgebraTable& alg) {
  int n = P.size(), d = alg.dim;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!P.leq(a, b)) continue;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            auto x = alg.basis_vec(i), y = alg.basis_vec(j), z = alg.basis_vec(k);
            auto lhs = alg.mul(b, alg.mul(a, x, y), z);
            if (lhs != alg.mul(a, x, alg.mul(b, y, z))) return false;
            if (lhs != alg.mul(a, alg.mul(b, x, y), z)) return false;
            if (lhs != alg.mul(b, x, alg.mul(a, y, z))) return false;
          }
    }
  return true;
}

struct UnitsReport {
  std::vector<std::vector<int>> unit_sets;  // per basis element, sorted
  bool filters_ok = true;
  bool disjoint_ok = true;
};

// E(e_i) = { a : e_i is an a-unit }, with the order-filter and disjointness
// checks of the unit structure.
inline UnitsReport unit_sets(const Poset& P, const AlgebraTable& alg) {
  if (!check_q_associative(P, alg))
    fail(errc::not_q_associative, "structure constants violate the defining relations");
  UnitsReport rep;
  rep.unit_sets.resize(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    for (int a = 1; a <= P.size(); ++a) {
      bool unit = true;
      for (int j = 0; j < alg.dim && unit; ++j) {
        auto ej = alg.basis_vec(j);
        if (alg.mul(a, alg.basis_vec(i), ej) != ej) unit = false;
        if (alg.mul(a, ej, alg.basis_vec(i)) != ej) unit = false;
      }
      if (unit) rep.unit_sets[i].push_back(a);
    }
  }
  for (int i = 0; i < alg.dim; ++i) {
    for (int a : rep.unit_sets[i])
      for (int b = 1; b <= P.size(); ++b)
        if (P.leq(a, b) &&
            !std::binary_search(rep.unit_sets[i].begin(), rep.unit_sets[i].end(), b))
          rep.filters_ok = false;
    for (int j = i + 1; j < alg.dim; ++j)
      for (int a : rep.unit_sets[i])
        if (std::binary_search(rep.unit_sets[j].begin(), rep.unit_sets[j].end(), a))
          rep.disjoint_ok = false;
  }
  return rep;
}

// All antichains of P (the empty one included), sorted.
inline std::vector<std::vector<int>> antichains(const Poset& P) {
  std::vector<std::vector<int>> out;
  int n = P.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> set;
    for (int a = 1; a <= n; ++a)
      if (mask & (1u << (a - 1))) set.push_back(a);
    bool anti = true;
    for (std::size_t i = 0; i < set.size() && anti; ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (P.comparable(set[i], set[j])) anti = false;
    if (anti) out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Structure constants of the antichain algebra on the antichain basis.
inline std::pair<AlgebraTable, std::vector<std::vector<int>>> antichain_algebra(const Poset& P) {
  std::vector<std::vector<int>> basis = antichains(P);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  AlgebraTable alg;
  alg.dim = static_cast<int>(basis.size());
  alg.product.assign(
      P.size(), std::vector<std::vector<std::vector<Rational>>>(
                    alg.dim, std::vector<std::vector<Rational>>(
                                 alg.dim, std::vector<Rational>(alg.dim, Rational(0)))));
  for (int a = 1; a <= P.size(); ++a)
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) {
        std::vector<int> prod = antichain_star(P, a, basis[i], basis[j]);
        alg.product[a - 1][i][j][index.at(prod)] = 1;
      }
  return {std::move(alg), std::move(basis)};
}

}  // namespace asq
