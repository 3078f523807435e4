#pragma once

#include <map>
#include <vector>

#include "asq/poset.hpp"
#include "asq/presentation.hpp"
#include "asq/rewrite.hpp"

namespace asq {

inline Generator star(int a) { return {Alphabet::star, a}; }

// Generating relation family of the poset operad: for every ordered
// comparable pair (a, b), with m = a ^ b,
//   *_a o1 *_b - *_m o2 *_m     and     *_m o1 *_m - *_a o2 *_b.
inline std::vector<TreePoly> star_relation_family(const Poset& P) {
  std::vector<TreePoly> family;
  int n = P.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!P.comparable(a, b)) continue;
      int m = P.meet_up(a, b);
      TreePoly r1(3);
      r1.add(comp1(star(a), star(b)), 1);
      r1.add(comp2(star(m), star(m)), -1);
      family.push_back(std::move(r1));
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!P.comparable(a, b)) continue;
      int m = P.meet_up(a, b);
      TreePoly r2(3);
      r2.add(comp1(star(m), star(m)), 1);
      r2.add(comp2(star(a), star(b)), -1);
      family.push_back(std::move(r2));
    }
  return family;
}

inline Presentation relations_star(const Poset& P) {
  return make_presentation(make_alphabet(Alphabet::star, P.size()), star_relation_family(P));
}

struct RelationsClosure {
  std::vector<SyntaxTree> trees;        // the set R_a, canonically sorted
  bool all_differences_in_span = true;  // every x - y lies in the relation space
};

// R_a = { *_a o1 *_b, *_b o1 *_a, *_b o2 *_a, *_a o2 *_b : a <= b }.
inline RelationsClosure lemma_relations_closure(const Poset& P, int a) {
  std::set<SyntaxTree, TreeLess> set;
  for (int b = 1; b <= P.size(); ++b) {
    if (!P.leq(a, b)) continue;
    set.insert(comp1(star(a), star(b)));
    set.insert(comp1(star(b), star(a)));
    set.insert(comp2(star(b), star(a)));
    set.insert(comp2(star(a), star(b)));
  }
  RelationsClosure out;
  out.trees.assign(set.begin(), set.end());
  Presentation pres = relations_star(P);
  for (std::size_t i = 0; i < out.trees.size(); ++i)
    for (std::size_t j = i + 1; j < out.trees.size(); ++j) {
      TreePoly diff = TreePoly::single(out.trees[i]) - TreePoly::single(out.trees[j]);
      if (!pres.span.contains(diff)) out.all_differences_in_span = false;
    }
  return out;
}

// Termination measure for the orientation: phi(t) = (alpha, infix word) where
// alpha sums the internal-node counts of right subtrees; rewriting strictly
// increases alpha and weakly decreases the word letters pointwise.
inline int alpha_weight(const SyntaxTree& t) {
  if (t.is_leaf()) return 0;
  return alpha_weight(t.left()) + alpha_weight(t.right()) + t.right().degree();
}

inline TerminationLess alpha_infix_less(const Poset& P) {
  return [P](const SyntaxTree& s, const SyntaxTree& t) {
    if (s.arity() != t.arity()) return false;
    int as = alpha_weight(s), at = alpha_weight(t);
    if (as > at) return false;
    std::vector<int> us = infix_word(s), ut = infix_word(t);
    bool strict = as < at;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (!P.leq(ut[i], us[i])) return false;
      if (ut[i] != us[i]) strict = true;
    }
    return strict;
  };
}

// Orientation of the relation space:
//   *_a o1 *_b -> *_m o2 *_m   for comparable a, b;
//   *_a o2 *_b -> *_m o2 *_m   for strictly comparable a, b.
inline RewriteSystem orientation(const Poset& P) {
  std::vector<RewriteRule> rules;
  int n = P.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!P.comparable(a, b)) continue;
      int m = P.meet_up(a, b);
      rules.push_back({comp1(star(a), star(b)), comp2(star(m), star(m))});
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b || !P.comparable(a, b)) continue;
      int m = P.meet_up(a, b);
      rules.push_back({comp2(star(a), star(b)), comp2(star(m), star(m))});
    }
  return RewriteSystem(std::move(rules), alpha_infix_less(P));
}

namespace detail {

// Normal-form trees with m leaves and root label b, built from the recursive
// description: left child root incomparable to b, right child root equal to b
// or incomparable.
class NormalFormTable {
 public:
  NormalFormTable(const Poset& P, int n) : P_(P) {
    int ell = P.size();
    rooted_.assign(n + 1, std::vector<std::vector<SyntaxTree>>(ell + 1));
    for (int m = 2; m <= n; ++m)
      for (int b = 1; b <= ell; ++b)
        for (int k = 1; k < m; ++k) {
          std::vector<SyntaxTree> lefts = children(k, b, false);
          std::vector<SyntaxTree> rights = children(m - k, b, true);
          for (const SyntaxTree& l : lefts)
            for (const SyntaxTree& r : rights)
              rooted_[m][b].push_back(SyntaxTree::node(star(b), l, r));
        }
  }

  const std::vector<SyntaxTree>& rooted(int m, int b) const { return rooted_[m][b]; }

  std::vector<SyntaxTree> all(int n) const {
    if (n == 1) return {SyntaxTree::leaf()};
    std::vector<SyntaxTree> out;
    for (int b = 1; b <= P_.size(); ++b)
      out.insert(out.end(), rooted_[n][b].begin(), rooted_[n][b].end());
    std::sort(out.begin(), out.end(), TreeLess{});
    return out;
  }

 private:
  std::vector<SyntaxTree> children(int m, int b, bool allow_equal) const {
    if (m == 1) return {SyntaxTree::leaf()};
    std::vector<SyntaxTree> out;
    for (int c = 1; c <= P_.size(); ++c) {
      if (!(P_.incomparable(b, c) || (allow_equal && c == b))) continue;
      out.insert(out.end(), rooted_[m][c].begin(), rooted_[m][c].end());
    }
    return out;
  }

  const Poset& P_;
  std::vector<std::vector<std::vector<SyntaxTree>>> rooted_;
};

}  // namespace detail

// All normal forms of the orientation at the given arity, canonically sorted.
inline std::vector<SyntaxTree> normal_forms(const Poset& P, int n) {
  if (n < 1) fail(errc::index_out_of_range, "arity must be positive");
  return detail::NormalFormTable(P, n).all(n);
}

// |normal_forms(P, n)| without materializing the trees.
inline Integer count_normal_forms(const Poset& P, int n) {
  if (n < 1) fail(errc::index_out_of_range, "arity must be positive");
  if (n == 1) return 1;
  int ell = P.size();
  // rooted[m][b] = number of normal forms with m leaves and root label b
  std::vector<std::vector<Integer>> rooted(n + 1, std::vector<Integer>(ell + 1, 0));
  for (int m = 2; m <= n; ++m)
    for (int b = 1; b <= ell; ++b)
      for (int k = 1; k < m; ++k) {
        Integer lefts = 0, rights = 0;
        if (k == 1)
          lefts = 1;
        else
          for (int c = 1; c <= ell; ++c)
            if (P.incomparable(b, c)) lefts += rooted[k][c];
        if (m - k == 1)
          rights = 1;
        else
          for (int c = 1; c <= ell; ++c)
            if (c == b || P.incomparable(b, c)) rights += rooted[m - k][c];
        rooted[m][b] += lefts * rights;
      }
  Integer total = 0;
  for (int b = 1; b <= ell; ++b) total += rooted[n][b];
  return total;
}

// Coefficients [t^0 .. t^N] of the Hilbert series, by fixpoint iteration of
// the arity-graded series system; index k holds dim As(P)(k).
inline std::vector<Integer> hilbert_coeffs(const Poset& P, int N) {
  if (!P.is_forest()) fail(errc::not_forest, "Hilbert system needs a forest poset");
  int ell = P.size();
  auto mul_trunc = [N](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j)
        if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  std::vector<std::vector<Integer>> H(ell + 1, std::vector<Integer>(N + 1, 0));
  for (int iter = 0; iter <= N; ++iter) {
    std::vector<std::vector<Integer>> next(ell + 1, std::vector<Integer>(N + 1, 0));
    for (int a = 1; a <= ell; ++a) {
      std::vector<Integer> hbar(N + 1, 0);
      for (int b = 1; b <= ell; ++b) {
        if (!P.incomparable(a, b)) continue;
        for (int k = 0; k <= N; ++k) hbar[k] += H[b][k];
      }
      std::vector<Integer> f(N + 1, 0), g(N + 1, 0);
      if (N >= 1) f[1] = 1;
      for (int k = 0; k <= N; ++k) f[k] += hbar[k];
      g = f;
      for (int k = 0; k <= N; ++k) g[k] += H[a][k];
      next[a] = mul_trunc(f, g);
    }
    H = std::move(next);
  }
  std::vector<Integer> total(N + 1, 0);
  if (N >= 1) total[1] = 1;
  for (int a = 1; a <= ell; ++a)
    for (int k = 0; k <= N; ++k) total[k] += H[a][k];
  return total;
}

// An arity-2 combination sum lambda_a *_a is associative in the quotient iff
// its support is a chain.
inline bool associative_elements_check(const Poset& P, const std::map<int, Rational>& coeffs) {
  std::vector<int> support;
  for (const auto& [a, c] : coeffs) {
    if (a < 1 || a > P.size()) fail(errc::index_out_of_range, "coefficient label out of range");
    if (c != 0) support.push_back(a);
  }
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (P.incomparable(support[i], support[j])) return false;
  return true;
}

struct InducedMorphism {
  std::vector<int> gen_map;  // *_x of the source maps to *_{gen_map[x-1]}
  bool relations_preserved;
};

inline TreePoly map_poly(const TreePoly& p, Alphabet tag, const std::vector<int>& gen_map) {
  TreePoly out(p.arity());
  for (const auto& [t, c] : p.terms())
    out.add(relabel(t, tag, [&](int x) { return gen_map[x - 1]; }), c);
  return out;
}

// Generator map of the operad morphism induced by a poset morphism, with the
// arity-3 relation-preservation check.
inline InducedMorphism induced_morphism(const PosetMorphism& phi) {
  if (!is_morphism(phi)) fail(errc::not_a_morphism, "map does not preserve the order");
  InducedMorphism out;
  out.gen_map = phi.map;
  out.relations_preserved = true;
  Presentation target = relations_star(phi.target);
  for (const TreePoly& r : star_relation_family(phi.source)) {
    if (!target.span.contains(map_poly(r, Alphabet::star, phi.map)))
      out.relations_preserved = false;
  }
  return out;
}

}  // namespace asq
