#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "asq/as_operad.hpp"
#include "asq/presentation.hpp"

namespace asq {

struct IdealComponent {
  int arity;
  std::vector<SyntaxTree> ambient_basis;  // canonical enumeration order
  std::vector<TreePoly> span_basis;       // reduced (triangular) basis
};

namespace detail {

// Disjoint-set forest over tree indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);  // keep the smaller index as the root
    parent_[a] = b;
    --count_;
  }

  std::size_t classes() const { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

// Contexts (u, i, r, v1, v2, v3) with total arity n, applied to a callback.
template <typename F>
void for_each_ideal_generator(const Presentation& pres, int n, F&& emit) {
  std::vector<std::vector<SyntaxTree>> trees(n + 1);
  for (int m = 1; m <= n; ++m) trees[m] = enumerate_trees(pres.alphabet, m);
  for (int m = 1; m - 1 + 3 <= n; ++m) {
    int k = n - m + 1;  // arity of the grafted relation instance
    for (const SyntaxTree& u : trees[m])
      for (int i = 1; i <= m; ++i)
        for (int a1 = 1; a1 + 2 <= k; ++a1)
          for (int a2 = 1; a1 + a2 + 1 <= k; ++a2) {
            int a3 = k - a1 - a2;
            for (const SyntaxTree& v1 : trees[a1])
              for (const SyntaxTree& v2 : trees[a2])
                for (const SyntaxTree& v3 : trees[a3])
                  for (const TreePoly& r : pres.relations) emit(u, i, r, v1, v2, v3);
          }
  }
}

}  // namespace detail

// Arity-n component of the operad ideal generated by the relations: the span
// of u o_i (r with v1, v2, v3 grafted on its leaves) over all contexts.
inline IdealComponent ideal_component(const Presentation& pres, int n) {
  if (n < 3) fail(errc::index_out_of_range, "ideal components start at arity 3");
  IdealComponent out;
  out.arity = n;
  out.ambient_basis = enumerate_trees(pres.alphabet, n);
  Echelon span;
  detail::for_each_ideal_generator(
      pres, n,
      [&](const SyntaxTree& u, int i, const TreePoly& r, const SyntaxTree& v1,
          const SyntaxTree& v2, const SyntaxTree& v3) {
        TreePoly elem(n);
        for (const auto& [t, c] : r.terms())
          elem.add(graft(u, i, graft_leaves(t, {v1, v2, v3})), c);
        span.insert(elem);
      });
  out.span_basis = span.basis();
  return out;
}

inline std::size_t quotient_dim_gaussian(const Presentation& pres, int n) {
  if (n <= 2) return n == 1 ? 1 : pres.alphabet.size();
  IdealComponent ideal = ideal_component(pres, n);
  return ideal.ambient_basis.size() - ideal.span_basis.size();
}

namespace detail {

inline std::size_t tree_index(const std::vector<SyntaxTree>& sorted, const SyntaxTree& t) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), t, TreeLess{});
  return static_cast<std::size_t>(it - sorted.begin());
}

// Classes of arity-n trees under in-context applications of binomial
// relations, with the union-find partition.
struct BinomialClasses {
  std::vector<SyntaxTree> trees;      // canonical order
  std::vector<std::size_t> class_of;  // per tree index
  std::vector<SyntaxTree> reps;       // smallest tree per class; ascending

  std::size_t classes() const { return reps.size(); }

  std::size_t class_of_tree(const SyntaxTree& t) const {
    return class_of[tree_index(trees, t)];
  }
};

inline BinomialClasses binomial_classes(const Presentation& pres, int n) {
  if (!pres.all_binomial()) fail(errc::arity_mismatch, "relations are not binomial");
  BinomialClasses out;
  out.trees = enumerate_trees(pres.alphabet, n);
  std::vector<RewriteRule> rules;
  for (const TreePoly& r : pres.relations) {
    auto it = r.terms().begin();
    rules.push_back({it->first, std::next(it)->first});
  }
  RewriteSystem sys(std::move(rules));
  UnionFind uf(out.trees.size());
  for (std::size_t i = 0; i < out.trees.size(); ++i)
    for (const SyntaxTree& t : one_step(sys, out.trees[i])) uf.join(i, tree_index(out.trees, t));
  out.class_of.resize(out.trees.size());
  std::vector<long long> root_to_class(out.trees.size(), -1);
  for (std::size_t i = 0; i < out.trees.size(); ++i) {
    std::size_t root = uf.find(i);
    if (root_to_class[root] < 0) {
      root_to_class[root] = static_cast<long long>(out.reps.size());
      out.reps.push_back(out.trees[root]);  // the root is the smallest index of its class
    }
    out.class_of[i] = static_cast<std::size_t>(root_to_class[root]);
  }
  return out;
}

}  // namespace detail

inline std::size_t quotient_dim_unionfind(const Presentation& pres, int n) {
  if (n <= 2) return n == 1 ? 1 : pres.alphabet.size();
  return detail::binomial_classes(pres, n).classes();
}

// Dimension of the quotient operad component: union-find over tree classes
// for all-binomial relation bases, exact Gaussian rank otherwise.
inline std::size_t quotient_dim(const Presentation& pres, int n) {
  if (n <= 2) return n == 1 ? 1 : pres.alphabet.size();
  if (pres.all_binomial()) return quotient_dim_unionfind(pres, n);
  return quotient_dim_gaussian(pres, n);
}

inline bool member_of_ideal(const TreePoly& x, const IdealComponent& ideal) {
  Echelon span;
  for (const TreePoly& r : ideal.span_basis) span.insert(r);
  return span.contains(x);
}

inline bool member_of_ideal(const TreePoly& x, const Presentation& pres) {
  if (x.arity() < 3) fail(errc::arity_mismatch, "membership starts at arity 3");
  if (x.is_zero()) return true;
  if (x.arity() == 3) return pres.span.contains(x);
  if (pres.all_binomial()) {
    // Equivalent trees fall in one union-find class; reduce each class to its
    // representative and check cancellation.
    detail::BinomialClasses cls = detail::binomial_classes(pres, x.arity());
    std::vector<Rational> acc(cls.classes(), Rational(0));
    for (const auto& [t, c] : x.terms()) acc[cls.class_of_tree(t)] += c;
    for (const Rational& c : acc)
      if (c != 0) return false;
    return true;
  }
  return member_of_ideal(x, ideal_component(pres, x.arity()));
}

// dim As(P)(n): normal-form count when the orientation is convergent
// (forest posets), quotient oracle otherwise.
inline Integer dimension(const Poset& P, int n) {
  if (P.is_forest()) return count_normal_forms(P, n);
  return Integer(static_cast<unsigned long>(quotient_dim(relations_star(P), n)));
}

struct BasicityWitness {
  int source_arity;  // m: the non-injective map goes As(m) -> As(m+k-1)
  int right_arity;   // k
  int slot;          // i
  SyntaxTree x1, x2; // distinct classes with equal image
  SyntaxTree y;      // the fixed right factor
};

struct BasicityReport {
  bool basic;
  int max_arity;
  std::optional<BasicityWitness> witness;
};

// Bounded basicity certificate: checks injectivity of every right-composition
// map by a quotient basis element, for all arities m + k - 1 <= max_arity.
inline BasicityReport is_basic(const Poset& P, int max_arity = 4) {
  if (max_arity < 3) fail(errc::index_out_of_range, "max_arity must be at least 3");
  Presentation pres = relations_star(P);
  std::vector<detail::BinomialClasses> cls(max_arity + 1);
  for (int m = 2; m <= max_arity; ++m) cls[m] = detail::binomial_classes(pres, m);
  for (int m = 2; m <= max_arity; ++m)
    for (int k = 2; m + k - 1 <= max_arity; ++k) {
      const auto& target = cls[m + k - 1];
      for (const SyntaxTree& y : cls[k].reps)
        for (int i = 1; i <= m; ++i) {
          std::vector<std::size_t> image(cls[m].reps.size());
          for (std::size_t xi = 0; xi < cls[m].reps.size(); ++xi)
            image[xi] = target.class_of_tree(graft(cls[m].reps[xi], i, y));
          for (std::size_t a = 0; a < image.size(); ++a)
            for (std::size_t b = a + 1; b < image.size(); ++b)
              if (image[a] == image[b])
                return {false, max_arity,
                        BasicityWitness{m, k, i, cls[m].reps[a], cls[m].reps[b], y}};
        }
    }
  return {true, max_arity, std::nullopt};
}

}  // namespace asq
