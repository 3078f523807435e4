#pragma once

#include <map>
#include <string>
#include <vector>

#include "asq/matrix.hpp"
#include "asq/rational.hpp"
#include "asq/syntax_tree.hpp"

namespace asq {

// Rational linear combination of arity-homogeneous syntax trees.
// Zero coefficients are never stored.
class TreePoly {
 public:
  explicit TreePoly(int arity) : arity_(arity) {}

  static TreePoly single(const SyntaxTree& t, Rational c = Rational(1)) {
    TreePoly p(t.arity());
    p.add(t, c);
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  const std::map<SyntaxTree, Rational, TreeLess>& terms() const { return terms_; }

  Rational coeff(const SyntaxTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const SyntaxTree& t, const Rational& c) {
    if (t.arity() != arity_) fail(errc::arity_mismatch, "mixed arities in polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TreePoly& operator+=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }

  TreePoly& operator-=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }

  TreePoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
  }

  friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
  friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
  friend TreePoly operator*(const Rational& c, TreePoly p) { return p *= c; }

  bool operator==(const TreePoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  // Smallest tree of the support in the canonical order.
  const SyntaxTree& leading_tree() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  // Binomial difference of two trees with coefficients +1 / -1.
  bool is_binomial_difference() const {
    if (terms_.size() != 2) return false;
    auto it = terms_.begin();
    const Rational& c1 = it->second;
    const Rational& c2 = std::next(it)->second;
    return (c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      if (c > 0 && !first) s += " + ";
      if (c < 0) s += first ? "-" : " - ";
      Rational a = abs(c);
      if (a != 1) s += a.get_str() + "*";
      s += to_sexpr(t);
      first = false;
    }
    return s;
  }

 private:
  int arity_;
  std::map<SyntaxTree, Rational, TreeLess> terms_;
};

// Triangular span of tree polynomials, keyed by leading tree (the smallest
// tree of the support). Rows have unit leading coefficient; leads are
// pairwise distinct, so reduce() decides membership and rank() is exact.
class Echelon {
 public:
  // Remainder of p modulo the span.
  TreePoly reduce(TreePoly p) const {
    TreePoly out(p.arity());
    while (!p.is_zero()) {
      SyntaxTree t = p.leading_tree();
      Rational c = p.leading_coeff();
      auto it = rows_.find(t);
      if (it == rows_.end()) {
        out.add(t, c);
        p.add(t, -c);
      } else {
        TreePoly sub = it->second;
        sub *= c;
        p -= sub;
      }
    }
    return out;
  }

  // Inserts p's residue; returns true when the rank grew.
  bool insert(const TreePoly& p) {
    TreePoly r = reduce(p);
    if (r.is_zero()) return false;
    r *= 1 / r.leading_coeff();
    rows_.emplace(r.leading_tree(), std::move(r));
    return true;
  }

  bool contains(const TreePoly& p) const { return reduce(p).is_zero(); }

  std::size_t rank() const { return rows_.size(); }

  std::vector<TreePoly> basis() const {
    std::vector<TreePoly> out;
    out.reserve(rows_.size());
    for (const auto& [lead, row] : rows_) out.push_back(row);
    return out;
  }

  // Fully inter-reduced form; unique per span, so canonical bases compare
  // equal iff the spans are equal.
  Echelon canonicalized() const {
    Echelon c = *this;
    for (auto it = c.rows_.rbegin(); it != c.rows_.rend(); ++it) {
      TreePoly& r = it->second;
      std::vector<std::pair<SyntaxTree, Rational>> hits;
      for (const auto& [t, coef] : r.terms()) {
        if (!(t == it->first) && c.rows_.count(t)) hits.push_back({t, coef});
      }
      for (const auto& [t, coef] : hits) {
        TreePoly sub = c.rows_.at(t);
        sub *= coef;
        r -= sub;
      }
    }
    return c;
  }

  friend bool spans_equal(const Echelon& a, const Echelon& b) {
    if (a.rank() != b.rank()) return false;
    return a.canonicalized().rows_ == b.canonicalized().rows_;
  }

 private:
  std::map<SyntaxTree, TreePoly, TreeLess> rows_;
};

inline Echelon make_span(const std::vector<TreePoly>& family) {
  Echelon e;
  for (const TreePoly& p : family) e.insert(p);
  return e;
}

// Sign of an arity-3 tree under the Koszul pairing: +1 for x o1 y,
// -1 for x o2 y.
inline int koszul_sign(const SyntaxTree& t) {
  if (t.degree() != 2 || t.arity() != 3) fail(errc::arity_mismatch, "expected an arity-3 tree");
  return t.left().is_leaf() ? -1 : 1;
}

// Bilinear extension of <x o_i y, x' o_i' y'> = +-1 on equal trees.
inline Rational scalar_product(const TreePoly& u, const TreePoly& v) {
  if (u.arity() != 3 || v.arity() != 3) fail(errc::arity_mismatch, "scalar product needs arity 3");
  Rational acc(0);
  for (const auto& [t, c] : u.terms()) {
    Rational d = v.coeff(t);
    if (d != 0) acc += c * d * koszul_sign(t);
  }
  return acc;
}

// Basis of the annihilator of span(space) inside the arity-3 component of
// the free operad over the alphabet.
inline std::vector<TreePoly> annihilator(const std::vector<TreePoly>& space,
                                         const std::vector<Generator>& alphabet) {
  std::vector<SyntaxTree> ambient = enumerate_trees(alphabet, 3);
  std::map<SyntaxTree, std::size_t, TreeLess> col;
  for (std::size_t j = 0; j < ambient.size(); ++j) col.emplace(ambient[j], j);

  RatMatrix m(space.size(), ambient.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (const auto& [t, c] : space[i].terms()) {
      auto it = col.find(t);
      if (it == col.end()) fail(errc::arity_mismatch, "tree outside the ambient alphabet");
      m.at(i, it->second) = c * koszul_sign(t);
    }
  }
  std::vector<TreePoly> out;
  for (const auto& x : m.nullspace()) {
    TreePoly p(3);
    for (std::size_t j = 0; j < ambient.size(); ++j) p.add(ambient[j], x[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace asq
