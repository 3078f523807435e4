#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "asq/errors.hpp"

namespace asq {

// Generator alphabets in play. All generators are binary.
enum class Alphabet : unsigned char { star, bar, barB, barA, triangle };

inline char alphabet_prefix(Alphabet a) {
  switch (a) {
    case Alphabet::star: return '\0';  // bare label
    case Alphabet::bar: return 'b';
    case Alphabet::barB: return 'B';
    case Alphabet::barA: return 'A';
    case Alphabet::triangle: return 'v';
  }
  return '?';
}

struct Generator {
  Alphabet tag;
  int label;

  auto operator<=>(const Generator&) const = default;

  std::string to_string() const {
    char p = alphabet_prefix(tag);
    std::string s;
    if (p) s += p;
    s += std::to_string(label);
    return s;
  }
};

inline std::vector<Generator> make_alphabet(Alphabet tag, int n) {
  std::vector<Generator> gens;
  gens.reserve(n);
  for (int a = 1; a <= n; ++a) gens.push_back({tag, a});
  return gens;
}

// Immutable leaf-or-binary-node syntax tree. Copies share structure.
class SyntaxTree {
 public:
  SyntaxTree() = default;  // leaf

  static SyntaxTree leaf() { return SyntaxTree(); }

  static SyntaxTree node(Generator g, SyntaxTree l, SyntaxTree r) {
    int ar = l.arity() + r.arity();
    int dg = l.degree() + r.degree() + 1;
    SyntaxTree t;
    t.n_ = std::make_shared<const Node>(Node{g, std::move(l), std::move(r), ar, dg});
    return t;
  }

  bool is_leaf() const { return !n_; }
  const Generator& gen() const { return n_->gen; }
  const SyntaxTree& left() const { return n_->left; }
  const SyntaxTree& right() const { return n_->right; }

  int arity() const { return n_ ? n_->arity : 1; }   // leaf count
  int degree() const { return n_ ? n_->degree : 0; }  // internal node count

  // Canonical order: leaf < node; then generator, left, right.
  std::strong_ordering compare(const SyntaxTree& o) const {
    if (n_ == o.n_) return std::strong_ordering::equal;
    if (!n_) return std::strong_ordering::less;
    if (!o.n_) return std::strong_ordering::greater;
    if (auto c = n_->gen <=> o.n_->gen; c != 0) return c;
    if (auto c = n_->left.compare(o.n_->left); c != 0) return c;
    return n_->right.compare(o.n_->right);
  }

  bool operator==(const SyntaxTree& o) const { return compare(o) == 0; }
  bool operator!=(const SyntaxTree& o) const { return compare(o) != 0; }
  bool operator<(const SyntaxTree& o) const { return compare(o) < 0; }

 private:
  struct Node {
    Generator gen;
    SyntaxTree left, right;
    int arity;
    int degree;
  };

  std::shared_ptr<const Node> n_;
};

struct TreeLess {
  bool operator()(const SyntaxTree& a, const SyntaxTree& b) const { return a < b; }
};

inline SyntaxTree corolla(Generator g) {
  return SyntaxTree::node(g, SyntaxTree::leaf(), SyntaxTree::leaf());
}

// Node positions are words over {1,2}; the root is the empty word.
using Position = std::vector<int>;

// s with t grafted on its i-th leaf (1-indexed).
inline SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t) {
  if (i < 1 || i > s.arity())
    fail(errc::index_out_of_range, "leaf index " + std::to_string(i));
  if (s.is_leaf()) return t;
  int la = s.left().arity();
  if (i <= la) return SyntaxTree::node(s.gen(), graft(s.left(), i, t), s.right());
  return SyntaxTree::node(s.gen(), s.left(), graft(s.right(), i - la, t));
}

inline SyntaxTree comp1(Generator x, Generator y) {
  return SyntaxTree::node(x, corolla(y), SyntaxTree::leaf());
}

inline SyntaxTree comp2(Generator x, Generator y) {
  return SyntaxTree::node(x, SyntaxTree::leaf(), corolla(y));
}

inline SyntaxTree subtree_at(const SyntaxTree& t, const Position& u) {
  SyntaxTree cur = t;
  for (int step : u) {
    if (cur.is_leaf() || (step != 1 && step != 2))
      fail(errc::index_out_of_range, "bad position");
    cur = step == 1 ? cur.left() : cur.right();
  }
  return cur;
}

namespace detail {

// Pattern leaves match arbitrary subtrees (middle-subtree matching).
inline bool matches_middle(const SyntaxTree& t, const SyntaxTree& pattern) {
  if (pattern.is_leaf()) return true;
  if (t.is_leaf()) return false;
  return t.gen() == pattern.gen() && matches_middle(t.left(), pattern.left()) &&
         matches_middle(t.right(), pattern.right());
}

inline void collect_frontier(const SyntaxTree& t, const SyntaxTree& pattern,
                             std::vector<SyntaxTree>& out) {
  if (pattern.is_leaf()) {
    out.push_back(t);
    return;
  }
  collect_frontier(t.left(), pattern.left(), out);
  collect_frontier(t.right(), pattern.right(), out);
}

inline SyntaxTree substitute_leaves(const SyntaxTree& t, const std::vector<SyntaxTree>& subs,
                                    std::size_t& next) {
  if (t.is_leaf()) return subs.at(next++);
  SyntaxTree l = substitute_leaves(t.left(), subs, next);
  SyntaxTree r = substitute_leaves(t.right(), subs, next);
  return SyntaxTree::node(t.gen(), std::move(l), std::move(r));
}

inline void find_occurrences_rec(const SyntaxTree& t, const SyntaxTree& pattern, Position& here,
                                 std::vector<Position>& out) {
  if (t.is_leaf()) return;
  if (matches_middle(t, pattern)) out.push_back(here);
  here.push_back(1);
  find_occurrences_rec(t.left(), pattern, here, out);
  here.back() = 2;
  find_occurrences_rec(t.right(), pattern, here, out);
  here.pop_back();
}

}  // namespace detail

// All positions where pattern occurs as a middle subtree, in preorder.
inline std::vector<Position> find_occurrences(const SyntaxTree& t, const SyntaxTree& pattern) {
  if (pattern.degree() < 1)
    fail(errc::arity_mismatch, "pattern must have at least one internal node");
  std::vector<Position> out;
  Position here;
  detail::find_occurrences_rec(t, pattern, here, out);
  return out;
}

// t with the given tree grafted on each of its leaves, left to right.
inline SyntaxTree graft_leaves(const SyntaxTree& t, const std::vector<SyntaxTree>& subs) {
  if (static_cast<int>(subs.size()) != t.arity())
    fail(errc::arity_mismatch, "wrong number of grafts");
  std::size_t next = 0;
  return detail::substitute_leaves(t, subs, next);
}

// Replaces the occurrence of pattern rooted at position u by replacement,
// keeping the subtrees matched by the pattern's leaves.
inline SyntaxTree replace_at(const SyntaxTree& t, const Position& u, const SyntaxTree& pattern,
                             const SyntaxTree& replacement) {
  if (pattern.arity() != replacement.arity())
    fail(errc::arity_mismatch, "pattern and replacement arities differ");
  if (u.empty()) {
    if (!detail::matches_middle(t, pattern)) fail(errc::not_an_occurrence, "pattern mismatch");
    std::vector<SyntaxTree> frontier;
    detail::collect_frontier(t, pattern, frontier);
    return graft_leaves(replacement, frontier);
  }
  if (t.is_leaf()) fail(errc::not_an_occurrence, "position walks past a leaf");
  Position rest(u.begin() + 1, u.end());
  if (u.front() == 1)
    return SyntaxTree::node(t.gen(), replace_at(t.left(), rest, pattern, replacement), t.right());
  if (u.front() == 2)
    return SyntaxTree::node(t.gen(), t.left(), replace_at(t.right(), rest, pattern, replacement));
  fail(errc::not_an_occurrence, "bad position step");
}

inline void infix_word_rec(const SyntaxTree& t, std::vector<int>& out) {
  if (t.is_leaf()) return;
  infix_word_rec(t.left(), out);
  out.push_back(t.gen().label);
  infix_word_rec(t.right(), out);
}

// Left-recursive infix concatenation of internal-node labels.
inline std::vector<int> infix_word(const SyntaxTree& t) {
  std::vector<int> out;
  infix_word_rec(t, out);
  return out;
}

// All binary syntax trees with n leaves over the alphabet, canonically sorted.
inline std::vector<SyntaxTree> enumerate_trees(const std::vector<Generator>& alphabet, int n) {
  if (n < 1) fail(errc::index_out_of_range, "arity must be positive");
  std::vector<std::vector<SyntaxTree>> byn(n + 1);
  byn[1] = {SyntaxTree::leaf()};
  for (int m = 2; m <= n; ++m) {
    for (int k = 1; k < m; ++k)
      for (const Generator& g : alphabet)
        for (const SyntaxTree& l : byn[k])
          for (const SyntaxTree& r : byn[m - k]) byn[m].push_back(SyntaxTree::node(g, l, r));
    std::sort(byn[m].begin(), byn[m].end(), TreeLess{});
  }
  return byn[n];
}

inline SyntaxTree relabel(const SyntaxTree& t, Alphabet tag,
                          const std::function<int(int)>& f) {
  if (t.is_leaf()) return t;
  return SyntaxTree::node({tag, f(t.gen().label)}, relabel(t.left(), tag, f),
                          relabel(t.right(), tag, f));
}

inline SyntaxTree retag(const SyntaxTree& t, Alphabet tag) {
  return relabel(t, tag, [](int x) { return x; });
}

// Text form: leaf "_", node "(label left right)".
inline std::string to_sexpr(const SyntaxTree& t) {
  if (t.is_leaf()) return "_";
  return "(" + t.gen().to_string() + " " + to_sexpr(t.left()) + " " + to_sexpr(t.right()) + ")";
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
}

inline SyntaxTree parse_sexpr_rec(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) fail(errc::parse_error, "unexpected end of tree text");
  if (s[i] == '_') {
    ++i;
    return SyntaxTree::leaf();
  }
  if (s[i] != '(') fail(errc::parse_error, "expected '(' or '_' in tree text");
  ++i;
  skip_ws(s, i);
  Alphabet tag = Alphabet::star;
  if (i < s.size()) {
    switch (s[i]) {
      case 'b': tag = Alphabet::bar; ++i; break;
      case 'B': tag = Alphabet::barB; ++i; break;
      case 'A': tag = Alphabet::barA; ++i; break;
      case 'v': tag = Alphabet::triangle; ++i; break;
      default: break;
    }
  }
  std::size_t start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == start) fail(errc::parse_error, "expected label in tree text");
  int label = std::stoi(s.substr(start, i - start));
  SyntaxTree l = parse_sexpr_rec(s, i);
  SyntaxTree r = parse_sexpr_rec(s, i);
  skip_ws(s, i);
  if (i >= s.size() || s[i] != ')') fail(errc::parse_error, "expected ')' in tree text");
  ++i;
  return SyntaxTree::node({tag, label}, std::move(l), std::move(r));
}

}  // namespace detail

inline SyntaxTree parse_sexpr(const std::string& s) {
  std::size_t i = 0;
  SyntaxTree t = detail::parse_sexpr_rec(s, i);
  detail::skip_ws(s, i);
  if (i != s.size()) fail(errc::parse_error, "trailing characters in tree text");
  return t;
}

}  // namespace asq
