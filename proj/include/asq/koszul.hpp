#pragma once

#include <optional>
#include <vector>

#include "asq/as_operad.hpp"
#include "asq/matrix.hpp"
#include "asq/thin_forest.hpp"

namespace asq {

inline Generator bar(int a) { return {Alphabet::bar, a}; }
inline Generator barB(int a) { return {Alphabet::barB, a}; }
inline Generator barA(int a) { return {Alphabet::barA, a}; }
inline Generator tri(int a) { return {Alphabet::triangle, a}; }

// Dual relation space computed as the annihilator of the relation space under
// the signed pairing, expressed on the bar alphabet.
inline Presentation dual_relations_annihilator(const Poset& P) {
  Presentation star_pres = relations_star(P);
  std::vector<TreePoly> ann = annihilator(star_pres.relations, star_pres.alphabet);
  std::vector<TreePoly> retagged;
  retagged.reserve(ann.size());
  for (const TreePoly& p : ann) {
    TreePoly q(3);
    for (const auto& [t, c] : p.terms()) q.add(retag(t, Alphabet::bar), c);
    retagged.push_back(std::move(q));
  }
  return make_presentation(make_alphabet(Alphabet::bar, P.size()), retagged);
}

// Explicit generators of the dual relation space: one alternating-sum
// relation per element, plus the two slot-wise monomials per ordered
// incomparable pair.
inline std::vector<TreePoly> dual_relation_family_explicit(const Poset& P) {
  std::vector<TreePoly> family;
  int n = P.size();
  for (int a = 1; a <= n; ++a) {
    TreePoly r(3);
    r.add(comp1(bar(a), bar(a)), 1);
    r.add(comp2(bar(a), bar(a)), -1);
    for (int b = 1; b <= n; ++b) {
      if (!P.strictly_less(a, b)) continue;
      r.add(comp1(bar(b), bar(a)), 1);
      r.add(comp1(bar(a), bar(b)), 1);
      r.add(comp2(bar(b), bar(a)), -1);
      r.add(comp2(bar(a), bar(b)), -1);
    }
    family.push_back(std::move(r));
  }
  for (int c = 1; c <= n; ++c)
    for (int d = 1; d <= n; ++d) {
      if (c == d || !P.incomparable(c, d)) continue;
      family.push_back(TreePoly::single(comp1(bar(c), bar(d))));
    }
  for (int c = 1; c <= n; ++c)
    for (int d = 1; d <= n; ++d) {
      if (c == d || !P.incomparable(c, d)) continue;
      family.push_back(TreePoly::single(comp2(bar(c), bar(d))));
    }
  return family;
}

inline Presentation dual_relations_explicit(const Poset& P) {
  return make_presentation(make_alphabet(Alphabet::bar, P.size()),
                           dual_relation_family_explicit(P));
}

// Invertible change of generators: new_i = sum_j matrix[i][j] old_j.
struct BasisChange {
  std::vector<Generator> source_alphabet;
  std::vector<Generator> target_alphabet;
  RatMatrix matrix;

  // Coefficient of old generator with label j in new generator with label i.
  const Rational& coeff(int i, int j) const { return matrix.at(i - 1, j - 1); }
};

inline BasisChange compose(const BasisChange& outer, const BasisChange& inner) {
  // outer expresses its source over inner's source; result over inner's target.
  std::size_t n = outer.matrix.rows();
  BasisChange out{outer.source_alphabet, inner.target_alphabet, RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < n; ++k) acc += outer.matrix.at(i, k) * inner.matrix.at(k, j);
      out.matrix.at(i, j) = acc;
    }
  return out;
}

// Expands a polynomial over the source alphabet into one over the target
// alphabet by substituting every node label.
inline TreePoly expand_through(const BasisChange& bc, const TreePoly& p) {
  std::function<std::vector<std::pair<SyntaxTree, Rational>>(const SyntaxTree&)> ex =
      [&](const SyntaxTree& t) -> std::vector<std::pair<SyntaxTree, Rational>> {
    if (t.is_leaf()) return {{SyntaxTree::leaf(), Rational(1)}};
    auto ls = ex(t.left());
    auto rs = ex(t.right());
    std::vector<std::pair<SyntaxTree, Rational>> out;
    for (std::size_t j = 0; j < bc.target_alphabet.size(); ++j) {
      const Rational& c = bc.matrix.at(t.gen().label - 1, j);
      if (c == 0) continue;
      for (const auto& [lt, lc] : ls)
        for (const auto& [rt, rc] : rs)
          out.push_back({SyntaxTree::node(bc.target_alphabet[j], lt, rt), c * lc * rc});
    }
    return out;
  };
  TreePoly out(p.arity());
  for (const auto& [t, c] : p.terms())
    for (const auto& [s, d] : ex(t)) out.add(s, c * d);
  return out;
}

// barB_a = sum of bar_b over b above a.
inline BasisChange barB_basis_change(const Poset& P) {
  int n = P.size();
  BasisChange bc{make_alphabet(Alphabet::barB, n), make_alphabet(Alphabet::bar, n),
                 RatMatrix(n, n)};
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (P.leq(a, b)) bc.matrix.at(a - 1, b - 1) = 1;
  return bc;
}

// Dual relations on the barB generators (forest posets): one associativity
// relation per element plus the slot-wise monomials per incomparable pair.
inline std::vector<TreePoly> barB_relation_family(const Poset& P) {
  std::vector<TreePoly> family;
  int n = P.size();
  for (int a = 1; a <= n; ++a) {
    TreePoly r(3);
    r.add(comp1(barB(a), barB(a)), 1);
    r.add(comp2(barB(a), barB(a)), -1);
    family.push_back(std::move(r));
  }
  for (int c = 1; c <= n; ++c)
    for (int d = 1; d <= n; ++d) {
      if (c == d || !P.incomparable(c, d)) continue;
      family.push_back(TreePoly::single(comp1(barB(c), barB(d))));
    }
  for (int c = 1; c <= n; ++c)
    for (int d = 1; d <= n; ++d) {
      if (c == d || !P.incomparable(c, d)) continue;
      family.push_back(TreePoly::single(comp2(barB(c), barB(d))));
    }
  return family;
}

inline std::pair<BasisChange, Presentation> barB_presentation(const Poset& P) {
  if (!P.is_forest()) fail(errc::not_forest, "the barB presentation needs a forest poset");
  return {barB_basis_change(P),
          make_presentation(make_alphabet(Alphabet::barB, P.size()), barB_relation_family(P))};
}

// Self-dual shape of the barB relations pulled back to the primal side:
// associativity per element, slot-wise zero per strictly comparable pair.
inline std::vector<TreePoly> triangle_relation_family(const Poset& P) {
  std::vector<TreePoly> family;
  int n = P.size();
  for (int a = 1; a <= n; ++a) {
    TreePoly r(3);
    r.add(comp1(tri(a), tri(a)), 1);
    r.add(comp2(tri(a), tri(a)), -1);
    family.push_back(std::move(r));
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b || !P.comparable(a, b)) continue;
      family.push_back(TreePoly::single(comp1(tri(a), tri(b))));
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b || !P.comparable(a, b)) continue;
      family.push_back(TreePoly::single(comp2(tri(a), tri(b))));
    }
  return family;
}

inline Presentation triangle_presentation(const Poset& P) {
  if (!P.is_forest()) fail(errc::not_forest, "the triangle presentation needs a forest poset");
  return make_presentation(make_alphabet(Alphabet::triangle, P.size()),
                           triangle_relation_family(P));
}

// barA_b = sum of barB_a over a below b in the dual poset.
inline BasisChange barA_over_barB(const Poset& P) {
  Poset dual = thin_dual(P);
  int n = P.size();
  BasisChange bc{make_alphabet(Alphabet::barA, n), make_alphabet(Alphabet::barB, n),
                 RatMatrix(n, n)};
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a <= n; ++a)
      if (dual.leq(a, b)) bc.matrix.at(b - 1, a - 1) = 1;
  return bc;
}

// Composite change expressing barA over the bar generators.
inline BasisChange barA_basis(const Poset& P) {
  return compose(barA_over_barB(P), barB_basis_change(P));
}

struct DualityReport {
  bool ok = false;
  bool images_independent = false;
  bool relations_mapped = false;
  bool dims_match = false;
  long long dim_relations_dual_poset = 0;  // rank of the star relations of the dual poset
  long long dim_relations_dual = 0;        // rank of the dual relation space
  RatMatrix phi;                           // row b: phi(*_b) over the bar generators
};

// Checks that *_b |-> sum over a below b in the dual of the bar-sums of the
// upward closures induces an isomorphism onto the Koszul dual: images are
// independent, every generating relation of the dual poset maps into the
// dual relation space, and the two relation spaces have equal dimension.
inline DualityReport verify_duality_iso(const Poset& P) {
  if (!P.is_thin_forest()) fail(errc::not_thin_forest, "duality check needs a thin forest");
  if (!is_standardly_labeled(P))
    fail(errc::not_thin_forest, "duality check needs the standard labeling");
  Poset dual_poset = thin_dual(P);
  int n = P.size();

  DualityReport rep;
  rep.phi = RatMatrix(n, n);
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a <= n; ++a) {
      if (!dual_poset.leq(a, b)) continue;
      for (int c = 1; c <= n; ++c)
        if (P.leq(a, c)) rep.phi.at(b - 1, c - 1) += 1;
    }
  rep.images_independent = rep.phi.rank() == static_cast<std::size_t>(n);

  Presentation dual_rel = dual_relations_annihilator(P);
  BasisChange phi_change{make_alphabet(Alphabet::star, n), make_alphabet(Alphabet::bar, n),
                         rep.phi};
  rep.relations_mapped = true;
  for (const TreePoly& r : star_relation_family(dual_poset)) {
    if (!dual_rel.span.contains(expand_through(phi_change, r))) rep.relations_mapped = false;
  }

  rep.dim_relations_dual_poset = static_cast<long long>(relations_star(dual_poset).rank());
  rep.dim_relations_dual = static_cast<long long>(dual_rel.rank());
  rep.dims_match = rep.dim_relations_dual_poset == rep.dim_relations_dual &&
                   rep.dim_relations_dual ==
                       4 * dual_poset.intervals_count() - 3 * static_cast<long long>(n);
  rep.ok = rep.images_independent && rep.relations_mapped && rep.dims_match;
  return rep;
}

// H_P(-H_{dual}(-t)) = t as truncated series, exactly.
inline bool hilbert_inversion_check(const Poset& P, int N) {
  if (!P.is_thin_forest()) fail(errc::not_thin_forest, "inversion check needs a thin forest");
  if (!is_standardly_labeled(P))
    fail(errc::not_thin_forest, "inversion check needs the standard labeling");
  std::vector<Integer> hp = hilbert_coeffs(P, N);
  std::vector<Integer> hd = hilbert_coeffs(thin_dual(P), N);
  std::vector<Integer> inner(N + 1, 0);
  for (int k = 1; k <= N; ++k) inner[k] = (k % 2 == 1 ? hd[k] : -hd[k]);
  // Horner-style truncated composition of hp with inner.
  std::vector<Integer> acc(N + 1, 0);
  for (int k = N; k >= 1; --k) {
    // acc = acc * inner + hp[k] * t^k-adjustment; build as acc*inner then add constant
    std::vector<Integer> prod(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
      if (acc[i] == 0) continue;
      for (int j = 1; i + j <= N; ++j)
        if (inner[j] != 0) prod[i + j] += acc[i] * inner[j];
    }
    acc = std::move(prod);
    acc[0] += hp[k];
  }
  // One final multiplication by inner gives sum_k hp[k] * inner^k.
  std::vector<Integer> result(N + 1, 0);
  for (int i = 0; i <= N; ++i) {
    if (acc[i] == 0) continue;
    for (int j = 1; i + j <= N; ++j)
      if (inner[j] != 0) result[i + j] += acc[i] * inner[j];
  }
  for (int k = 1; k <= N; ++k) {
    if (k == 1 && result[k] != 1) return false;
    if (k > 1 && result[k] != 0) return false;
  }
  return true;
}

}  // namespace asq
