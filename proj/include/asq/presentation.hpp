#pragma once

#include <vector>

#include "asq/tree_poly.hpp"

namespace asq {

// Binary quadratic operad presentation: a generator alphabet and a space of
// arity-3 relations, stored as a reduced (triangular) basis.
struct Presentation {
  std::vector<Generator> alphabet;
  std::vector<TreePoly> relations;  // triangular basis, deterministic order
  Echelon span;

  std::size_t rank() const { return span.rank(); }

  bool all_binomial() const {
    for (const TreePoly& r : relations)
      if (!r.is_binomial_difference()) return false;
    return true;
  }
};

inline Presentation make_presentation(std::vector<Generator> alphabet,
                                      const std::vector<TreePoly>& family) {
  Presentation p;
  p.alphabet = std::move(alphabet);
  for (const TreePoly& r : family) {
    if (r.is_zero()) continue;
    if (r.arity() != 3) fail(errc::arity_mismatch, "relations must have arity 3");
    p.span.insert(r);
  }
  p.relations = p.span.basis();
  return p;
}

}  // namespace asq
