#pragma once

#include <vector>

#include "valgroup/context.hpp"

namespace valgroup {

/// S-reduced factorization: pieces of length <= 1, junctions of length 2,
/// piece count = l(element).
struct SReducedForm {
  GroupElement element;
  std::vector<GroupElement> pieces;
  std::vector<int> junction_lengths;
};

/// Deterministic S-reduced sequence read off the canonical form. Requires
/// l(g) >= 1; length-zero input is a domain error (its normal form is g itself).
SReducedForm s_reduced_decomposition(const GroupElement& g);

enum class ConcatCase { full_junction, merged_junction, cancellation };

struct ConcatResult {
  ConcatCase top_case;
  SReducedForm result;
  int cancellations = 0;
};

/// Concatenates two S-reduced forms by the junction case analysis: length-2
/// junction concatenates, length-1 merges the seam pieces, length-0 cancels
/// and pushes the leftover B-element into the neighbour, recursing.
ConcatResult concat_normal_forms(const SReducedForm& x, const SReducedForm& y);

/// l(g) <= 1: always true. Otherwise c.r. iff l(g^2) = 2 l(g),
/// w.c.r. iff l(g^2) >= 2 l(g) - 1.
bool is_cyclically_reduced(const GroupElement& g);
bool is_weakly_cyclically_reduced(const GroupElement& g);

struct CyclicReduction {
  GroupElement original;    // g
  GroupElement conjugator;  // y
  GroupElement core;        // x, cyclically reduced; g = y^-1 x y
};

/// Conjugates g to a cyclically reduced core, one S-piece at a time, testing
/// the length-1 seam before the length-0 seam. For g in N this yields
/// l(g) = 2 l(y) + l(x) and x in N intersect S.
CyclicReduction cyclic_reduce(const GroupElement& g);

}  // namespace valgroup
