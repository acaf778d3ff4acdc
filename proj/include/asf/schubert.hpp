#pragma once

#include <vector>

#include "asf/poly.hpp"
#include "asf/rootdata.hpp"

namespace asf {

/// Divided difference for the i-th simple root: (f - s_i f)/alpha_i.
Poly divided_difference(const RootDatum& datum, int i, const Poly& f);

/// Composite operator along a reduced word (rightmost letter applied first).
Poly divided_difference_word(const RootDatum& datum,
                             const std::vector<int>& word, const Poly& f);

/// Constant value of the top divided difference on a polynomial of degree
/// equal to the number of positive roots (zero below or off top degree).
Rat top_divided_difference(const RootDatum& datum, const Poly& f);

/// Expansion coefficients of f over the Schubert basis of the coinvariant
/// algebra, one per Weyl element: coefficient of w is the constant term of
/// the w-th divided difference of f.
struct SchubertCoefficient {
  std::vector<int> word;
  Rat value;
};
std::vector<SchubertCoefficient> schubert_expand_typeA(const RootDatum& datum,
                                                       const Poly& f);

/// Independent ideal-membership test: f lies in the invariant ideal iff all
/// its Schubert coefficients vanish. Works for any supported family.
bool in_ideal_by_divided_differences(const RootDatum& datum, const Poly& f);

}  // namespace asf
