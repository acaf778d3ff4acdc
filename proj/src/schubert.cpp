#include "asf/schubert.hpp"

#include <stdexcept>

#include "asf/coinvariant.hpp"

namespace asf {

Poly divided_difference(const RootDatum& datum, int i, const Poly& f) {
  Poly diff = f - weyl_substitute(datum.simple_reflection(i), f);
  if (diff.is_zero()) return Poly(f.nvars());
  Poly alpha = weight_form(datum.simple_roots()[i], f.nvars());
  return diff.divide_by_linear(alpha);
}

Poly divided_difference_word(const RootDatum& datum,
                             const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    g = divided_difference(datum, *it, g);
  return g;
}

Rat top_divided_difference(const RootDatum& datum, const Poly& f) {
  Poly g = divided_difference_word(datum, datum.longest_word(), f);
  if (!g.is_constant())
    throw std::logic_error("top divided difference is not constant");
  return g.constant_term();
}

std::vector<SchubertCoefficient> schubert_expand_typeA(const RootDatum& datum,
                                                       const Poly& f) {
  if (datum.family() != Family::A)
    throw std::invalid_argument("Schubert expansion implemented for family A");
  std::vector<SchubertCoefficient> out;
  for (const auto& w : datum.weyl_elements()) {
    Rat c = divided_difference_word(datum, w.word, f).constant_term();
    out.push_back({w.word, c});
  }
  return out;
}

bool in_ideal_by_divided_differences(const RootDatum& datum, const Poly& f) {
  for (const auto& w : datum.weyl_elements())
    if (divided_difference_word(datum, w.word, f).constant_term() != 0)
      return false;
  return true;
}

}  // namespace asf
