#pragma once

#include <vector>

#include "asf/poly.hpp"
#include "asf/repweights.hpp"
#include "asf/rootdata.hpp"

namespace asf {

/// The weight as a linear form in the coordinates on X^*(A) tensor Q.
Poly weight_form(const Weight& w, int nvars);

/// Action of a Weyl element on polynomials: x_i -> w(e_i).
Poly weyl_substitute(const WeylElement& w, const Poly& f);

/// Average of f over the Weyl group (projector onto invariants).
Poly reynolds(const RootDatum& datum, const Poly& f);

/// Product of the positive roots as a polynomial.
Poly positive_root_product(const RootDatum& datum);

/// The coinvariant algebra S/I of a reductive group: normal forms modulo the
/// ideal I generated by positive-degree Weyl invariants. Construction checks
/// dim S/I = |W|.
class CoinvariantEngine {
 public:
  explicit CoinvariantEngine(const RootDatum& datum);

  const RootDatum& datum() const { return datum_; }
  int nvars() const { return datum_.dim(); }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& groebner_basis() const { return groebner_; }
  Int quotient_dim() const { return quotient_dim_; }

  Poly normal_form(const Poly& f) const;
  bool is_in_ideal(const Poly& f) const { return normal_form(f).is_zero(); }
  /// Normal form of the product of the given weights (with multiplicity).
  Poly chern_top_class(
      const std::vector<std::pair<Weight, int>>& weights) const;

 private:
  RootDatum datum_;
  std::vector<Poly> generators_;
  std::vector<Poly> groebner_;
  Int quotient_dim_;
};

}  // namespace asf
