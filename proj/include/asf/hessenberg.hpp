#pragma once

#include <vector>

#include "asf/coinvariant.hpp"
#include "asf/repweights.hpp"
#include "asf/rootdata.hpp"

namespace asf {

/// Descriptor of a Hessenberg variety for a reductive group H sitting in a
/// fixed ambient torus: the parabolic is cut out by a point, the subbundle by
/// a filtration threshold on an H-representation given by its weights.
struct HessenbergSpec {
  explicit HessenbergSpec(RootDatum h) : h_datum(std::move(h)) {}

  RootDatum h_datum;
  ApartmentPoint parabolic_point;
  Threshold t;  // must be <= 0 when present; nullopt = whole space
  GradedPiece rep_piece;
  std::vector<Weight> v_support;  // weights carried by the defining vector

  void validate() const;  // throws std::invalid_argument
};

/// dim H/P = number of roots of H negative at the parabolic point.
int ambient_dim(const HessenbergSpec& spec);

/// Codimension m of the filtration subspace in the representation.
int codim_condition(const HessenbergSpec& spec);

/// Emptiness test. For a torus H the single candidate point is checked
/// literally against the support; otherwise the top Chern class of the
/// quotient weights is tested for membership in the invariant ideal. The
/// engine, when supplied, must be built from spec.h_datum.
bool is_empty(const HessenbergSpec& spec,
              const CoinvariantEngine* engine = nullptr);

/// Dimension of a nonempty Hessenberg variety (transversality makes the
/// expected dimension exact). Throws on an empty spec.
int hessenberg_dim(const HessenbergSpec& spec,
                   const CoinvariantEngine* engine = nullptr);

/// Rank of the kernel bundle K(x, y, r, s, t, t') built from the pieces
/// g(x, r+Z) and V(x, r+s+Z), both filtered at y with thresholds t' and
/// t'' = t + t'. Requires t'' <= 0; a negative rank signals violated
/// hypotheses and raises.
Int bundle_rank_K(const ApartmentPoint& x, const ApartmentPoint& y,
                  const Rat& r, const Rat& s, const Rat& t, const Rat& tprime,
                  const WeightedRep& rep, const WeightedRep& adjoint);

}  // namespace asf
