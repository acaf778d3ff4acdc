#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asf/rootdata.hpp"

namespace asf {

/// Representation modeled by its A-weight multiset; no vectors are ever
/// materialized.
struct WeightedRep {
  std::vector<std::pair<Weight, int>> entries;  // (weight, multiplicity > 0)
  std::string name;

  int dim() const;
  bool is_adjoint() const { return name == "adjoint"; }
};

WeightedRep adjoint_rep(const RootDatum& datum);
/// Defining representation of the classical families (Weyl orbit of the
/// first fundamental weight, plus the zero weight for B and G2).
WeightedRep standard_rep(const RootDatum& datum);
WeightedRep rep_from_weights(const std::vector<std::pair<Weight, int>>& entries,
                             const std::string& name);

/// Filtration threshold; nullopt encodes t = -infinity (whole space).
using Threshold = std::optional<Rat>;

/// Graded slice of V x k[eps, eps^-1]: entries (weight, multiplicity, offset)
/// with lambda(x) + offset on a fixed value (Moy-Prasad) or congruence class
/// (mod-Z piece).
struct GradedPiece {
  ApartmentPoint base_point;
  Rat residue;
  struct Entry {
    Weight weight;
    int mult;
    Int offset;
  };
  std::vector<Entry> entries;

  int dim() const;
  /// The i_{x,r} image: forget offsets, keep the weight multiset.
  WeightedRep image(const std::string& name = "piece") const;
};

/// dim V(y,t) for every value t taken by the grading.
std::map<Rat, int> grade_by(const ApartmentPoint& y, const WeightedRep& rep);

/// dim F^t_y V = sum over weights with lambda(y) >= t.
int filtration_dim(const ApartmentPoint& y, const Threshold& t,
                   const WeightedRep& rep);

/// V_x(r): all (lambda, m) with lambda(x) + m = r.
GradedPiece moy_prasad_piece(const ApartmentPoint& x, const Rat& r,
                             const WeightedRep& rep);

/// V(x, residue + Z): weights with lambda(x) congruent to residue mod 1.
GradedPiece mod_Z_piece(const ApartmentPoint& x, const Rat& residue,
                        const WeightedRep& rep);

/// dim F^t_y V_x(r): count of (lambda, m) with lambda(x)+m = r and
/// lambda(y)+m >= t.
int graded_filtration_dim(const ApartmentPoint& x, const Rat& r,
                          const ApartmentPoint& y, const Rat& t,
                          const WeightedRep& rep);

/// dim V_{x,s} / (V_{x,s} cap V_{y,t}): count of (lambda, m) with
/// lambda(x)+m >= s and lambda(y)+m < t. Always finite.
Int lattice_quotient_dim(const ApartmentPoint& x, const Rat& s,
                         const ApartmentPoint& y, const Rat& t,
                         const WeightedRep& rep);

}  // namespace asf
