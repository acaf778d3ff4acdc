#include "asf/repweights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace asf {

int WeightedRep::dim() const {
  int d = 0;
  for (const auto& [w, m] : entries) d += m;
  return d;
}

WeightedRep adjoint_rep(const RootDatum& datum) {
  WeightedRep rep;
  rep.name = "adjoint";
  for (const auto& r : datum.roots()) rep.entries.push_back({r, 1});
  Weight zero;
  zero.coords.assign(datum.dim(), Int(0));
  rep.entries.push_back({zero, datum.dim()});
  return rep;
}

WeightedRep standard_rep(const RootDatum& datum) {
  if (datum.is_torus())
    throw std::invalid_argument("standard rep needs a nontrivial root system");
  if (!datum.family())
    throw std::invalid_argument("standard rep needs a classified datum");
  // First fundamental weight in the ambient coordinates.
  Weight omega1;
  if (datum.isogeny() == Isogeny::adjoint) {
    throw std::invalid_argument(
        "standard rep is not a representation of the adjoint form");
  }
  omega1.coords.assign(datum.dim(), Int(0));
  omega1.coords[0] = 1;  // sc: dual basis to the coroots; gl: e_1
  std::set<Weight> orbit{omega1};
  std::vector<Weight> queue{omega1};
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (int i = 0; i < datum.rank(); ++i) {
      Weight nw = datum.simple_reflection(i).apply(w);
      if (orbit.insert(nw).second) queue.push_back(nw);
    }
  }
  WeightedRep rep;
  rep.name = "standard";
  for (const auto& w : orbit) rep.entries.push_back({w, 1});
  if (datum.family() == Family::B || datum.family() == Family::G2) {
    Weight zero;
    zero.coords.assign(datum.dim(), Int(0));
    rep.entries.push_back({zero, 1});
  }
  return rep;
}

WeightedRep rep_from_weights(
    const std::vector<std::pair<Weight, int>>& entries,
    const std::string& name) {
  WeightedRep rep;
  rep.name = name;
  for (const auto& [w, m] : entries) {
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");
    rep.entries.push_back({w, m});
  }
  if (rep.dim() == 0) throw std::invalid_argument("empty representation");
  return rep;
}

int GradedPiece::dim() const {
  int d = 0;
  for (const auto& e : entries) d += e.mult;
  return d;
}

WeightedRep GradedPiece::image(const std::string& name) const {
  WeightedRep rep;
  rep.name = name;
  for (const auto& e : entries) rep.entries.push_back({e.weight, e.mult});
  return rep;
}

std::map<Rat, int> grade_by(const ApartmentPoint& y, const WeightedRep& rep) {
  std::map<Rat, int> out;
  for (const auto& [w, m] : rep.entries) out[pair(w, y)] += m;
  return out;
}

int filtration_dim(const ApartmentPoint& y, const Threshold& t,
                   const WeightedRep& rep) {
  if (!t) return rep.dim();
  int d = 0;
  for (const auto& [w, m] : rep.entries)
    if (pair(w, y) >= *t) d += m;
  return d;
}

GradedPiece moy_prasad_piece(const ApartmentPoint& x, const Rat& r,
                             const WeightedRep& rep) {
  GradedPiece piece;
  piece.base_point = x;
  piece.residue = rat_mod1(r);
  for (const auto& [w, m] : rep.entries) {
    Rat offset = r - pair(w, x);
    if (is_integer(offset))
      piece.entries.push_back({w, m, numerator(offset)});
  }
  return piece;
}

GradedPiece mod_Z_piece(const ApartmentPoint& x, const Rat& residue,
                        const WeightedRep& rep) {
  GradedPiece piece;
  piece.base_point = x;
  piece.residue = rat_mod1(residue);
  for (const auto& [w, m] : rep.entries) {
    Rat offset = piece.residue - rat_mod1(pair(w, x));
    if (is_integer(offset))
      piece.entries.push_back({w, m, numerator(piece.residue - pair(w, x))});
  }
  return piece;
}

int graded_filtration_dim(const ApartmentPoint& x, const Rat& r,
                          const ApartmentPoint& y, const Rat& t,
                          const WeightedRep& rep) {
  int d = 0;
  for (const auto& [w, m] : rep.entries) {
    Rat offset = r - pair(w, x);
    if (is_integer(offset) && pair(w, y) + offset >= t) d += m;
  }
  return d;
}

Int lattice_quotient_dim(const ApartmentPoint& x, const Rat& s,
                         const ApartmentPoint& y, const Rat& t,
                         const WeightedRep& rep) {
  Int total = 0;
  for (const auto& [w, m] : rep.entries) {
    Int lo = rat_ceil(s - pair(w, x));          // lambda(x) + m >= s
    Int hi = rat_ceil(t - pair(w, y)) - 1;      // lambda(y) + m < t
    if (hi >= lo) total += (hi - lo + 1) * m;
  }
  return total;
}

}  // namespace asf
