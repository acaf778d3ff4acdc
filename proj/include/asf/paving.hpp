#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asf/hessenberg.hpp"
#include "asf/repweights.hpp"
#include "asf/rootdata.hpp"

namespace asf {

/// Instance of the fiber computation: group, representation, grading point x
/// with valuation s, base point y with threshold t, support of the defining
/// vector, and enumeration controls.
struct PavingProblem {
  explicit PavingProblem(RootDatum d) : datum(std::move(d)) {}

  RootDatum datum;
  WeightedRep rep;
  ApartmentPoint x;
  Rat s;
  ApartmentPoint y;
  Rat t;
  std::vector<Weight> v_support;  // empty = all weights of the s-piece

  int radius = 3;
  bool auto_extend = true;
  bool quotient_by_central = false;

  void validate() const;  // throws std::invalid_argument (s >= t, dims)
  GradedPiece rep_piece() const;
  std::vector<Weight> effective_support() const;
};

struct CellRecord {
  AffineWeylElement orbit;
  ApartmentPoint y_prime;
  bool empty = true;
  std::optional<int> base_dim;
  std::vector<std::pair<Rat, Int>> layer_ranks;
  std::optional<Int> dim_total;
  std::optional<Int> dim_rootcount;  // adjoint rep, t = 0 only
};

struct PavingReport {
  std::vector<CellRecord> cells;
  bool affine_paving = false;
  std::optional<Int> max_dim;
  std::vector<Int> poly;  // poly[d] = number of d-dimensional cells
  int radius_used = 0;
  bool truncated = false;  // stopped by the hard cap, not by saturation
  std::string truncation_note;
};

/// Distinct orbit representatives c (double cosets for the stabilizers of x
/// and y) with translation coefficients bounded by the radius. Deterministic
/// order.
std::vector<AffineWeylElement> enumerate_orbits(const PavingProblem& problem,
                                                int radius);

/// Levels r > 0 at which a layer bundle can be nonzero for the cell at y'.
std::vector<Rat> jump_set(const PavingProblem& problem,
                          const ApartmentPoint& y_prime);

/// Full record for one orbit: base Hessenberg data, layer ranks, dimensions.
/// The engine, when given, must be built from levi_at(datum, x).
CellRecord cell_data(const PavingProblem& problem, const AffineWeylElement& c,
                     const CoinvariantEngine* engine = nullptr);

/// Top-level driver: enumerate (extending the radius until the nonempty set
/// saturates when auto_extend is on), compute cells, assemble the report.
PavingReport assemble(const PavingProblem& problem);

}  // namespace asf
