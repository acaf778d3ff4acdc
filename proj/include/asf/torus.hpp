#pragma once

#include <string>
#include <vector>

#include "asf/repweights.hpp"
#include "asf/rootdata.hpp"

namespace asf {

/// Principal grading point x = rho_vee / h: every simple root takes the
/// value 1/h. Lies in the interior of an alcove; no root is integral there.
ApartmentPoint coxeter_point(const RootDatum& datum);

/// The reductive subgroup H generated by the torus and the root subgroups of
/// the roots taking integral values at x.
RootDatum levi_at(const RootDatum& datum, const ApartmentPoint& x);

/// Grading point for a torus that is Coxeter in the standard Levi M cut out
/// by the selected simple roots: the M-Coxeter point, perturbed inside the
/// subspace where the M-roots vanish until no root of the full group is
/// integral. Throws if no perturbation is found within the search bound.
ApartmentPoint weakly_coxeter_point(const RootDatum& datum,
                                    const std::vector<int>& levi_selection);

/// Smallest positive integer l with all simple-root values of l*x integral
/// (x = mu/l with mu in the adjoint coweight lattice).
Int point_order(const RootDatum& datum, const ApartmentPoint& x);

struct AdmissibilityResult {
  bool ok = false;
  std::string reason;   // set on failure
  std::string warning;  // set when admissible but degenerate
  GradedPiece piece;    // home of the defining vector, V(x, s + Z)
  Int order_l = 1;
};

/// Whether an equivalued element of valuation s exists in the grading
/// defined by x: the graded piece must be nonzero and s must be a multiple
/// of 1/l. A piece supported on the zero weight alone is central: fatal for
/// the adjoint representation, a warning otherwise.
AdmissibilityResult equivalued_admissible(const RootDatum& datum,
                                          const ApartmentPoint& x,
                                          const Rat& s,
                                          const WeightedRep& rep);

enum class TorusMode { coxeter, weakly_coxeter, kac };

struct TorusSpec {
  TorusMode mode = TorusMode::coxeter;
  std::vector<int> levi_selection;  // weakly_coxeter mode
  ApartmentPoint kac_x;             // kac mode: x = mu / l
  Int kac_l = 1;
};

/// Grading point for the given mode; kac mode validates l * x integral.
ApartmentPoint resolve_torus_point(const RootDatum& datum,
                                   const TorusSpec& spec);

}  // namespace asf
