#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asf/rational.hpp"

namespace asf {

enum class Family { A, B, C, D, G2 };
enum class Isogeny { simply_connected, adjoint, gl };

std::string family_name(Family f);
std::string isogeny_name(Isogeny i);

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Element of the character lattice X^*(A), coordinates in a fixed basis.
struct Weight {
  IntVec coords;

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
  Weight operator-() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool is_zero() const;
};

/// Element of the cocharacter lattice X_*(A), coordinates in the dual basis.
struct Coweight {
  IntVec coords;
  bool operator==(const Coweight& o) const { return coords == o.coords; }
  Coweight operator+(const Coweight& o) const;
};

/// Rational point of the apartment X_*(A) x Q.
struct ApartmentPoint {
  RatVec coords;
  bool operator==(const ApartmentPoint& o) const { return coords == o.coords; }
  bool operator<(const ApartmentPoint& o) const { return coords < o.coords; }
};

ApartmentPoint zero_point(int dim);

/// Natural pairings; the chosen coordinates make them dot products.
Int pair(const Weight& w, const Coweight& c);
Rat pair(const Weight& w, const ApartmentPoint& p);

/// alpha + n*delta, with alpha a root of the ambient datum.
struct AffineRoot {
  Weight gradient;
  Int level;
  bool operator==(const AffineRoot& o) const {
    return gradient == o.gradient && level == o.level;
  }
  bool operator<(const AffineRoot& o) const {
    if (gradient == o.gradient) return level < o.level;
    return gradient < o.gradient;
  }
};

Rat affine_root_value(const AffineRoot& ar, const ApartmentPoint& x);

/// Finite Weyl element stored via its integer matrix action on the weight
/// lattice and on the coweight lattice, plus a reduced word over the simple
/// reflections. Equality is by the weight-lattice action.
struct WeylElement {
  IntMat wt_mat;    // row-major, weight |-> wt_mat * weight
  IntMat cowt_mat;  // contragredient action on coweights
  std::vector<int> word;

  bool operator==(const WeylElement& o) const { return wt_mat == o.wt_mat; }
  bool operator<(const WeylElement& o) const { return wt_mat < o.wt_mat; }

  Weight apply(const Weight& w) const;
  Coweight apply(const Coweight& c) const;
  ApartmentPoint apply(const ApartmentPoint& p) const;
  WeylElement compose(const WeylElement& o) const;  // this after o
  WeylElement inverse() const;
  bool is_identity() const;

  static WeylElement identity(int dim);
};

/// Affine Weyl element t_mu * w: acts on the apartment by p |-> w(p) + mu.
struct AffineWeylElement {
  WeylElement finite;
  IntVec translation;

  ApartmentPoint act(const ApartmentPoint& y) const;
  AffineWeylElement compose(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  /// Affine action on affine roots: (c.ar)(p) = ar(c^{-1} p).
  AffineRoot apply(const AffineRoot& ar) const;

  static AffineWeylElement from_translation(const IntVec& mu, int dim);
  static AffineWeylElement from_weyl(const WeylElement& w);
};

struct AlcovePosition {
  bool interior = false;
  std::vector<AffineRoot> walls;  // affine roots vanishing at the point
};

/// Root system with lattices, pairing, Weyl group and affine roots.
///
/// Two construction routes: a classified datum build(family, rank, isogeny),
/// or a sub-datum spanned by a closed set of roots of a parent (used for the
/// pseudo-Levi H attached to a grading point).
class RootDatum {
 public:
  static RootDatum build(Family family, int rank, Isogeny isogeny);
  /// Sub-datum of `parent` generated by the given roots (closed subsystem).
  /// The lattice is unchanged; only the root system shrinks.
  static RootDatum sub_datum(const RootDatum& parent,
                             const std::vector<Weight>& roots);

  std::optional<Family> family() const { return family_; }
  Isogeny isogeny() const { return isogeny_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  int dim() const { return dim_; }

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const {
    return simple_coroots_;
  }
  const IntMat& cartan() const { return cartan_; }

  /// All roots: positive roots first (by height, then coords), then their
  /// negatives in the same order.
  const std::vector<Weight>& roots() const { return roots_; }
  size_t num_positive() const { return roots_.size() / 2; }
  const Coweight& coroot(size_t root_index) const {
    return coroots_[root_index];
  }
  bool is_root(const Weight& w) const;
  bool is_torus() const { return roots_.empty(); }

  Int weyl_order() const;

  WeylElement simple_reflection(int i) const;
  WeylElement weyl_from_word(const std::vector<int>& word) const;
  /// Full enumeration; guarded against groups too large to list.
  const std::vector<WeylElement>& weyl_elements() const;
  WeylElement coxeter_element() const;
  int coxeter_number() const;  // order of the Coxeter element
  std::vector<int> longest_word() const;

  AlcovePosition alcove_position(const ApartmentPoint& x) const;

  /// Basis of the translation lattice of the affine Weyl group: the coroot
  /// lattice, extended to the full lattice Z^n for isogeny gl.
  IntMat translation_basis() const;
  /// Basis of the sublattice of central translations (pairing zero with all
  /// roots); empty for semisimple data.
  IntMat central_translation_basis() const;

  /// Decomposition of the simple roots into irreducible components
  /// (indices into simple_roots), with the per-component Coxeter number.
  struct Component {
    std::vector<int> simple_indices;
    int coxeter_number;
  };
  std::vector<Component> components() const;

  void check_dim(const ApartmentPoint& p) const;
  void check_dim(const Weight& w) const;

 private:
  RootDatum() = default;
  void generate_roots();

  std::optional<Family> family_;
  Isogeny isogeny_ = Isogeny::simply_connected;
  int dim_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  IntMat cartan_;
  std::vector<Weight> roots_;
  std::vector<Coweight> coroots_;
  mutable std::optional<Int> weyl_order_;
  mutable std::vector<WeylElement> weyl_;
};

}  // namespace asf
