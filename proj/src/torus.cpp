#include "asf/torus.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "asf/linalg.hpp"

namespace asf {

namespace {

// Any rational solution of A x = b (free variables set to zero).
std::optional<RatVec> solve_any(const RatMat& a, const RatVec& b) {
  size_t m = a.size(), n = m ? a[0].size() : 0;
  RatMat aug(m, RatVec(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  int rank = rat_row_reduce(aug);
  RatVec x(n, Rat(0));
  for (int r = 0; r < rank; ++r) {
    size_t piv = 0;
    while (piv <= n && aug[r][piv] == 0) ++piv;
    if (piv == n) return std::nullopt;  // inconsistent
    x[piv] = aug[r][n];
  }
  return x;
}

// Expansion of a root in the simple-root basis; empty if not expressible.
std::optional<RatVec> simple_expansion(const RootDatum& datum,
                                       const Weight& root) {
  int n = datum.dim(), r = datum.rank();
  RatMat a(n, RatVec(r));
  RatVec b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = Rat(datum.simple_roots()[j].coords[i]);
    b[i] = Rat(root.coords[i]);
  }
  auto x = solve_any(a, b);
  if (!x) return std::nullopt;
  // simple roots are linearly independent, so the expansion is exact iff
  // the system is consistent; verify anyway
  for (int i = 0; i < n; ++i) {
    Rat acc(0);
    for (int j = 0; j < r; ++j)
      acc += (*x)[j] * Rat(datum.simple_roots()[j].coords[i]);
    if (acc != Rat(root.coords[i])) return std::nullopt;
  }
  return x;
}

}  // namespace

ApartmentPoint coxeter_point(const RootDatum& datum) {
  ApartmentPoint x = zero_point(datum.dim());
  if (datum.is_torus()) return x;
  Rat target(1, datum.coxeter_number());
  RatMat a(datum.rank(), RatVec(datum.dim()));
  RatVec b(datum.rank(), target);
  for (int i = 0; i < datum.rank(); ++i)
    for (int j = 0; j < datum.dim(); ++j)
      a[i][j] = Rat(datum.simple_roots()[i].coords[j]);
  auto sol = solve_any(a, b);
  if (!sol) throw std::logic_error("coxeter point system inconsistent");
  x.coords = *sol;
  return x;
}

RootDatum levi_at(const RootDatum& datum, const ApartmentPoint& x) {
  datum.check_dim(x);
  std::vector<Weight> integral;
  for (const auto& r : datum.roots())
    if (is_integer(pair(r, x))) integral.push_back(r);
  return RootDatum::sub_datum(datum, integral);
}

ApartmentPoint weakly_coxeter_point(const RootDatum& datum,
                                    const std::vector<int>& levi_selection) {
  std::set<int> sel(levi_selection.begin(), levi_selection.end());
  if (sel.size() != levi_selection.size())
    throw std::invalid_argument("repeated simple-root index");
  for (int i : levi_selection)
    if (i < 0 || i >= datum.rank())
      throw std::invalid_argument("simple-root index out of range");
  if (int(sel.size()) == datum.rank()) return coxeter_point(datum);

  // M = roots supported on the selected simple roots
  std::vector<Weight> m_roots;
  for (const auto& r : datum.roots()) {
    auto exp = simple_expansion(datum, r);
    if (!exp) continue;
    bool inside = true;
    for (int j = 0; j < datum.rank(); ++j)
      if ((*exp)[j] != 0 && !sel.count(j)) inside = false;
    if (inside) m_roots.push_back(r);
  }
  RootDatum m = RootDatum::sub_datum(datum, m_roots);

  // Coxeter point of M inside the span of M's coroots: per component of M,
  // each simple root of that component takes the value 1/h_component.
  ApartmentPoint x0 = zero_point(datum.dim());
  if (!m.is_torus()) {
    auto comps = m.components();
    int mr = m.rank();
    RatMat a(mr, RatVec(mr));
    RatVec b(mr);
    for (int i = 0; i < mr; ++i)
      for (int j = 0; j < mr; ++j) {
        Int acc = 0;
        for (int k = 0; k < datum.dim(); ++k)
          acc += m.simple_roots()[i].coords[k] * m.simple_coroots()[j].coords[k];
        a[i][j] = Rat(acc);
      }
    for (const auto& c : comps)
      for (int i : c.simple_indices) b[i] = Rat(1, c.coxeter_number);
    auto coeffs = solve_any(a, b);
    if (!coeffs) throw std::logic_error("Levi Coxeter system inconsistent");
    for (int j = 0; j < mr; ++j)
      for (int k = 0; k < datum.dim(); ++k)
        x0.coords[k] += (*coeffs)[j] * Rat(m.simple_coroots()[j].coords[k]);
  }

  // kernel of the M-simple-roots: the directions free to perturb
  RatMat rows;
  for (const auto& sr : m.simple_roots()) {
    RatVec row(datum.dim());
    for (int k = 0; k < datum.dim(); ++k) row[k] = Rat(sr.coords[k]);
    rows.push_back(row);
  }
  if (rows.empty()) rows.push_back(RatVec(datum.dim(), Rat(0)));
  auto kernel = rat_kernel(rows, datum.dim());

  auto regular = [&](const ApartmentPoint& p) {
    for (const auto& r : datum.roots())
      if (is_integer(pair(r, p))) return false;
    return true;
  };

  // deterministic search over small rational shifts
  for (int denom : {7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::vector<int> coeff(kernel.size(), 0);
    // iterate coefficient tuples over {1, 2, ..., denom-1} in odometer order
    while (true) {
      size_t pos = 0;
      while (pos < coeff.size() && coeff[pos] == denom - 1) {
        coeff[pos] = 1;
        ++pos;
      }
      if (pos == coeff.size()) break;
      coeff[pos] = std::max(1, coeff[pos] + 1);
      ApartmentPoint x = x0;
      for (size_t kb = 0; kb < kernel.size(); ++kb)
        for (int k = 0; k < datum.dim(); ++k)
          x.coords[k] += Rat(coeff[kb], denom) * kernel[kb][k];
      if (regular(x)) {
        auto pos_check = datum.alcove_position(x);
        if (!pos_check.interior)
          throw std::logic_error("regular point not in an alcove interior");
        return x;
      }
    }
  }
  throw std::runtime_error("no regular perturbation found within bounds");
}

Int point_order(const RootDatum& datum, const ApartmentPoint& x) {
  Int l = 1;
  for (const auto& sr : datum.simple_roots())
    l = boost::multiprecision::lcm(l, denominator(pair(sr, x)));
  return l;
}

AdmissibilityResult equivalued_admissible(const RootDatum& datum,
                                          const ApartmentPoint& x,
                                          const Rat& s,
                                          const WeightedRep& rep) {
  datum.check_dim(x);
  AdmissibilityResult res;
  res.order_l = point_order(datum, x);
  if (!is_integer(s * Rat(res.order_l))) {
    res.reason = "valuation is not a multiple of 1/l for the order l of x";
    return res;
  }
  res.piece = mod_Z_piece(x, s, rep);
  if (res.piece.dim() == 0) {
    res.reason = "no equivalued element with this valuation: empty piece";
    return res;
  }
  bool all_zero = true;
  for (const auto& e : res.piece.entries)
    if (!e.weight.is_zero()) all_zero = false;
  if (all_zero) {
    if (rep.is_adjoint()) {
      res.reason = "piece is central: no regular equivalued element";
      return res;
    }
    res.warning = "piece supported on the zero weight only (central vector)";
  }
  res.ok = true;
  return res;
}

ApartmentPoint resolve_torus_point(const RootDatum& datum,
                                   const TorusSpec& spec) {
  switch (spec.mode) {
    case TorusMode::coxeter:
      return coxeter_point(datum);
    case TorusMode::weakly_coxeter:
      return weakly_coxeter_point(datum, spec.levi_selection);
    case TorusMode::kac: {
      datum.check_dim(spec.kac_x);
      if (spec.kac_l <= 0)
        throw std::invalid_argument("order l must be positive");
      for (const auto& c : spec.kac_x.coords)
        if (!is_integer(c * Rat(spec.kac_l)))
          throw std::invalid_argument("l*x is not integral");
      return spec.kac_x;
    }
  }
  throw std::logic_error("unknown torus mode");
}

}  // namespace asf
