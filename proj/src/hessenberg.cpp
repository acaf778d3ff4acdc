#include "asf/hessenberg.hpp"

#include <set>
#include <stdexcept>

namespace asf {

void HessenbergSpec::validate() const {
  if (t && *t > 0)
    throw std::invalid_argument("Hessenberg threshold must satisfy t <= 0");
  std::set<Weight> piece_weights;
  for (const auto& e : rep_piece.entries) piece_weights.insert(e.weight);
  for (const auto& w : v_support)
    if (!piece_weights.count(w))
      throw std::invalid_argument("support weight outside the representation");
}

int ambient_dim(const HessenbergSpec& spec) {
  int d = 0;
  for (const auto& beta : spec.h_datum.roots())
    if (pair(beta, spec.parabolic_point) < 0) ++d;
  return d;
}

int codim_condition(const HessenbergSpec& spec) {
  return spec.rep_piece.dim() -
         filtration_dim(spec.parabolic_point, spec.t, spec.rep_piece.image());
}

bool is_empty(const HessenbergSpec& spec, const CoinvariantEngine* engine) {
  spec.validate();
  if (codim_condition(spec) == 0) return false;
  if (spec.h_datum.is_torus()) {
    // single candidate point; check the support literally
    for (const auto& w : spec.v_support)
      if (pair(w, spec.parabolic_point) < *spec.t) return true;
    return false;
  }
  std::vector<std::pair<Weight, int>> quotient;
  for (const auto& e : spec.rep_piece.entries)
    if (pair(e.weight, spec.parabolic_point) < *spec.t)
      quotient.push_back({e.weight, e.mult});
  if (engine) return engine->chern_top_class(quotient).is_zero();
  CoinvariantEngine local(spec.h_datum);
  return local.chern_top_class(quotient).is_zero();
}

int hessenberg_dim(const HessenbergSpec& spec,
                   const CoinvariantEngine* engine) {
  if (is_empty(spec, engine))
    throw std::domain_error("empty variety has no dimension");
  return ambient_dim(spec) - codim_condition(spec);
}

Int bundle_rank_K(const ApartmentPoint& x, const ApartmentPoint& y,
                  const Rat& r, const Rat& s, const Rat& t, const Rat& tprime,
                  const WeightedRep& rep, const WeightedRep& adjoint) {
  Rat tpp = t + tprime;
  if (tpp > 0)
    throw std::invalid_argument("bundle rank requires t + t' <= 0");
  auto g_piece = mod_Z_piece(x, r, adjoint);
  auto v_piece = mod_Z_piece(x, r + s, rep);
  Int domain = g_piece.dim() -
               filtration_dim(y, Threshold(tprime), g_piece.image());
  Int codomain = v_piece.dim() -
                 filtration_dim(y, Threshold(tpp), v_piece.image());
  Int rank = domain - codomain;
  if (rank < 0)
    throw std::runtime_error(
        "negative bundle rank: hypotheses violated (vector not good)");
  return rank;
}

}  // namespace asf
