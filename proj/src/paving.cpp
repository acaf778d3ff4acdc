#include "asf/paving.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "asf/torus.hpp"

namespace asf {

void PavingProblem::validate() const {
  datum.check_dim(x);
  datum.check_dim(y);
  if (s < t) throw std::invalid_argument("hypothesis s >= t violated");
  if (rep.dim() == 0) throw std::invalid_argument("empty representation");
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  GradedPiece piece = rep_piece();
  std::set<Weight> piece_weights;
  for (const auto& e : piece.entries) piece_weights.insert(e.weight);
  for (const auto& w : v_support)
    if (!piece_weights.count(w))
      throw std::invalid_argument("support weight outside the graded piece");
}

GradedPiece PavingProblem::rep_piece() const { return mod_Z_piece(x, s, rep); }

std::vector<Weight> PavingProblem::effective_support() const {
  if (!v_support.empty()) return v_support;
  std::vector<Weight> out;
  for (const auto& e : rep_piece().entries) out.push_back(e.weight);
  return out;
}

namespace {

ApartmentPoint reflect(const ApartmentPoint& p, const Weight& alpha,
                       const Int& level, const Coweight& alpha_vee) {
  Rat val = pair(alpha, p) + level;
  ApartmentPoint q = p;
  for (size_t i = 0; i < q.coords.size(); ++i)
    q.coords[i] -= val * Rat(alpha_vee.coords[i]);
  return q;
}

struct OrbitContext {
  std::vector<std::pair<AffineRoot, Coweight>> walls;  // W_x generators
  IntMat central;                                      // central reductions
  bool quotient_central = false;
};

OrbitContext make_context(const PavingProblem& problem) {
  OrbitContext ctx;
  auto pos = problem.datum.alcove_position(problem.x);
  for (const auto& wall : pos.walls) {
    const auto& roots = problem.datum.roots();
    size_t idx = std::find(roots.begin(), roots.end(), wall.gradient) -
                 roots.begin();
    ctx.walls.push_back({wall, problem.datum.coroot(idx)});
  }
  ctx.quotient_central = problem.quotient_by_central;
  if (ctx.quotient_central) ctx.central = problem.datum.central_translation_basis();
  return ctx;
}

ApartmentPoint central_reduce(const OrbitContext& ctx, ApartmentPoint p) {
  for (const auto& v : ctx.central) {
    Rat num(0), den(0);
    for (size_t i = 0; i < p.coords.size(); ++i) {
      num += p.coords[i] * Rat(v[i]);
      den += Rat(v[i] * v[i]);
    }
    Int k = rat_floor(num / den);
    for (size_t i = 0; i < p.coords.size(); ++i)
      p.coords[i] -= Rat(k) * Rat(v[i]);
  }
  return p;
}

// Lexicographically smallest point of the W_x-orbit, reduced modulo central
// translations when requested.
RatVec orbit_key(const OrbitContext& ctx, const ApartmentPoint& start) {
  std::set<RatVec> seen{start.coords};
  std::vector<ApartmentPoint> queue{start};
  while (!queue.empty()) {
    ApartmentPoint p = queue.back();
    queue.pop_back();
    for (const auto& [wall, cov] : ctx.walls) {
      ApartmentPoint q = reflect(p, wall.gradient, wall.level, cov);
      if (seen.insert(q.coords).second) queue.push_back(q);
    }
    if (seen.size() > 100000)
      throw std::runtime_error("point stabilizer orbit too large");
  }
  ApartmentPoint best;
  best.coords = *seen.begin();
  if (ctx.quotient_central) best = central_reduce(ctx, best);
  return best.coords;
}

struct Candidate {
  int shell;  // max abs translation coefficient
  AffineWeylElement c;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.shell != b.shell) return a.shell < b.shell;
  if (a.c.finite.word.size() != b.c.finite.word.size())
    return a.c.finite.word.size() < b.c.finite.word.size();
  if (a.c.translation != b.c.translation)
    return a.c.translation < b.c.translation;
  return a.c.finite.wt_mat < b.c.finite.wt_mat;
}

std::map<RatVec, Candidate> orbit_map(const PavingProblem& problem,
                                      int radius) {
  const auto& datum = problem.datum;
  OrbitContext ctx = make_context(problem);
  IntMat basis = datum.translation_basis();
  int k = int(basis.size());
  std::map<RatVec, Candidate> out;

  // With the central quotient on, representatives are restricted to one
  // fundamental window: the normalizer of an adapted equivalued element
  // permutes the translation-sum classes, so one class carries the whole
  // structure (it is what the lattice oracle enumerates).
  Int class_period = 0;
  if (ctx.quotient_central && !ctx.central.empty())
    for (const auto& e : ctx.central[0]) class_period += e;

  std::vector<int> coeff(k, -radius);
  bool done = false;
  while (!done) {
    IntVec mu(datum.dim(), Int(0));
    int shell = 0;
    for (int i = 0; i < k; ++i) {
      shell = std::max(shell, std::abs(coeff[i]));
      for (int j = 0; j < datum.dim(); ++j) mu[j] += Int(coeff[i]) * basis[i][j];
    }
    bool in_window = true;
    if (class_period != 0) {
      Int smu = 0;
      for (const auto& e : mu) smu += e;
      if (smu % class_period != 0) in_window = false;
    }
    for (const auto& w : in_window ? datum.weyl_elements()
                                   : std::vector<WeylElement>{}) {
      AffineWeylElement c;
      c.finite = w;
      c.translation = mu;
      RatVec key = orbit_key(ctx, c.act(problem.y));
      Candidate cand{shell, c};
      auto it = out.find(key);
      if (it == out.end() || candidate_less(cand, it->second))
        out.insert_or_assign(key, cand);
    }
    int pos = 0;
    while (pos < k && coeff[pos] == radius) {
      coeff[pos] = -radius;
      ++pos;
    }
    if (pos == k)
      done = true;
    else
      ++coeff[pos];
    if (k == 0) done = true;
  }
  return out;
}

bool orbit_less(const AffineWeylElement& a, const AffineWeylElement& b) {
  if (a.translation != b.translation) return a.translation < b.translation;
  return a.finite.wt_mat < b.finite.wt_mat;
}

}  // namespace

std::vector<AffineWeylElement> enumerate_orbits(const PavingProblem& problem,
                                                int radius) {
  auto m = orbit_map(problem, radius);
  std::vector<AffineWeylElement> out;
  for (const auto& [key, cand] : m) out.push_back(cand.c);
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

std::vector<Rat> jump_set(const PavingProblem& problem,
                          const ApartmentPoint& y_prime) {
  std::set<Rat> jumps;
  // levels where the adjoint grading meets the negative side of y'
  for (const auto& alpha : problem.datum.roots()) {
    Rat ax = pair(alpha, problem.x);
    Rat ay = pair(alpha, y_prime);
    for (Int m = rat_floor(-ax) + 1; Rat(m) + ay < 0; ++m) {
      Rat r = ax + Rat(m);
      if (r > 0) jumps.insert(r);
    }
  }
  // levels where the representation grading does
  for (const auto& [lambda, mult] : problem.rep.entries) {
    Rat lx = pair(lambda, problem.x);
    Rat ly = pair(lambda, y_prime);
    for (Int m = rat_floor(problem.s - lx) + 1; Rat(m) + ly < problem.t; ++m) {
      Rat r = lx + Rat(m) - problem.s;
      if (r > 0) jumps.insert(r);
    }
  }
  return {jumps.begin(), jumps.end()};
}

CellRecord cell_data(const PavingProblem& problem, const AffineWeylElement& c,
                     const CoinvariantEngine* engine) {
  const auto& datum = problem.datum;
  CellRecord rec;
  rec.orbit = c;
  rec.y_prime = c.act(problem.y);

  ApartmentPoint pp = rec.y_prime;
  for (size_t i = 0; i < pp.coords.size(); ++i)
    pp.coords[i] -= problem.x.coords[i];

  HessenbergSpec spec(levi_at(datum, problem.x));
  spec.parabolic_point = pp;
  spec.t = problem.t - problem.s;
  spec.rep_piece = problem.rep_piece();
  spec.v_support = problem.effective_support();

  rec.empty = is_empty(spec, engine);
  if (rec.empty) return rec;

  rec.base_dim = hessenberg_dim(spec, engine);
  WeightedRep adj = adjoint_rep(datum);
  Int layer_total = 0;
  for (const auto& r : jump_set(problem, rec.y_prime)) {
    Int rank = bundle_rank_K(problem.x, pp, r, problem.s,
                             problem.t - problem.s, -r, problem.rep, adj);
    rec.layer_ranks.push_back({r, rank});
    layer_total += rank;
  }

  Int dim_s = lattice_quotient_dim(problem.x, Rat(0), rec.y_prime, Rat(0),
                                   adj) -
              lattice_quotient_dim(problem.x, problem.s, rec.y_prime,
                                   problem.t, problem.rep);
  rec.dim_total = dim_s;
  if (Int(*rec.base_dim) + layer_total != dim_s)
    throw std::logic_error("cell dimension formulas disagree");

  if (problem.rep.is_adjoint() && problem.t == 0) {
    Int count = 0;
    for (const auto& alpha : datum.roots()) {
      Rat ax = pair(alpha, problem.x);
      Rat ay = pair(alpha, rec.y_prime);
      // integers m with 0 <= alpha(x)+m < s and alpha(y')+m < 0
      for (Int m = rat_ceil(-ax); Rat(m) + ax < problem.s; ++m)
        if (Rat(m) + ay < 0) count += 1;
    }
    rec.dim_rootcount = count;
    if (count != dim_s)
      throw std::logic_error("affine-root dimension count disagrees");
  }
  return rec;
}

PavingReport assemble(const PavingProblem& problem) {
  problem.validate();
  RootDatum h = levi_at(problem.datum, problem.x);
  std::unique_ptr<CoinvariantEngine> engine;
  if (!h.is_torus()) engine = std::make_unique<CoinvariantEngine>(h);

  const int hard_cap = problem.radius + 9;
  std::map<RatVec, CellRecord> records;
  PavingReport report;
  int radius = problem.radius;
  while (true) {
    auto orbits = orbit_map(problem, radius);
    bool new_nonempty = false;
    for (const auto& [key, cand] : orbits) {
      if (records.count(key)) continue;
      CellRecord rec = cell_data(problem, cand.c, engine.get());
      if (!rec.empty) new_nonempty = true;
      records.emplace(key, std::move(rec));
    }
    report.radius_used = radius;
    if (!problem.auto_extend) break;
    if (radius > problem.radius && !new_nonempty) break;  // saturated
    if (radius >= hard_cap) {
      report.truncated = true;
      break;
    }
    ++radius;
  }

  for (const auto& [key, rec] : records) report.cells.push_back(rec);
  std::sort(report.cells.begin(), report.cells.end(),
            [](const CellRecord& a, const CellRecord& b) {
              return orbit_less(a.orbit, b.orbit);
            });

  report.affine_paving = true;
  Int maxd = -1;
  for (const auto& rec : report.cells) {
    if (rec.empty) continue;
    if (*rec.base_dim != 0) report.affine_paving = false;
    if (*rec.dim_total > maxd) maxd = *rec.dim_total;
  }
  if (maxd >= 0) report.max_dim = maxd;
  if (report.affine_paving && maxd >= 0) {
    report.poly.assign(maxd.convert_to<size_t>() + 1, Int(0));
    for (const auto& rec : report.cells)
      if (!rec.empty) report.poly[rec.dim_total->convert_to<size_t>()] += 1;
  }

  std::ostringstream note;
  note << "enumerated translations up to radius " << report.radius_used;
  if (report.truncated)
    note << "; stopped at the hard cap before saturating";
  else if (problem.auto_extend)
    note << "; saturated";
  report.truncation_note = note.str();
  return report;
}

}  // namespace asf
