#include "asf/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "asf/linalg.hpp"

namespace asf {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string isogeny_name(Isogeny i) {
  switch (i) {
    case Isogeny::simply_connected: return "simply_connected";
    case Isogeny::adjoint: return "adjoint";
    case Isogeny::gl: return "gl";
  }
  return "?";
}

Weight Weight::operator-() const {
  Weight w;
  w.coords.reserve(coords.size());
  for (const auto& c : coords) w.coords.push_back(-c);
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < coords.size(); ++i) w.coords[i] -= o.coords[i];
  return w;
}

bool Weight::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Coweight Coweight::operator+(const Coweight& o) const {
  Coweight c = *this;
  for (size_t i = 0; i < coords.size(); ++i) c.coords[i] += o.coords[i];
  return c;
}

ApartmentPoint zero_point(int dim) {
  ApartmentPoint p;
  p.coords.assign(dim, Rat(0));
  return p;
}

Int pair(const Weight& w, const Coweight& c) {
  if (w.coords.size() != c.coords.size())
    throw std::invalid_argument("pairing dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < w.coords.size(); ++i) s += w.coords[i] * c.coords[i];
  return s;
}

Rat pair(const Weight& w, const ApartmentPoint& p) {
  if (w.coords.size() != p.coords.size())
    throw std::invalid_argument("pairing dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < w.coords.size(); ++i)
    s += Rat(w.coords[i]) * p.coords[i];
  return s;
}

Rat affine_root_value(const AffineRoot& ar, const ApartmentPoint& x) {
  return pair(ar.gradient, x) + Rat(ar.level);
}

namespace {

IntMat identity_mat(int n) {
  IntMat m(n, IntVec(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  IntVec out(m.size(), Int(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size();
  IntMat out(n, IntVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMat mat_transpose(const IntMat& m) {
  size_t n = m.size();
  IntMat out(n, IntVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[j][i] = m[i][j];
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
  return Weight{mat_apply(wt_mat, w.coords)};
}

Coweight WeylElement::apply(const Coweight& c) const {
  return Coweight{mat_apply(cowt_mat, c.coords)};
}

ApartmentPoint WeylElement::apply(const ApartmentPoint& p) const {
  ApartmentPoint out;
  out.coords.assign(p.coords.size(), Rat(0));
  for (size_t i = 0; i < cowt_mat.size(); ++i)
    for (size_t j = 0; j < p.coords.size(); ++j)
      out.coords[i] += Rat(cowt_mat[i][j]) * p.coords[j];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
  WeylElement e;
  e.wt_mat = mat_mul(wt_mat, o.wt_mat);
  e.cowt_mat = mat_mul(cowt_mat, o.cowt_mat);
  e.word = word;
  e.word.insert(e.word.end(), o.word.begin(), o.word.end());
  return e;
}

WeylElement WeylElement::inverse() const {
  WeylElement e;
  e.wt_mat = mat_transpose(cowt_mat);
  e.cowt_mat = mat_transpose(wt_mat);
  e.word.assign(word.rbegin(), word.rend());
  return e;
}

bool WeylElement::is_identity() const {
  return wt_mat == identity_mat(static_cast<int>(wt_mat.size()));
}

WeylElement WeylElement::identity(int dim) {
  WeylElement e;
  e.wt_mat = identity_mat(dim);
  e.cowt_mat = identity_mat(dim);
  return e;
}

ApartmentPoint AffineWeylElement::act(const ApartmentPoint& y) const {
  ApartmentPoint p = finite.apply(y);
  for (size_t i = 0; i < p.coords.size(); ++i) p.coords[i] += Rat(translation[i]);
  return p;
}

AffineWeylElement AffineWeylElement::compose(const AffineWeylElement& o) const {
  // (t_a w_a)(t_b w_b) = t_{a + w_a(b)} (w_a w_b)
  AffineWeylElement e;
  e.finite = finite.compose(o.finite);
  e.translation = translation;
  IntVec wb = mat_apply(finite.cowt_mat, o.translation);
  for (size_t i = 0; i < e.translation.size(); ++i) e.translation[i] += wb[i];
  return e;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement e;
  e.finite = finite.inverse();
  IntVec t = mat_apply(e.finite.cowt_mat, translation);
  e.translation.resize(t.size());
  for (size_t i = 0; i < t.size(); ++i) e.translation[i] = -t[i];
  return e;
}

AffineRoot AffineWeylElement::apply(const AffineRoot& ar) const {
  // (c.ar)(p) = ar(c^{-1} p) for c = t_mu w:
  //   gradient = w(alpha), level = n - <w(alpha), mu>.
  AffineRoot out;
  out.gradient = finite.apply(ar.gradient);
  Int shift = 0;
  for (size_t i = 0; i < translation.size(); ++i)
    shift += out.gradient.coords[i] * translation[i];
  out.level = ar.level - shift;
  return out;
}

AffineWeylElement AffineWeylElement::from_translation(const IntVec& mu,
                                                      int dim) {
  AffineWeylElement e;
  e.finite = WeylElement::identity(dim);
  e.translation = mu;
  return e;
}

AffineWeylElement AffineWeylElement::from_weyl(const WeylElement& w) {
  AffineWeylElement e;
  e.finite = w;
  e.translation.assign(w.wt_mat.size(), Int(0));
  return e;
}

namespace {

IntMat cartan_matrix(Family family, int rank) {
  IntMat c(rank, IntVec(rank, Int(0)));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  switch (family) {
    case Family::A:
      chain(rank);
      break;
    case Family::B:  // last simple root short
      chain(rank);
      c[rank - 2][rank - 1] = -2;
      break;
    case Family::C:  // last simple root long
      chain(rank);
      c[rank - 1][rank - 2] = -2;
      break;
    case Family::D:
      chain(rank - 1);
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 3] = -1;
      break;
    case Family::G2:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

size_t expected_root_count(Family family, int rank) {
  switch (family) {
    case Family::A: return static_cast<size_t>(rank) * (rank + 1);
    case Family::B:
    case Family::C: return 2u * rank * rank;
    case Family::D: return 2u * rank * (rank - 1);
    case Family::G2: return 12;
  }
  return 0;
}

}  // namespace

RootDatum RootDatum::build(Family family, int rank, Isogeny isogeny) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (isogeny == Isogeny::gl && family != Family::A)
    throw std::invalid_argument("isogeny gl requires family A");
  switch (family) {
    case Family::A:
      if (rank > 8) throw std::invalid_argument("family A supports rank <= 8");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2 || rank > 8)
        throw std::invalid_argument("families B,C support rank 2..8");
      break;
    case Family::D:
      if (rank < 3 || rank > 8)
        throw std::invalid_argument("family D supports rank 3..8");
      break;
    case Family::G2:
      if (rank != 2) throw std::invalid_argument("G2 has rank 2");
      break;
  }

  RootDatum d;
  d.family_ = family;
  d.isogeny_ = isogeny;
  d.cartan_ = cartan_matrix(family, rank);
  d.dim_ = (isogeny == Isogeny::gl) ? rank + 1 : rank;

  d.simple_roots_.resize(rank);
  d.simple_coroots_.resize(rank);
  if (isogeny == Isogeny::gl) {
    for (int i = 0; i < rank; ++i) {
      IntVec v(d.dim_, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      d.simple_roots_[i].coords = v;
      d.simple_coroots_[i].coords = v;
    }
  } else if (isogeny == Isogeny::simply_connected) {
    // X_* basis: simple coroots; X^* dual basis: fundamental weights.
    for (int i = 0; i < rank; ++i) {
      IntVec e(d.dim_, Int(0));
      e[i] = 1;
      d.simple_coroots_[i].coords = e;
      IntVec a(d.dim_);
      for (int j = 0; j < rank; ++j) a[j] = d.cartan_[i][j];
      d.simple_roots_[i].coords = a;
    }
  } else {
    // adjoint: X^* basis: simple roots; X_* dual basis: fundamental coweights.
    for (int i = 0; i < rank; ++i) {
      IntVec e(d.dim_, Int(0));
      e[i] = 1;
      d.simple_roots_[i].coords = e;
      IntVec a(d.dim_);
      for (int j = 0; j < rank; ++j) a[j] = d.cartan_[j][i];
      d.simple_coroots_[i].coords = a;
    }
  }

  d.generate_roots();
  if (d.roots_.size() != expected_root_count(family, rank))
    throw std::logic_error("root count mismatch for declared family");
  return d;
}

RootDatum RootDatum::sub_datum(const RootDatum& parent,
                               const std::vector<Weight>& roots) {
  RootDatum d;
  d.isogeny_ = parent.isogeny_;
  d.dim_ = parent.dim_;
  if (roots.empty()) return d;  // torus

  // Positive roots of the subsystem: those positive in the parent.
  std::set<Weight> root_set(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (!parent.is_root(r))
      throw std::invalid_argument("sub_datum: not a root of the parent");
    if (root_set.count(-r) == 0)
      throw std::invalid_argument("sub_datum: root set not closed under negation");
  }
  std::vector<Weight> pos;
  for (size_t i = 0; i < parent.num_positive(); ++i) {
    if (root_set.count(parent.roots()[i])) pos.push_back(parent.roots()[i]);
  }
  // Simple = positive, not a sum of two positives.
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      Weight diff = r - a;
      if (!a.is_zero() && !(a == r) &&
          std::find(pos.begin(), pos.end(), diff) != pos.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      d.simple_roots_.push_back(r);
      size_t idx = 0;
      while (!(parent.roots()[idx] == r)) ++idx;
      d.simple_coroots_.push_back(parent.coroot(idx));
    }
  }
  int rank = static_cast<int>(d.simple_roots_.size());
  d.cartan_.assign(rank, IntVec(rank, Int(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      d.cartan_[i][j] = pair(d.simple_roots_[i], d.simple_coroots_[j]);
  d.generate_roots();
  if (d.roots_.size() != 2 * pos.size())
    throw std::logic_error("sub_datum: generated roots differ from given set");
  return d;
}

void RootDatum::generate_roots() {
  roots_.clear();
  coroots_.clear();
  if (simple_roots_.empty()) return;
  int rank = static_cast<int>(simple_roots_.size());

  std::map<Weight, Coweight> seen;
  std::deque<std::pair<Weight, Coweight>> queue;
  for (int i = 0; i < rank; ++i) {
    seen.emplace(simple_roots_[i], simple_coroots_[i]);
    queue.emplace_back(simple_roots_[i], simple_coroots_[i]);
  }
  while (!queue.empty()) {
    auto [r, cr] = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Int k = pair(r, simple_coroots_[i]);
      Weight nr = r;
      for (int j = 0; j < dim_; ++j)
        nr.coords[j] -= k * simple_roots_[i].coords[j];
      Int kc = pair(simple_roots_[i], cr);
      Coweight ncr = cr;
      for (int j = 0; j < dim_; ++j)
        ncr.coords[j] -= kc * simple_coroots_[i].coords[j];
      if (seen.emplace(nr, ncr).second) queue.emplace_back(nr, ncr);
      Weight neg = -r;
      Coweight negc;
      negc.coords.resize(dim_);
      for (int j = 0; j < dim_; ++j) negc.coords[j] = -cr.coords[j];
      if (seen.emplace(neg, negc).second) queue.emplace_back(neg, negc);
    }
  }

  // Height via a rational point p with alpha_i(p) = 1 for all simple i.
  RatMat cart(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cart[i][j] = Rat(cartan_[i][j]);
  auto coeffs = rat_solve(cart, RatVec(rank, Rat(1)));
  if (!coeffs) throw std::logic_error("Cartan matrix singular");
  ApartmentPoint p = zero_point(dim_);
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < dim_; ++k)
      p.coords[k] += (*coeffs)[j] * Rat(simple_coroots_[j].coords[k]);

  std::vector<std::pair<Rat, std::pair<Weight, Coweight>>> pos;
  for (const auto& [r, cr] : seen) {
    Rat h = pair(r, p);
    if (h > 0) pos.push_back({h, {r, cr}});
  }
  std::sort(pos.begin(), pos.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second.first < b.second.first;
            });
  if (2 * pos.size() != seen.size())
    throw std::logic_error("root system not symmetric under negation");
  for (const auto& [h, rc] : pos) {
    roots_.push_back(rc.first);
    coroots_.push_back(rc.second);
  }
  for (const auto& [h, rc] : pos) {
    roots_.push_back(-rc.first);
    Coweight negc;
    negc.coords.resize(dim_);
    for (int j = 0; j < dim_; ++j) negc.coords[j] = -rc.second.coords[j];
    coroots_.push_back(negc);
  }
}

bool RootDatum::is_root(const Weight& w) const {
  return std::find(roots_.begin(), roots_.end(), w) != roots_.end();
}

Int RootDatum::weyl_order() const {
  if (weyl_order_) return *weyl_order_;
  if (family_) {
    int n = rank();
    Int order;
    switch (*family_) {
      case Family::A: order = factorial(n + 1); break;
      case Family::B:
      case Family::C: order = factorial(n) << n; break;
      case Family::D: order = factorial(n) << (n - 1); break;
      case Family::G2: order = 12; break;
    }
    weyl_order_ = order;
  } else {
    weyl_order_ = Int(weyl_elements().size());
  }
  return *weyl_order_;
}

WeylElement RootDatum::simple_reflection(int i) const {
  WeylElement e = WeylElement::identity(dim_);
  e.word = {i};
  const auto& a = simple_roots_[i].coords;
  const auto& av = simple_coroots_[i].coords;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      e.wt_mat[r][c] -= av[c] * a[r];
      e.cowt_mat[r][c] -= a[c] * av[r];
    }
  return e;
}

WeylElement RootDatum::weyl_from_word(const std::vector<int>& word) const {
  WeylElement e = WeylElement::identity(dim_);
  for (int i : word) e = e.compose(simple_reflection(i));
  return e;
}

const std::vector<WeylElement>& RootDatum::weyl_elements() const {
  if (!weyl_.empty() || simple_roots_.empty()) {
    if (weyl_.empty()) weyl_.push_back(WeylElement::identity(dim_));
    return weyl_;
  }
  if (family_ && weyl_order() > 100000)
    throw std::runtime_error("Weyl group too large to enumerate");
  std::set<IntMat> seen;
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(dim_);
  seen.insert(id.wt_mat);
  queue.push_back(id);
  weyl_.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      // Right multiplication; BFS guarantees the stored words are reduced.
      WeylElement nw = w.compose(simple_reflection(i));
      if (seen.insert(nw.wt_mat).second) {
        queue.push_back(nw);
        weyl_.push_back(nw);
        if (weyl_.size() > 100000)
          throw std::runtime_error("Weyl group too large to enumerate");
      }
    }
  }
  return weyl_;
}

WeylElement RootDatum::coxeter_element() const {
  std::vector<int> word(rank());
  for (int i = 0; i < rank(); ++i) word[i] = i;
  return weyl_from_word(word);
}

int RootDatum::coxeter_number() const {
  WeylElement c = coxeter_element();
  WeylElement w = c;
  for (int k = 1; k <= 100; ++k) {
    if (w.is_identity()) return k;
    w = w.compose(c);
  }
  throw std::logic_error("Coxeter element order exceeds bound");
}

std::vector<int> RootDatum::longest_word() const {
  // Sweep a strictly dominant point to the antidominant chamber.
  RatMat cart(rank(), RatVec(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) cart[i][j] = Rat(cartan_[i][j]);
  auto coeffs = rat_solve(cart, RatVec(rank(), Rat(1)));
  ApartmentPoint p = zero_point(dim_);
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < dim_; ++k)
      p.coords[k] += (*coeffs)[j] * Rat(simple_coroots_[j].coords[k]);

  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (pair(simple_roots_[i], p) > 0) {
        p = simple_reflection(i).apply(p);
        applied.push_back(i);
        moved = true;
        break;
      }
    }
  }
  std::reverse(applied.begin(), applied.end());
  if (applied.size() != num_positive())
    throw std::logic_error("longest word length mismatch");
  return applied;
}

AlcovePosition RootDatum::alcove_position(const ApartmentPoint& x) const {
  check_dim(x);
  AlcovePosition pos;
  for (const auto& r : roots_) {
    Rat v = pair(r, x);
    if (is_integer(v)) {
      Int lvl = -numerator(v);
      pos.walls.push_back(AffineRoot{r, lvl});
    }
  }
  pos.interior = pos.walls.empty();
  std::sort(pos.walls.begin(), pos.walls.end());
  return pos;
}

IntMat RootDatum::translation_basis() const {
  IntMat basis;
  if (isogeny_ == Isogeny::gl) {
    for (int i = 0; i < dim_; ++i) {
      IntVec e(dim_, Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    for (const auto& c : simple_coroots_) basis.push_back(c.coords);
  }
  return basis;
}

IntMat RootDatum::central_translation_basis() const {
  IntMat tbasis = translation_basis();
  if (tbasis.empty() || simple_roots_.empty()) return tbasis;
  // Kernel of the simple-root pairing on the translation lattice.
  RatMat g(rank(), RatVec(tbasis.size()));
  for (int i = 0; i < rank(); ++i)
    for (size_t k = 0; k < tbasis.size(); ++k)
      g[i][k] = Rat(pair(simple_roots_[i], Coweight{tbasis[k]}));
  auto kern = rat_kernel(g, static_cast<int>(tbasis.size()));
  IntMat out;
  for (const auto& v : kern) {
    Int lcm = 1;
    for (const auto& r : v) lcm = boost::multiprecision::lcm(lcm, denominator(r));
    IntVec z(dim_, Int(0));
    for (size_t k = 0; k < tbasis.size(); ++k) {
      Int m = numerator(v[k] * Rat(lcm));
      for (int j = 0; j < dim_; ++j) z[j] += m * tbasis[k][j];
    }
    Int g2 = 0;
    for (const auto& c : z) g2 = boost::multiprecision::gcd(g2, c);
    if (g2 > 1)
      for (auto& c : z) c /= g2;
    out.push_back(z);
  }
  return out;
}

std::vector<RootDatum::Component> RootDatum::components() const {
  int n = rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> queue{i};
    comp[i] = ncomp;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < n; ++b) {
        if (comp[b] < 0 && cartan_[a][b] != 0) {
          comp[b] = ncomp;
          queue.push_back(b);
        }
      }
    }
    ++ncomp;
  }
  // Count positive roots per component via simple-root expansion.
  std::vector<int> pos_count(ncomp, 0);
  RatMat sys(dim_, RatVec(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < dim_; ++k) sys[k][j] = Rat(simple_roots_[j].coords[k]);
  for (size_t ri = 0; ri < num_positive(); ++ri) {
    // Expand root in simple roots: solve via pairing with coroots instead of
    // a full linear solve: <beta, alpha_j^vee> determines the expansion
    // through the inverse Cartan matrix.
    RatMat cart(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cart[i][j] = Rat(cartan_[j][i]);
    RatVec rhs(n);
    for (int j = 0; j < n; ++j)
      rhs[j] = Rat(pair(roots_[ri], simple_coroots_[j]));
    auto c = rat_solve(cart, rhs);
    if (!c) throw std::logic_error("component expansion failed");
    for (int j = 0; j < n; ++j) {
      if ((*c)[j] != 0) {
        pos_count[comp[j]] += 1;
        break;
      }
    }
  }
  std::vector<Component> out(ncomp);
  for (int j = 0; j < n; ++j) out[comp[j]].simple_indices.push_back(j);
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    int crank = static_cast<int>(out[cidx].simple_indices.size());
    out[cidx].coxeter_number = 2 * pos_count[cidx] / crank;
  }
  return out;
}

void RootDatum::check_dim(const ApartmentPoint& p) const {
  if (static_cast<int>(p.coords.size()) != dim_)
    throw std::invalid_argument("apartment point dimension mismatch");
}

void RootDatum::check_dim(const Weight& w) const {
  if (static_cast<int>(w.coords.size()) != dim_)
    throw std::invalid_argument("weight dimension mismatch");
}

}  // namespace asf
