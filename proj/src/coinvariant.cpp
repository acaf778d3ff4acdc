#include "asf/coinvariant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "asf/linalg.hpp"

namespace asf {

Poly weight_form(const Weight& w, int nvars) {
  std::vector<Rat> coeffs(nvars);
  for (int i = 0; i < nvars; ++i) coeffs[i] = Rat(w.coords[i]);
  return Poly::linear(coeffs);
}

Poly weyl_substitute(const WeylElement& w, const Poly& f) {
  int n = f.nvars();
  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    Weight e;
    e.coords.assign(n, Int(0));
    e.coords[i] = 1;
    images.push_back(weight_form(w.apply(e), n));
  }
  return f.substitute(images);
}

Poly reynolds(const RootDatum& datum, const Poly& f) {
  const auto& elts = datum.weyl_elements();
  Poly sum(f.nvars());
  for (const auto& w : elts) sum = sum + weyl_substitute(w, f);
  return sum * Rat(1, Int(elts.size()));
}

Poly positive_root_product(const RootDatum& datum) {
  Poly p = Poly::constant(datum.dim(), 1);
  for (size_t i = 0; i < datum.num_positive(); ++i)
    p = p * weight_form(datum.roots()[i], datum.dim());
  return p;
}

namespace {

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Poly mono_poly(const Monomial& m, const Rat& c) {
  Poly p(int(m.size()));
  p.add_term(m, c);
  return p;
}

// Full normal form against the basis: every term of the result is reducible
// by no leading monomial.
Poly normal_form_vs(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem = f;
  Poly out(f.nvars());
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      auto [gm, gc] = g.leading_term();
      if (mono_divides(gm, m)) {
        Monomial q(m.size());
        for (size_t i = 0; i < m.size(); ++i) q[i] = m[i] - gm[i];
        rem = rem - mono_poly(q, c / gc) * g;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.add_term(m, c);
      rem.add_term(m, -c);
    }
  }
  return out;
}

std::vector<Poly> buchberger(std::vector<Poly> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Poly& p) { return p.is_zero(); }),
              basis.end());
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [mi, ci] = basis[i].leading_term();
    auto [mj, cj] = basis[j].leading_term();
    Monomial lcm = mono_lcm(mi, mj);
    // coprime leading monomials give S-polynomials reducing to zero
    if (mono_degree(lcm) == mono_degree(mi) + mono_degree(mj)) continue;
    Monomial qi(lcm.size()), qj(lcm.size());
    for (size_t k = 0; k < lcm.size(); ++k) {
      qi[k] = lcm[k] - mi[k];
      qj[k] = lcm[k] - mj[k];
    }
    Poly s = mono_poly(qi, Rat(1) / ci) * basis[i] -
             mono_poly(qj, Rat(1) / cj) * basis[j];
    Poly nf = normal_form_vs(s, basis);
    if (!nf.is_zero()) {
      for (size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
      basis.push_back(nf);
    }
  }
  // minimalize
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      auto lmj = basis[j].leading_term().first;
      auto lmi = basis[i].leading_term().first;
      if (mono_divides(lmj, lmi) && !(lmi == lmj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce and normalize to monic
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly nf = normal_form_vs(minimal[i], others);
    if (!nf.is_zero()) reduced.push_back(nf * (Rat(1) / nf.leading_term().second));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& a, const Poly& b) {
              return mono_less(a.leading_term().first, b.leading_term().first);
            });
  return reduced;
}

}  // namespace

CoinvariantEngine::CoinvariantEngine(const RootDatum& datum) : datum_(datum) {
  int n = datum_.dim();
  int maxdeg = 1;
  for (const auto& c : datum_.components())
    maxdeg = std::max<int>(maxdeg, int(c.coxeter_number));

  for (int d = 1; d <= maxdeg; ++d) {
    auto monos = monomials_of_degree(n, d);
    // Reynolds averages of all degree-d monomials span the degree-d
    // invariants; keep a linearly independent set via row reduction.
    RatMat rows;
    for (const auto& m : monos) {
      Poly inv = reynolds(datum_, mono_poly(m, Rat(1)));
      if (inv.is_zero()) continue;
      RatVec row(monos.size(), Rat(0));
      for (const auto& [mm, c] : inv.terms()) {
        size_t idx = std::lower_bound(monos.begin(), monos.end(), mm,
                                      mono_less) -
                     monos.begin();
        row[idx] = c;
      }
      rows.push_back(std::move(row));
    }
    if (rows.empty()) continue;
    int rank = rat_row_reduce(rows);
    for (int r = 0; r < rank; ++r) {
      Poly inv(n);
      for (size_t c = 0; c < monos.size(); ++c)
        if (rows[r][c] != 0) inv.add_term(monos[c], rows[r][c]);
      generators_.push_back(inv);
    }
  }

  groebner_ = buchberger(generators_);

  // count standard monomials; the quotient must have dimension |W|
  quotient_dim_ = 0;
  int top = int(datum_.num_positive()) + n + 2;
  for (int d = 0; d <= top + 1; ++d) {
    if (d > top)
      throw std::runtime_error("coinvariant quotient is not finite over I");
    Int at_degree = 0;
    for (const auto& m : monomials_of_degree(n, d)) {
      bool standard = true;
      for (const auto& g : groebner_)
        if (mono_divides(g.leading_term().first, m)) {
          standard = false;
          break;
        }
      if (standard) at_degree += 1;
    }
    if (at_degree == 0) break;
    quotient_dim_ += at_degree;
  }
  if (quotient_dim_ != datum_.weyl_order())
    throw std::runtime_error("coinvariant quotient dimension mismatch");
}

Poly CoinvariantEngine::normal_form(const Poly& f) const {
  return normal_form_vs(f, groebner_);
}

Poly CoinvariantEngine::chern_top_class(
    const std::vector<std::pair<Weight, int>>& weights) const {
  Poly p = Poly::constant(nvars(), 1);
  for (const auto& [w, mult] : weights)
    for (int k = 0; k < mult; ++k) p = p * weight_form(w, nvars());
  return normal_form(p);
}

}  // namespace asf
