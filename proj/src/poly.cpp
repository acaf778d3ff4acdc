#include "asf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asf {

int mono_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return a < b;  // lex on exponent vectors
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::linear(const std::vector<Rat>& coeffs) {
  Poly p(int(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_degree(terms_.begin()->first);
  return mono_degree(terms_.rbegin()->first) == d;
}

std::pair<Monomial, Rat> Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (int(m.size()) != nvars_)
    throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(nvars_);
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (int(images.size()) != nvars_)
    throw std::invalid_argument("substitute arity mismatch");
  int out_vars = images.empty() ? nvars_ : images[0].nvars();
  Poly result(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) term = term * images[i];
    result = result + term;
  }
  return result;
}

Poly Poly::divide_by_linear(const Poly& linear_form) const {
  if (linear_form.is_zero() || linear_form.degree() != 1 ||
      !linear_form.is_homogeneous())
    throw std::invalid_argument("divisor must be a nonzero linear form");
  auto [lm, lc] = linear_form.leading_term();
  int var = 0;
  while (lm[var] == 0) ++var;
  Poly rem = *this;
  Poly quot(nvars_);
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term();
    if (m[var] == 0) throw std::domain_error("division is not exact");
    Monomial qm = m;
    qm[var] -= 1;
    Poly qterm(nvars_);
    qterm.add_term(qm, c / lc);
    quot = quot + qterm;
    rem = rem - qterm * linear_form;
  }
  return quot;
}

Poly Poly::component(int degree) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == degree) r.terms_.emplace(m, c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(it->second);
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << i;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

static void mono_rec(int nvars, int pos, int remaining, Monomial& cur,
                     std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    mono_rec(nvars, pos + 1, remaining - e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Monomial cur(nvars, 0);
  mono_rec(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

}  // namespace asf
