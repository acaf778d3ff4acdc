#pragma once

#include <map>
#include <string>
#include <vector>

#include "asf/rational.hpp"

namespace asf {

/// Exponent vector; all monomials in a Poly share the variable count.
using Monomial = std::vector<int>;

int mono_degree(const Monomial& m);
/// Graded lexicographic order: first by total degree, ties broken lex.
bool mono_less(const Monomial& a, const Monomial& b);

struct MonoCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_less(a, b);
  }
};

/// Sparse multivariate polynomial with rational coefficients.
/// Terms are kept in a map under graded lex; zero coefficients are never
/// stored.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  /// Linear form sum_i coeffs[i] * x_i.
  static Poly linear(const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  const std::map<Monomial, Rat, MonoCmp>& terms() const { return terms_; }

  /// Largest term under graded lex.
  std::pair<Monomial, Rat> leading_term() const;

  void add_term(const Monomial& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Substitute x_i -> images[i] (a linear change of variables or any
  /// polynomial map).
  Poly substitute(const std::vector<Poly>& images) const;

  /// Exact division by a nonzero linear form; throws if the remainder is
  /// nonzero.
  Poly divide_by_linear(const Poly& linear_form) const;

  /// Homogeneous component of the given degree.
  Poly component(int degree) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Monomial, Rat, MonoCmp> terms_;
};

/// All monomials in nvars variables of exact total degree d, ascending
/// graded lex.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace asf
