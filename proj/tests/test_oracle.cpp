#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asf/oracle.hpp"
#include "asf/torus.hpp"

using namespace asf;
using namespace asf::oracle;

TEST_CASE("truncated series arithmetic") {
  SeriesContext ctx{5, 6};
  auto a = series_add(ctx, series_const(ctx, 3), series_eps_power(ctx, 2));
  CHECK(series_val(a) == 0);
  auto b = series_eps_power(ctx, 1);
  auto p = series_mul(ctx, a, b);
  CHECK(series_val(p) == 1);
  CHECK(p.c[1] == 3);
  CHECK(p.c[3] == 1);

  auto inv = series_unit_inverse(ctx, a);
  auto one = series_mul(ctx, a, inv);
  CHECK(one.c[0] == 1);
  for (int i = 1; i < one.prec; ++i) CHECK(one.c[i] == 0);

  Series down;
  CHECK(series_shift_down(p, 1, down));
  CHECK(down.prec == 5);
  CHECK(down.c[0] == 3);
  CHECK(!series_shift_down(a, 1, down));  // constant term nonzero

  CHECK_THROWS(series_eps_power(ctx, 6));       // beyond truncation
  CHECK_THROWS(series_shift_down(p, 7, down));  // cannot certify
  CHECK_THROWS(series_unit_inverse(ctx, series_eps_power(ctx, 1)));
}

TEST_CASE("equivalued matrices") {
  auto u = coxeter_element_matrix(2, 3, 2, 8);
  CHECK(series_is_zero(u.a[0][0]));
  CHECK(series_val(u.a[0][1]) == 3);  // eps^3 corner
  CHECK(u.a[1][0].c[0] == 1);

  auto u3 = coxeter_element_matrix(3, 2, 2, 8);
  CHECK(u3.a[1][0].c[0] == 1);
  CHECK(u3.a[2][1].c[0] == 1);
  CHECK(series_val(u3.a[0][2]) == 2);

  CHECK_THROWS(coxeter_element_matrix(2, 4, 2, 8));  // gcd
  CHECK_THROWS(coxeter_element_matrix(2, 3, 4, 8));  // q not prime

  auto a = adapted_coxeter_matrix(2, 3, 2, 8);
  CHECK(series_val(a.a[1][0]) == 2);
  CHECK(series_val(a.a[0][1]) == 1);
  auto a3 = adapted_coxeter_matrix(3, 2, 2, 8);
  CHECK(series_val(a3.a[1][0]) == 1);
  CHECK(series_val(a3.a[2][1]) == 1);
  CHECK(series_val(a3.a[0][2]) == 0);
  CHECK_THROWS(adapted_coxeter_matrix(3, 4, 2, 8));  // 4 != 2 mod 3
}

TEST_CASE("scalar element stabilizes every lattice in the window") {
  auto u = scalar_matrix(2, 1, 2, 8);
  auto all = enumerate_stable_lattices(u, LatticeWindow{Int(0), 1});
  // profiles (-1,1), (0,0), (1,-1) with q^2 + 1 + q Hermite forms
  CHECK(all.size() == 7);
}

TEST_CASE("gl(2) slope 3/2 hand counts") {
  for (int q : {2, 3, 5}) {
    auto report = run_oracle(2, 3, q);
    CHECK(report.total == 1 + q);
    REQUIRE(report.per_label.size() == 2);
    CHECK(report.per_label.at(IntVec{Int(0), Int(0)}) == 1);
    CHECK(report.per_label.at(IntVec{Int(-1), Int(1)}) == q);
  }
}

TEST_CASE("gl(3) slope 2/3 counts") {
  for (int q : {2, 3}) {
    auto report = run_oracle(3, 2, q);
    CHECK(report.total == 1 + q);
    CHECK(report.per_label.size() == 2);
  }
}

TEST_CASE("truncation stability N vs N+2") {
  auto a = run_oracle(2, 3, 2, 12);
  auto b = run_oracle(2, 3, 2, 14);
  CHECK(a.per_label == b.per_label);
  auto c = run_oracle(3, 2, 3, 12);
  auto d = run_oracle(3, 2, 3, 14);
  CHECK(c.per_label == d.per_label);
}

TEST_CASE("conjugation consistency: companion vs adapted totals") {
  for (int q : {2, 3}) {
    auto u = coxeter_element_matrix(2, 3, q, 14);
    auto a = adapted_coxeter_matrix(2, 3, q, 14);
    auto su = enumerate_stable_lattices(u, LatticeWindow{Int(0), 3});
    auto sa = enumerate_stable_lattices(a, LatticeWindow{Int(0), 3});
    CHECK(su.size() == sa.size());
  }
}

namespace {

PavingProblem gl_problem(int n, int m) {
  auto gl = RootDatum::build(Family::A, n - 1, Isogeny::gl);
  PavingProblem p(gl);
  p.rep = adjoint_rep(gl);
  p.x = coxeter_point(gl);
  p.s = Rat(m, n);
  p.y = zero_point(n);
  p.t = Rat(0);
  p.quotient_by_central = true;
  return p;
}

}  // namespace

TEST_CASE("cross-validation against the paving") {
  auto report2 = assemble(gl_problem(2, 3));
  for (int q : {2, 3, 5}) {
    auto verdict = compare_with_paving(run_oracle(2, 3, q), report2);
    CHECK_MESSAGE(verdict.match, verdict.detail);
  }
  auto report3 = assemble(gl_problem(3, 2));
  for (int q : {2, 3}) {
    auto verdict = compare_with_paving(run_oracle(3, 2, q), report3);
    CHECK_MESSAGE(verdict.match, verdict.detail);
  }
}

TEST_CASE("corrupted report is flagged with the offending orbit") {
  auto report = assemble(gl_problem(2, 3));
  auto oracle_report = run_oracle(2, 3, 2);
  PavingReport bad = report;
  for (auto& cell : bad.cells)
    if (!cell.empty && *cell.dim_total == 1) *cell.dim_total = 2;
  auto verdict = compare_with_paving(oracle_report, bad);
  CHECK(!verdict.match);
  CHECK(verdict.detail.find("label (-1,1)") != std::string::npos);

  PavingReport not_paving = report;
  not_paving.affine_paving = false;
  CHECK(!compare_with_paving(oracle_report, not_paving).match);
}
