#pragma once

#include <map>
#include <string>
#include <vector>

#include "asf/paving.hpp"
#include "asf/rational.hpp"
#include "asf/rootdata.hpp"

namespace asf::oracle {

/// Truncated series over F_q (q prime): coefficients of 1, eps, ..., up to
/// the tracked precision. Arithmetic never decides anything beyond prec;
/// questions that would need more precision throw (never silent).
struct Series {
  int prec = 0;
  std::vector<int> c;  // c.size() == prec, entries in [0, q)
};

struct SeriesContext {
  int q = 2;  // prime
  int N = 8;  // initial precision of all inputs
};

Series series_zero(const SeriesContext& ctx);
Series series_const(const SeriesContext& ctx, int value);
Series series_eps_power(const SeriesContext& ctx, int k);
Series series_add(const SeriesContext& ctx, const Series& a, const Series& b);
Series series_sub(const SeriesContext& ctx, const Series& a, const Series& b);
Series series_mul(const SeriesContext& ctx, const Series& a, const Series& b);
/// Valuation, or prec if zero to the tracked precision.
int series_val(const Series& a);
bool series_is_zero(const Series& a);
/// Exact division by eps^k; false when a provably has a nonzero coefficient
/// below k. Throws on insufficient precision.
bool series_shift_down(const Series& a, int k, Series& out);
/// Inverse of a unit (valuation 0).
Series series_unit_inverse(const SeriesContext& ctx, const Series& a);

struct TruncMatrix {
  SeriesContext ctx;
  int n = 0;
  std::vector<std::vector<Series>> a;  // a[row][col]
};

/// Companion realization of an equivalued element of slope m/n:
/// u e_i = e_{i+1} (i < n), u e_n = eps^m e_1. Requires gcd(m, n) = 1.
TruncMatrix coxeter_element_matrix(int n, int m, int q, int N);
/// Diagonal conjugate of the companion matrix adapted to the principal
/// grading point (u e_i = eps^{c_i} e_{i+1} with equal graded valuations);
/// exists when m = n - 1 (mod n).
TruncMatrix adapted_coxeter_matrix(int n, int m, int q, int N);
/// Scalar eps^k * identity (stabilizes every lattice).
TruncMatrix scalar_matrix(int n, int k, int q, int N);

/// Lattice in Hermite form relative to the standard lattice: upper-triangular
/// basis with diagonal eps^{profile[i]} and entries above the diagonal of
/// degree < profile[row], stored scaled by eps^{bound} so all valuations are
/// nonnegative.
struct LatticeRep {
  IntVec profile;                       // diagonal valuations (unscaled)
  std::vector<std::vector<Series>> basis;  // scaled by eps^bound
  IntVec label;                         // fixed-point label of its orbit
};

struct LatticeWindow {
  Int det_val = 0;  // total valuation of enumerated lattices
  int bound = 0;    // profile entries range over [-bound, bound]
};

/// All Hermite forms in the window with u L inside L, with orbit labels.
/// Throws when the truncation cannot decide a test (N too small); window
/// saturation is the caller's concern (run_oracle grows the bound until the
/// stable set stops changing).
std::vector<LatticeRep> enumerate_stable_lattices(const TruncMatrix& u,
                                                  const LatticeWindow& window);

struct OracleReport {
  int n = 0;
  int m = 0;
  int q = 0;
  int truncation = 0;
  LatticeWindow window;
  std::map<IntVec, Int> per_label;  // orbit label -> lattice count
  Int total = 0;
};

/// Convenience driver: adapted element when possible (labels then align with
/// the paving's grading point), companion otherwise; auto-grown bound.
OracleReport run_oracle(int n, int m, int q, int N = 0);

struct CompareVerdict {
  bool match = false;
  std::string detail;
};

/// Per-orbit and total comparison: each nonempty cell at y' must contribute
/// q^dim lattices at label -y'. The report must be an affine paving over the
/// same fundamental window (central quotient on, base point 0).
CompareVerdict compare_with_paving(const OracleReport& oracle,
                                   const PavingReport& report);

}  // namespace asf::oracle
