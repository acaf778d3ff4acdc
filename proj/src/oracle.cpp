#include "asf/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asf::oracle {

namespace {

void check_prime(int q) {
  if (q < 2) throw std::invalid_argument("q must be a prime");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("q must be a prime");
}

int mod_q(long long v, int q) {
  int r = int(v % q);
  return r < 0 ? r + q : r;
}

[[noreturn]] void overflow() {
  throw std::runtime_error("truncation overflow: increase N");
}

}  // namespace

Series series_zero(const SeriesContext& ctx) {
  return Series{ctx.N, std::vector<int>(ctx.N, 0)};
}

Series series_const(const SeriesContext& ctx, int value) {
  Series s = series_zero(ctx);
  s.c[0] = mod_q(value, ctx.q);
  return s;
}

Series series_eps_power(const SeriesContext& ctx, int k) {
  if (k >= ctx.N) overflow();
  Series s = series_zero(ctx);
  s.c[k] = 1;
  return s;
}

Series series_add(const SeriesContext& ctx, const Series& a, const Series& b) {
  Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.resize(r.prec);
  for (int i = 0; i < r.prec; ++i) r.c[i] = mod_q(a.c[i] + b.c[i], ctx.q);
  return r;
}

Series series_sub(const SeriesContext& ctx, const Series& a, const Series& b) {
  Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.resize(r.prec);
  for (int i = 0; i < r.prec; ++i) r.c[i] = mod_q(a.c[i] - b.c[i], ctx.q);
  return r;
}

Series series_mul(const SeriesContext& ctx, const Series& a, const Series& b) {
  Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.assign(r.prec, 0);
  for (int i = 0; i < std::min(a.prec, r.prec); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j < r.prec && j < b.prec; ++j)
      r.c[i + j] = mod_q(r.c[i + j] + (long long)a.c[i] * b.c[j], ctx.q);
  }
  return r;
}

int series_val(const Series& a) {
  for (int i = 0; i < a.prec; ++i)
    if (a.c[i] != 0) return i;
  return a.prec;
}

bool series_is_zero(const Series& a) { return series_val(a) == a.prec; }

bool series_shift_down(const Series& a, int k, Series& out) {
  if (k > a.prec) overflow();
  for (int i = 0; i < k; ++i)
    if (a.c[i] != 0) return false;
  out.prec = a.prec - k;
  out.c.assign(a.c.begin() + k, a.c.end());
  return true;
}

Series series_unit_inverse(const SeriesContext& ctx, const Series& a) {
  if (a.prec < 1) overflow();
  if (a.c[0] == 0) throw std::invalid_argument("not a unit");
  int inv0 = 0;
  for (int t = 1; t < ctx.q; ++t)
    if (mod_q((long long)t * a.c[0], ctx.q) == 1) inv0 = t;
  Series r;
  r.prec = a.prec;
  r.c.assign(r.prec, 0);
  r.c[0] = inv0;
  for (int k = 1; k < r.prec; ++k) {
    long long acc = 0;
    for (int i = 1; i <= k; ++i)
      acc += (long long)(i < a.prec ? a.c[i] : 0) * r.c[k - i];
    r.c[k] = mod_q(-(long long)inv0 * mod_q(acc, ctx.q), ctx.q);
  }
  return r;
}

TruncMatrix coxeter_element_matrix(int n, int m, int q, int N) {
  check_prime(q);
  if (n < 1 || m < 1 || std::gcd(m, n) != 1)
    throw std::invalid_argument("need n, m >= 1 with gcd(m, n) = 1");
  SeriesContext ctx{q, N};
  TruncMatrix u{ctx, n, {}};
  u.a.assign(n, std::vector<Series>(n, series_zero(ctx)));
  for (int i = 0; i + 1 < n; ++i) u.a[i + 1][i] = series_const(ctx, 1);
  u.a[0][n - 1] = series_eps_power(ctx, m);
  return u;
}

TruncMatrix adapted_coxeter_matrix(int n, int m, int q, int N) {
  check_prime(q);
  if (n < 1 || m < 1 || std::gcd(m, n) != 1)
    throw std::invalid_argument("need n, m >= 1 with gcd(m, n) = 1");
  if ((m + 1) % n != 0)
    throw std::invalid_argument("adapted form needs m = n - 1 (mod n)");
  // u e_i = eps^{c_i} e_{i+1} with graded valuations all equal to m/n at the
  // principal grading point: c_i = (m+1)/n for i < n, c_n = (m-n+1)/n.
  SeriesContext ctx{q, N};
  TruncMatrix u{ctx, n, {}};
  u.a.assign(n, std::vector<Series>(n, series_zero(ctx)));
  int c = (m + 1) / n;
  for (int i = 0; i + 1 < n; ++i) u.a[i + 1][i] = series_eps_power(ctx, c);
  u.a[0][n - 1] = series_eps_power(ctx, c - 1);
  return u;
}

TruncMatrix scalar_matrix(int n, int k, int q, int N) {
  check_prime(q);
  SeriesContext ctx{q, N};
  TruncMatrix u{ctx, n, {}};
  u.a.assign(n, std::vector<Series>(n, series_zero(ctx)));
  for (int i = 0; i < n; ++i) u.a[i][i] = series_eps_power(ctx, k);
  return u;
}

namespace {

using Basis = std::vector<std::vector<Series>>;  // [row][col]

// u L inside L for the scaled Hermite basis: solve the upper-triangular
// system for every image column by back substitution; stable iff every
// division by the diagonal eps power is exact.
bool is_stable(const TruncMatrix& u, const Basis& basis,
               const std::vector<int>& scaled_profile) {
  int n = u.n;
  for (int j = 0; j < n; ++j) {
    std::vector<Series> c(n, series_zero(u.ctx));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k <= j; ++k)
        c[i] = series_add(u.ctx, c[i], series_mul(u.ctx, u.a[i][k], basis[k][j]));
    for (int i = n - 1; i >= 0; --i) {
      Series y;
      if (!series_shift_down(c[i], scaled_profile[i], y)) return false;
      for (int r = 0; r < i; ++r)
        c[r] = series_sub(u.ctx, c[r], series_mul(u.ctx, y, basis[r][i]));
    }
  }
  return true;
}

// Fixed-point label of the Iwahori orbit (Iwahori = upper triangular mod
// eps, the one attached to the principal grading point): greedy reduction
// picking the minimal-valuation entry, bottom-most on ties. Entries below
// the pivot then have strictly larger valuation, so clearing the pivot row
// and column stays within allowed row and column operations.
IntVec iwahori_label(const SeriesContext& ctx, Basis m) {
  int n = int(m.size());
  std::vector<bool> row_done(n, false), col_done(n, false);
  IntVec label(n, Int(0));
  for (int step = 0; step < n; ++step) {
    int best_r = -1, best_c = -1, best_v = 0;
    for (int r = 0; r < n; ++r) {
      if (row_done[r]) continue;
      for (int c = 0; c < n; ++c) {
        if (col_done[c]) continue;
        int v = series_val(m[r][c]);
        if (best_r < 0 || v < best_v || (v == best_v && r > best_r)) {
          best_r = r;
          best_c = c;
          best_v = v;
        }
      }
    }
    if (best_v >= m[best_r][best_c].prec) overflow();
    Series pivot_shift;
    series_shift_down(m[best_r][best_c], best_v, pivot_shift);
    Series inv = series_unit_inverse(ctx, pivot_shift);
    for (int c = 0; c < n; ++c) {
      if (col_done[c] || c == best_c) continue;
      if (series_is_zero(m[best_r][c])) continue;
      Series e_shift;
      if (!series_shift_down(m[best_r][c], best_v, e_shift))
        throw std::logic_error("pivot was not minimal in its row");
      Series factor = series_mul(ctx, e_shift, inv);
      for (int r = 0; r < n; ++r) {
        if (row_done[r]) continue;
        m[r][c] = series_sub(ctx, m[r][c],
                             series_mul(ctx, factor, m[r][best_c]));
      }
    }
    label[best_r] = best_v;
    row_done[best_r] = true;
    col_done[best_c] = true;
  }
  return label;
}

}  // namespace

std::vector<LatticeRep> enumerate_stable_lattices(const TruncMatrix& u,
                                                  const LatticeWindow& window) {
  int n = u.n;
  int B = window.bound;
  Int scaled_det = window.det_val + Int(n) * B;
  if (scaled_det < 0 || scaled_det > Int(2 * B * n))
    return {};
  std::vector<LatticeRep> out;

  // odometer over scaled profiles in [0, 2B]^n with the prescribed total
  std::vector<int> prof(n, 0);
  while (true) {
    Int total = 0;
    for (int e : prof) total += e;
    if (total == scaled_det) {
      // odometer over the free coefficients: entry (i, j), i < j, is a
      // polynomial of degree < prof[i] (reduced modulo the row pivot)
      std::vector<std::pair<int, int>> slots;  // (row, coeff index)
      for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int d = 0; d < prof[i]; ++d) slots.push_back({i * n + j, d});
      std::vector<int> coeff(slots.size(), 0);
      while (true) {
        Basis basis(n, std::vector<Series>(n, series_zero(u.ctx)));
        for (int i = 0; i < n; ++i) {
          if (prof[i] >= u.ctx.N) overflow();
          basis[i][i] = series_eps_power(u.ctx, prof[i]);
        }
        for (size_t s = 0; s < slots.size(); ++s)
          basis[slots[s].first / n][slots[s].first % n].c[slots[s].second] =
              coeff[s];
        if (is_stable(u, basis, prof)) {
          LatticeRep rep;
          rep.basis = basis;
          for (int i = 0; i < n; ++i) rep.profile.push_back(Int(prof[i] - B));
          rep.label = iwahori_label(u.ctx, basis);
          for (auto& e : rep.label) e -= B;
          out.push_back(std::move(rep));
        }
        size_t pos = 0;
        while (pos < coeff.size() && coeff[pos] == u.ctx.q - 1) {
          coeff[pos] = 0;
          ++pos;
        }
        if (pos == coeff.size()) break;
        ++coeff[pos];
      }
    }
    int pos = 0;
    while (pos < n && prof[pos] == 2 * B) {
      prof[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++prof[pos];
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeRep& a, const LatticeRep& b) {
              if (a.label != b.label) return a.label < b.label;
              return a.profile < b.profile;
            });
  return out;
}

OracleReport run_oracle(int n, int m, int q, int N) {
  auto counts_at = [&](int bound, int trunc) {
    TruncMatrix u = ((m + 1) % n == 0)
                        ? adapted_coxeter_matrix(n, m, q, trunc)
                        : coxeter_element_matrix(n, m, q, trunc);
    LatticeWindow w{Int(0), bound};
    std::map<IntVec, Int> per_label;
    for (const auto& rep : enumerate_stable_lattices(u, w))
      per_label[rep.label] += 1;
    return per_label;
  };

  int bound = 1;
  const int cap = m + n + 2;
  while (true) {
    int trunc = N > 0 ? N : m + 2 * (bound + 1) + 2;
    auto small = counts_at(bound, trunc);
    auto large = counts_at(bound + 1, trunc);
    if (small == large) {
      OracleReport report;
      report.n = n;
      report.m = m;
      report.q = q;
      report.truncation = trunc;
      report.window = LatticeWindow{Int(0), bound};
      report.per_label = small;
      for (const auto& [label, count] : small) report.total += count;
      return report;
    }
    if (++bound > cap)
      throw std::runtime_error("stable-lattice window did not saturate");
  }
}

CompareVerdict compare_with_paving(const OracleReport& oracle,
                                   const PavingReport& report) {
  CompareVerdict verdict;
  std::ostringstream detail;
  if (!report.affine_paving) {
    verdict.detail = "report is not an affine paving";
    return verdict;
  }

  std::map<IntVec, Int> expected;
  for (const auto& cell : report.cells) {
    if (cell.empty) continue;
    IntVec label;
    for (const auto& c : cell.y_prime.coords) {
      if (denominator(c) != 1) {
        verdict.detail = "mismatched problem parameters: orbit point not in "
                         "the cocharacter lattice (base point must be 0)";
        return verdict;
      }
      label.push_back(-numerator(c));
    }
    Int pts = 1;
    for (Int d = 0; d < *cell.dim_total; ++d) pts *= oracle.q;
    expected[label] += pts;
  }

  bool ok = true;
  bool outside_window = false;
  for (const auto& [label, count] : oracle.per_label) {
    auto it = expected.find(label);
    if (it == expected.end()) {
      ok = false;
      outside_window = true;
      detail << "label (";
      for (size_t i = 0; i < label.size(); ++i)
        detail << (i ? "," : "") << label[i];
      detail << "): oracle " << count << " vs paving 0; ";
    } else if (it->second != count) {
      ok = false;
      detail << "label (";
      for (size_t i = 0; i < label.size(); ++i)
        detail << (i ? "," : "") << label[i];
      detail << "): oracle " << count << " vs paving " << it->second << "; ";
    }
  }
  for (const auto& [label, count] : expected) {
    if (oracle.per_label.count(label)) continue;
    ok = false;
    detail << "label (";
    for (size_t i = 0; i < label.size(); ++i)
      detail << (i ? "," : "") << label[i];
    detail << "): oracle 0 vs paving " << count << "; ";
  }
  verdict.match = ok;
  if (ok)
    detail << "per-orbit and total counts agree (total " << oracle.total
           << ")";
  else if (report.truncated && outside_window)
    detail << "window mismatch: the report was truncated before covering the "
              "oracle window";
  verdict.detail = detail.str();
  return verdict;
}

}  // namespace asf::oracle
