#include "asf/linalg.hpp"

namespace asf {

int rat_row_reduce(RatMat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rat_rank(RatMat m) { return rat_row_reduce(m); }

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (rat_row_reduce(a) < static_cast<int>(n)) return std::nullopt;
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<RatVec> rat_kernel(RatMat a, int ncols) {
  size_t cols = static_cast<size_t>(ncols);
  rat_row_reduce(a);
  // Locate pivot columns: first nonzero entry of each row of the RREF.
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t c = 0; c < cols; ++c) {
      if (a[i][c] != 0) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
    }
  }
  std::vector<RatVec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t c2 = 0; c2 < cols; ++c2) {
      if (pivot_of_col[c2] >= 0) v[c2] = -a[pivot_of_col[c2]][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace asf
