#pragma once

#include <optional>
#include <vector>

#include "asf/rational.hpp"

namespace asf {

using RatMat = std::vector<RatVec>;

/// In-place row echelon reduction; returns the rank.
int rat_row_reduce(RatMat& m);

int rat_rank(RatMat m);

/// Solves a*x = b for square a; nullopt if singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// Basis of the right kernel {x : a*x = 0}.
std::vector<RatVec> rat_kernel(RatMat a, int ncols);

}  // namespace asf
