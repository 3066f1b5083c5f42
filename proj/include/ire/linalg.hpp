#pragma once

#include <optional>
#include <vector>

#include "ire/rational.hpp"

namespace ire {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Reduces `m` in place to reduced row echelon form with deterministic
/// pivoting (first nonzero column, smallest row index). Returns the rank;
/// pivot column indices go to `pivots` when non-null.
int rref(RatMat& m, std::vector<int>* pivots = nullptr);

int rank(RatMat m);

/// Basis of the null space of `m` (acting on width-`cols` vectors), one
/// vector per free column, in RREF-derived canonical form.
RatMat kernel_basis(const RatMat& m, int cols);

/// RREF basis of the span of the given vectors.
RatMat row_space_basis(RatMat vectors);

/// Decides feasibility of the system `m * t >= rhs` by Fourier-Motzkin
/// elimination; returns a witness t on success, nullopt otherwise.
std::optional<RatVec> fm_feasible(const RatMat& m, const RatVec& rhs);

RatVec mat_apply(const RatMat& m, const RatVec& v);

}  // namespace ire
