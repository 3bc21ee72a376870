#pragma once

#include <optional>
#include <vector>

#include "satake/lattice.hpp"
#include "satake/numeric.hpp"

namespace satake {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

RatMatrix rat_identity(std::size_t n);

// Solves A x = b exactly; std::nullopt when inconsistent. When the system is
// underdetermined the solution with zero free variables is returned.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

// Inverse of a square nonsingular matrix; throws spec_error if singular.
RatMatrix rat_inverse(const RatMatrix& a);

std::size_t rat_rank(RatMatrix a);

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector rat_apply(const RatMatrix& a, const RatVector& v);

RatVector to_rat(const LatticeVector& v);

}  // namespace satake
