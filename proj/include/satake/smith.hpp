#pragma once

#include <string>
#include <vector>

#include "satake/linalg.hpp"
#include "satake/numeric.hpp"

namespace satake {

// Invariant-factor presentation of a finitely generated abelian group:
// Z/d1 x ... x Z/dk x Z^free_rank with d1 | d2 | ... and each di >= 2.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;
    int free_rank = 0;

    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
    Int torsion_order() const;
    bool operator==(const FiniteAbelianGroup&) const = default;
    std::string describe() const;  // e.g. "Z/2 x Z/4 x Z^1" or "1"
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
// u_inv carries the inverse of U so lattice bases can be read off.
struct SmithForm {
    IntMatrix u, u_inv, v;
    std::vector<Int> diag;  // min(m, n) entries, trailing zeros allowed
};

SmithForm smith_normal_form(IntMatrix a);

// Cokernel of the map Z^cols -> Z^rows given by the columns of a.
FiniteAbelianGroup cokernel(const IntMatrix& a);

}  // namespace satake
