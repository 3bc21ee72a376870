#pragma once

#include <string>

#include "satake/multiplicities.hpp"
#include "satake/tensor.hpp"

namespace satake {

enum class IsogenyDirection { quotient, inclusion };

struct IsogenyReport {
    RootDatum source;
    RootDatum target;
    FiniteAbelianGroup kernel;  // character group of the kernel on the dual side
    IsogenyDirection direction = IsogenyDirection::quotient;
};

enum class ModuleKind { weyl, schur };

// A Weyl or Schur module presented by its weight-space rank table; the ranks
// coincide for both kinds (both count MV cycles).
struct ModuleCharacter {
    LatticeVector label;
    ModuleKind kind = ModuleKind::weyl;
    MultiplicityTable table;
};

// Center of the dual group as character group of pi1, torsion plus free rank.
struct DualCenter {
    FiniteAbelianGroup group;
};

// Adjoint quotient: X* becomes the root lattice.
RootDatum adjoint_datum(const RootDatum& d);

// Derived subgroup: X_* becomes the saturation of the coroot span; identity on
// semisimple data.
RootDatum derived_datum(const RootDatum& d);

// Rank of the connected center Z(G)^0.
int central_torus_rank(const RootDatum& d);

// Kernel of dual(G_ad) -> dual(G) for semisimple d, computed as
// pi1(G_ad)/pi1(G); rejects non-semisimple input.
IsogenyReport dual_isogeny_kernel(const RootDatum& d);

DualCenter center_of_dual(const RootDatum& d);

// Weight-space ranks of W(lambda) or S(lambda): the MV-cycle count table,
// identical for both kinds.
ModuleCharacter weyl_schur_character(const RootDatum& d, const OrbitLabel& lambda,
                                     ModuleKind kind);

// Checks that test_table is supported in the <= lambda cone and reports the
// lambda-weight-space rank (the rank both universal Homs have).
CheckReport universal_property_probe(const RootDatum& d, const OrbitLabel& lambda,
                                     const MultiplicityTable& test_table);

}  // namespace satake
