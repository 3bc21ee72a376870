#pragma once

#include <optional>
#include <set>
#include <string>

#include "satake/root_datum.hpp"

namespace satake {

// Dominant coweight indexing a G(O)-orbit on the affine Grassmannian.
struct OrbitLabel {
    LatticeVector lambda;

    OrbitLabel(const RootDatum& d, LatticeVector v) : lambda(std::move(v)) {
        if (static_cast<int>(lambda.size()) != d.rank())
            throw spec_error("orbit label of wrong rank");
        if (!d.is_dominant(lambda))
            throw spec_error("orbit label must be dominant: " + to_string(lambda));
    }
    bool operator==(const OrbitLabel&) const = default;
};

enum class SemiInfSide { S, T };

// Arbitrary coweight indexing a semi-infinite orbit S_nu or T_nu.
struct SemiInfOrbitLabel {
    LatticeVector nu;
    SemiInfSide side = SemiInfSide::S;
};

// Coset of a cocharacter modulo the coroot lattice, in the canonical form
// given by the Smith basis; indexes a connected component of Gr.
struct ComponentLabel {
    LatticeVector canonical;       // reduced coordinates in the Smith basis
    LatticeVector representative;  // canonical representative in X_*
    bool operator==(const ComponentLabel& o) const { return canonical == o.canonical; }
};

enum class Parity { even, odd };

ComponentLabel component_of(const RootDatum& d, const LatticeVector& nu);
ComponentLabel component_add(const RootDatum& d, const ComponentLabel& a, const ComponentLabel& b);
Parity component_parity(const RootDatum& d, const ComponentLabel& c);

// dim Gr^lambda = <2 rho, lambda>.
Coord orbit_dim(const RootDatum& d, const OrbitLabel& lambda);

// Gr^mu lies in the closure of Gr^lambda iff mu <= lambda.
bool closure_contains(const RootDatum& d, const OrbitLabel& lambda, const OrbitLabel& mu);

// Truncated closure of S_nu: all eta <= nu within the given doubled-height
// drop. The full closure is infinite; the bound cuts the enumeration.
std::set<LatticeVector> s_closure_set(const RootDatum& d, const LatticeVector& nu,
                                      Coord height_bound);

// nu is a weight of the irreducible dual-group representation L(lambda).
bool is_weight_of(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu);

// dim(S_nu ∩ Gr^lambda) = ht(lambda + nu); nullopt when the intersection is
// empty. Throws integrity_error if the doubled height fails to halve.
std::optional<Coord> sv_intersection_dim(const RootDatum& d, const OrbitLabel& lambda,
                                         const LatticeVector& nu);

// dim(T_nu ∩ Gr^lambda) = -ht(nu + w0 lambda); the anti-dominant convention is
// handled internally, the label stays dominant.
std::optional<Coord> tv_intersection_dim(const RootDatum& d, const OrbitLabel& lambda,
                                         const LatticeVector& nu);

// All dominant coweights with <2rho, lambda> <= bound, sorted by height then
// lexicographically. Requires a semisimple datum (otherwise the set is
// infinite in the central directions).
std::vector<LatticeVector> dominant_coweights_up_to(const RootDatum& d, Coord height2_bound);

// max over the fixed points nu of ht(lambda + nu): the dimension bound for a
// closed T-invariant subset of the closure of Gr^lambda with those fixed points.
Coord fixed_point_dim_bound(const RootDatum& d, const OrbitLabel& lambda,
                            const std::set<LatticeVector>& fixed_points);

}  // namespace satake
