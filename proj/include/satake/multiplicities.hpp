#pragma once

#include <map>
#include <set>

#include "satake/grassmannian.hpp"
#include "satake/root_datum.hpp"

namespace satake {

enum class Execution { serial, parallel };

// Weight multiplicities of the irreducible dual-group representation with
// highest weight `highest`; equivalently MV-cycle counts per weight.
struct MultiplicityTable {
    LatticeVector highest;
    std::map<LatticeVector, Int> entries;  // only positive entries are stored

    Int at(const LatticeVector& nu) const {
        auto it = entries.find(nu);
        return it == entries.end() ? Int(0) : it->second;
    }
    Int total_dim() const;
    bool operator==(const MultiplicityTable&) const = default;
};

// Graded dimensions of intersection cohomology, degree measured by the
// doubled height <2rho, nu>, centered at the middle degree.
struct PoincareVector {
    std::map<Coord, Int> dims;
    bool operator==(const PoincareVector&) const = default;
};

// Number of ways to write beta as a nonnegative integer combination of
// positive coroots. Memoized per datum; 0 outside the nonnegative cone.
Int kostant_partition(const RootDatum& d, const LatticeVector& beta);

// Kostant's alternating-sum multiplicity formula, evaluated with doubled
// coordinates so all arithmetic stays integral.
Int kostant_multiplicity(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu);

// Full table by the Kostant formula. The parallel path fans the independent
// per-weight evaluations out over OpenMP threads; results are identical to
// the serial path.
MultiplicityTable kostant_table(const RootDatum& d, const OrbitLabel& lambda,
                                Execution exec = Execution::serial);

// Independent oracle: the Freudenthal recursion in exact rational arithmetic,
// descending from the highest weight. Hard error on any non-integral or
// non-positive intermediate value.
MultiplicityTable freudenthal_table(const RootDatum& d, const OrbitLabel& lambda);

// Number of irreducible components of cl(Gr^lambda) ∩ S_nu: equals the weight
// multiplicity, which is how it is computed.
Int mv_cycle_count(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu);

// All weights of L(lambda): { nu : dominant representative of nu <= lambda }.
std::set<LatticeVector> weight_diagram(const RootDatum& d, const OrbitLabel& lambda);

// Product formula for dim L(lambda), exact; hard error on a non-integral
// result.
Int weyl_dimension(const RootDatum& d, const OrbitLabel& lambda);

// Multiplicity table regraded by doubled height: dims(k) collects the
// multiplicities of the weights with <2rho, nu> = k.
PoincareVector ic_poincare(const RootDatum& d, const OrbitLabel& lambda,
                           Execution exec = Execution::serial);

}  // namespace satake
