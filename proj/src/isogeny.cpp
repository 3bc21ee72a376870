#include "satake/isogeny.hpp"

#include <limits>

namespace satake {

namespace {

Coord narrow(const Int& x) {
    if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min())
        throw integrity_error("coordinate overflow in lattice change of basis");
    return x.convert_to<Coord>();
}

}  // namespace

RootDatum adjoint_datum(const RootDatum& d) {
    const int s = d.num_simple();
    std::vector<LatticeVector> roots, coroots;
    std::vector<int> simple;
    roots.reserve(d.roots().size());
    for (std::size_t k = 0; k < d.roots().size(); ++k) {
        auto exp = d.simple_root_coords(d.roots()[k]);
        if (!exp) throw integrity_error("adjoint_datum: root outside the root lattice");
        LatticeVector a(s), ac(s);
        for (int j = 0; j < s; ++j) {
            a[j] = narrow((*exp)[j]);
            ac[j] = RootDatum::pair(d.simple_root(j), d.coroots()[k]);
        }
        roots.push_back(std::move(a));
        coroots.push_back(std::move(ac));
    }
    for (int i : d.simple()) simple.push_back(i);
    return RootDatum::custom(std::move(roots), std::move(coroots), std::move(simple), s);
}

RootDatum derived_datum(const RootDatum& d) {
    if (d.semisimple()) return d;
    const auto& sm = d.coroot_smith();
    std::size_t k = 0;
    while (k < sm.diag.size() && sm.diag[k] != 0) ++k;
    // Saturation of the coroot span in X_*: spanned by the first k columns of
    // U^{-1}.
    const int r = d.rank();
    RatMatrix basis(r, RatVector(k));
    for (int i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) basis[i][j] = Rat(sm.u_inv[i][j]);

    std::vector<LatticeVector> roots, coroots;
    std::vector<int> simple;
    for (std::size_t idx = 0; idx < d.roots().size(); ++idx) {
        LatticeVector a(k), ac(k);
        for (std::size_t j = 0; j < k; ++j) {
            Int p = 0;
            for (int i = 0; i < r; ++i) p += Int(d.roots()[idx][i]) * sm.u_inv[i][j];
            a[j] = narrow(p);
        }
        auto sol = solve_linear(basis, to_rat(d.coroots()[idx]));
        if (!sol) throw integrity_error("derived_datum: coroot outside the saturation");
        for (std::size_t j = 0; j < k; ++j) {
            if (boost::multiprecision::denominator((*sol)[j]) != 1)
                throw integrity_error("derived_datum: non-integral coroot coordinate");
            ac[j] = narrow(boost::multiprecision::numerator((*sol)[j]));
        }
        roots.push_back(std::move(a));
        coroots.push_back(std::move(ac));
    }
    for (int i : d.simple()) simple.push_back(i);
    return RootDatum::custom(std::move(roots), std::move(coroots), std::move(simple),
                             static_cast<int>(k));
}

int central_torus_rank(const RootDatum& d) { return d.rank() - d.num_simple(); }

IsogenyReport dual_isogeny_kernel(const RootDatum& d) {
    if (!d.semisimple())
        throw spec_error(
            "dual_isogeny_kernel needs a semisimple datum; take derived_datum(d) first");
    const int r = d.rank();
    IntMatrix a(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = d.simple_root(i)[j];
    IsogenyReport rep{d, adjoint_datum(d), cokernel(a), IsogenyDirection::quotient};
    return rep;
}

DualCenter center_of_dual(const RootDatum& d) { return DualCenter{d.pi1()}; }

ModuleCharacter weyl_schur_character(const RootDatum& d, const OrbitLabel& lambda,
                                     ModuleKind kind) {
    ModuleCharacter m;
    m.label = lambda.lambda;
    m.kind = kind;
    m.table = kostant_table(d, lambda);
    return m;
}

CheckReport universal_property_probe(const RootDatum& d, const OrbitLabel& lambda,
                                     const MultiplicityTable& test_table) {
    CheckReport r;
    for (const auto& [nu, mult] : test_table.entries) {
        if (mult <= 0) r.fail("non-positive entry at " + to_string(nu));
        if (!d.dominance_leq(d.dominant_representative(nu).first, lambda.lambda))
            r.fail("support outside the <= lambda cone at " + to_string(nu));
    }
    r.details["lambda_rank"] = test_table.at(lambda.lambda).str();
    return r;
}

}  // namespace satake
