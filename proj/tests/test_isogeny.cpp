#include <doctest.h>

#include "satake/isogeny.hpp"

using namespace satake;

namespace {
RootDatum make(const char* family_rank, Isogeny iso) {
    return RootDatum::from_cartan(parse_cartan_type(family_rank), iso);
}
}  // namespace

TEST_CASE("adjoint quotient") {
    RootDatum ad = adjoint_datum(make("A2", Isogeny::simply_connected));
    CHECK(ad == make("A2", Isogeny::adjoint));
    CHECK(ad.pi1().describe() == "Z/3");
    // Idempotent.
    CHECK(adjoint_datum(ad) == ad);
    // GL_n: the central torus dies, the quotient is the adjoint form of A_{n-1}.
    RootDatum pgl3 = adjoint_datum(RootDatum::general_linear(3));
    CHECK(pgl3.rank() == 2);
    CHECK(pgl3 == make("A2", Isogeny::adjoint));
}

TEST_CASE("derived subgroup") {
    RootDatum gl3 = RootDatum::general_linear(3);
    RootDatum sl3 = derived_datum(gl3);
    CHECK(sl3.semisimple());
    CHECK(sl3.rank() == 2);
    CHECK(sl3.pi1().trivial());
    CHECK(sl3.cartan() == cartan_matrix({'A', 2}));
    // Identity on semisimple data.
    RootDatum sp4 = make("C2", Isogeny::simply_connected);
    CHECK(derived_datum(sp4) == sp4);
}

TEST_CASE("central torus rank") {
    CHECK(central_torus_rank(RootDatum::general_linear(4)) == 1);
    CHECK(central_torus_rank(make("B2", Isogeny::adjoint)) == 0);
    CHECK(central_torus_rank(RootDatum::custom({{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}, {0})) == 1);
}

TEST_CASE("kernel of the dual isogeny") {
    CHECK(dual_isogeny_kernel(make("A2", Isogeny::simply_connected)).kernel.describe() == "Z/3");
    CHECK(dual_isogeny_kernel(make("C2", Isogeny::simply_connected)).kernel.describe() == "Z/2");
    CHECK(dual_isogeny_kernel(make("G2", Isogeny::simply_connected)).kernel.trivial());
    CHECK(dual_isogeny_kernel(make("A2", Isogeny::adjoint)).kernel.trivial());
    CHECK(dual_isogeny_kernel(make("D4", Isogeny::simply_connected)).kernel.torsion_order() == 4);
    CHECK_THROWS_AS(dual_isogeny_kernel(RootDatum::general_linear(2)), spec_error);
}

TEST_CASE("center of the dual group") {
    CHECK(center_of_dual(make("A2", Isogeny::simply_connected)).group.trivial());
    CHECK(center_of_dual(make("A2", Isogeny::adjoint)).group.describe() == "Z/3");
    CHECK(center_of_dual(RootDatum::general_linear(2)).group.free_rank == 1);
}

TEST_CASE("weyl and schur module characters") {
    RootDatum d = make("B2", Isogeny::simply_connected);
    for (const auto& lv : dominant_coweights_up_to(d, 8)) {
        OrbitLabel lam(d, lv);
        ModuleCharacter w = weyl_schur_character(d, lam, ModuleKind::weyl);
        ModuleCharacter s = weyl_schur_character(d, lam, ModuleKind::schur);
        CHECK(w.table == s.table);  // free of the same rank, weight by weight
        CHECK(w.kind == ModuleKind::weyl);
        CHECK(s.kind == ModuleKind::schur);
        // Duality: W(lambda)_nu and S(-w0 lambda)_{-nu} have equal rank.
        OrbitLabel dual_label(d, -d.w0_cochar(lv));
        ModuleCharacter sd = weyl_schur_character(d, dual_label, ModuleKind::schur);
        for (const auto& [nu, m] : w.table.entries) CHECK(sd.table.at(-nu) == m);
    }
}

TEST_CASE("universal property probe") {
    RootDatum d = make("A2", Isogeny::simply_connected);
    OrbitLabel theta(d, d.two_rho_check());
    MultiplicityTable t = kostant_table(d, theta);
    CheckReport ok = universal_property_probe(d, theta, t);
    CHECK(ok.pass);
    CHECK(ok.details.at("lambda_rank") == "1");
    MultiplicityTable bad = t;
    bad.entries[2 * d.two_rho_check()] = 1;  // weight above lambda
    CHECK_FALSE(universal_property_probe(d, theta, bad).pass);
}
