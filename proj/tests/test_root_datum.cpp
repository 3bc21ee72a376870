#include <doctest.h>

#include "satake/root_datum.hpp"

using namespace satake;

namespace {
RootDatum make(const char* family_rank, Isogeny iso) {
    return RootDatum::from_cartan(parse_cartan_type(family_rank), iso);
}
}  // namespace

TEST_CASE("cartan matrix conventions") {
    CartanMatrix b2 = cartan_matrix({'B', 2});
    CHECK(b2[0][1] == -2);  // alpha_2 short: <alpha_1, acheck_2> = -2
    CHECK(b2[1][0] == -1);
    CartanMatrix c2 = cartan_matrix({'C', 2});
    CHECK(c2[0][1] == -1);
    CHECK(c2[1][0] == -2);
    CartanMatrix g2 = cartan_matrix({'G', 2});
    CHECK(g2[0][1] == -1);
    CHECK(g2[1][0] == -3);
    CHECK(is_finite_type(g2));
    CHECK_FALSE(is_finite_type({{2, -2}, {-2, 2}}));  // affine A1
    CHECK_THROWS_AS(parse_cartan_type("E9"), spec_error);
    CHECK_THROWS_AS(parse_cartan_type("B1"), spec_error);
}

TEST_CASE("root system sizes and heights") {
    struct Row {
        const char* type;
        int num_roots;
        Coord theta_check_height2;
    };
    // <2rho, theta-check> = 2 (h - 1) with h the Coxeter number.
    for (Row r : {Row{"A1", 2, 2}, Row{"A2", 6, 4}, Row{"A3", 12, 6}, Row{"B2", 8, 6},
                  Row{"G2", 12, 10}, Row{"B3", 18, 10}, Row{"C3", 18, 10}, Row{"D4", 24, 10},
                  Row{"F4", 48, 22}}) {
        RootDatum d = make(r.type, Isogeny::adjoint);
        CHECK(static_cast<int>(d.roots().size()) == r.num_roots);
        CHECK(d.num_positive() * 2 == r.num_roots);
        // theta-check is the dominant short-root coroot: the maximal coroot.
        Coord best = 0;
        for (int p : d.positive()) best = std::max(best, d.height2(d.coroots()[p]));
        CHECK(best == r.theta_check_height2);
    }
}

TEST_CASE("pairing axioms hold for every built-in datum") {
    for (const char* t : {"A1", "A2", "B2", "C3", "D4", "G2", "F4"})
        for (Isogeny iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
            RootDatum d = make(t, iso);
            for (std::size_t k = 0; k < d.roots().size(); ++k)
                CHECK(RootDatum::pair(d.roots()[k], d.coroots()[k]) == 2);
            for (int i = 0; i < d.num_simple(); ++i)
                for (int j = 0; j < d.num_simple(); ++j)
                    CHECK(RootDatum::pair(d.simple_root(i), d.simple_coroot(j)) ==
                          d.cartan()[i][j]);
        }
}

TEST_CASE("duality is an involution and swaps the two sides") {
    for (const char* t : {"A2", "B2", "G2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        RootDatum dd = d.dual();
        CHECK(dd.roots() == d.coroots());
        CHECK(dd.coroots() == d.roots());
        CHECK(dd.dual() == d);
    }
    // B and C are dual families: the dual of sc type B2 has C2 Cartan matrix.
    RootDatum b2 = make("B2", Isogeny::simply_connected);
    CHECK(b2.dual().cartan() == cartan_matrix({'C', 2}));
    RootDatum gl = RootDatum::general_linear(3);
    CHECK(gl.dual().dual() == gl);
    CHECK(gl.dual().roots() == gl.roots());  // GL_n is self-dual
}

TEST_CASE("fundamental groups") {
    CHECK(make("A2", Isogeny::simply_connected).pi1().trivial());
    FiniteAbelianGroup pgl3 = make("A2", Isogeny::adjoint).pi1();
    REQUIRE(pgl3.invariant_factors.size() == 1);
    CHECK(pgl3.invariant_factors[0] == 3);
    FiniteAbelianGroup so5 = make("B2", Isogeny::adjoint).pi1();
    CHECK(so5.describe() == "Z/2");
    CHECK(make("G2", Isogeny::adjoint).pi1().trivial());  // G2 has trivial center
    FiniteAbelianGroup gl4 = RootDatum::general_linear(4).pi1();
    CHECK(gl4.invariant_factors.empty());
    CHECK(gl4.free_rank == 1);
}

TEST_CASE("weyl group enumeration") {
    CHECK(make("A2", Isogeny::adjoint).weyl().order() == 6);
    CHECK(make("B2", Isogeny::simply_connected).weyl().order() == 8);
    CHECK(make("G2", Isogeny::adjoint).weyl().order() == 12);
    CHECK(RootDatum::general_linear(4).weyl().order() == 24);

    RootDatum d = make("B2", Isogeny::simply_connected);
    const WeylGroup& w = d.weyl();
    int sign_sum = 0;
    for (std::size_t k = 0; k < w.order(); ++k) sign_sum += w.signs[k];
    CHECK(sign_sum == 0);  // equally many even and odd elements
}

TEST_CASE("dominant representative and longest element") {
    RootDatum d = make("A2", Isogeny::simply_connected);
    LatticeVector theta = d.two_rho_check();
    for (std::size_t k = 0; k < d.weyl().order(); ++k) {
        auto [dom, word] = d.dominant_representative(d.weyl().apply(k, theta));
        CHECK(dom == theta);
    }
    // w0 = -1 on A1, B2, G2; on A2 it is minus the diagram flip.
    RootDatum b2 = make("B2", Isogeny::adjoint);
    CHECK(b2.w0_cochar(b2.two_rho_check()) == -b2.two_rho_check());
    LatticeVector a1 = d.simple_coroot(0);
    CHECK(d.w0_cochar(a1) == -d.simple_coroot(1));
}

TEST_CASE("invariant form normalization") {
    // Highest root has squared length 2; ratios follow the root lengths.
    RootDatum g2 = make("G2", Isogeny::adjoint);
    const auto& f = g2.invariant_form();
    CHECK(f.simple_norm2[0] == Rat(2, 3));  // alpha_1 short
    CHECK(f.simple_norm2[1] == 2);
    RootDatum b2 = make("B2", Isogeny::simply_connected);
    CHECK(b2.invariant_form().simple_norm2[0] == 2);
    CHECK(b2.invariant_form().simple_norm2[1] == 1);
    // W-invariance on the roots.
    for (std::size_t k = 0; k < g2.roots().size(); ++k) {
        Rat n = f.eval(g2.roots()[k], g2.roots()[k]);
        CHECK((n == 2 || n == Rat(2, 3)));
    }
    // GL_n: the form restricts from the standard one; central direction is null.
    RootDatum gl2 = RootDatum::general_linear(2);
    LatticeVector center = {1, 1};
    CHECK(gl2.invariant_form().eval(center, center) == 0);
    CHECK(gl2.invariant_form().eval(gl2.roots()[0], gl2.roots()[0]) == 2);
}

TEST_CASE("iota rescales coroots by the root lengths") {
    for (const char* t : {"A2", "B2", "G2"}) {
        RootDatum d = make(t, Isogeny::adjoint);
        const auto& f = d.invariant_form();
        for (int i = 0; i < d.num_simple(); ++i) {
            RatVector im = d.iota(d.simple_coroot(i));
            Rat c = 2 / f.simple_norm2[i];
            CHECK((c == 1 || c == 2 || c == 3));
            for (int k = 0; k < d.rank(); ++k) CHECK(im[k] == c * d.simple_root(i)[k]);
        }
    }
}

TEST_CASE("iota preserves the dominance order both ways") {
    for (const char* t : {"A2", "B2", "G2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        LatticeVector zero(d.rank(), 0);
        for (int i = 0; i < d.num_simple(); ++i) {
            CHECK(d.iota_order_check(zero, d.simple_coroot(i)));
            CHECK(d.iota_order_check(d.simple_coroot(i), zero));
            CHECK(d.iota_order_check(d.simple_coroot(i), d.two_rho_check()));
        }
    }
}

TEST_CASE("custom data are validated") {
    // <alpha, acheck> must be 2.
    CHECK_THROWS_AS(RootDatum::custom({{1, -1}}, {{1, 0}}, {0}), spec_error);
    // A valid rank-2 datum for SL2 x central torus.
    RootDatum d = RootDatum::custom({{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}, {0});
    CHECK(d.rank() == 2);
    CHECK_FALSE(d.semisimple());
    CHECK(d.pi1().free_rank == 1);
    // Non-crystallographic pairings are rejected.
    CHECK_THROWS_AS(RootDatum::custom({{2, 1}, {1, 2}}, {{1, 0}, {0, 1}}, {0, 1}), spec_error);
}

TEST_CASE("dominance order") {
    RootDatum d = make("A2", Isogeny::simply_connected);
    LatticeVector zero(d.rank(), 0);
    CHECK(d.dominance_leq(zero, d.two_rho_check()));
    CHECK_FALSE(d.dominance_leq(d.two_rho_check(), zero));
    CHECK(d.dominance_leq(zero, zero));
    // Differences outside the coroot lattice are incomparable, not errors.
    RootDatum ad = make("A2", Isogeny::adjoint);
    LatticeVector omega = {1, 0};  // first fundamental coweight of PGL3
    CHECK(RootDatum::pair(ad.simple_root(0), omega) == 1);
    CHECK_FALSE(ad.dominance_leq(LatticeVector(ad.rank(), 0), omega));
}
