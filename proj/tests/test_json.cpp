#include <doctest.h>

#include "satake/json_io.hpp"

using namespace satake;

TEST_CASE("type string parsing") {
    DatumSpec a = parse_type_string("A2-sc");
    CHECK(a.kind == DatumSpec::Kind::named);
    CHECK(a.type == CartanType{'A', 2});
    CHECK(a.isogeny == Isogeny::simply_connected);
    CHECK(a.name() == "A2-sc");
    DatumSpec g = parse_type_string("GL3");
    CHECK(g.kind == DatumSpec::Kind::gl);
    CHECK(g.gl_n == 3);
    CHECK_THROWS_AS(parse_type_string("A2"), spec_error);
    CHECK_THROWS_AS(parse_type_string("A2-xx"), spec_error);
    CHECK_THROWS_AS(parse_type_string("GL0"), spec_error);
    CHECK_THROWS_AS(parse_type_string("H3-sc"), spec_error);
}

TEST_CASE("spec json round trip") {
    for (const char* t : {"A1-sc", "B2-ad", "G2-sc", "GL4"}) {
        DatumSpec s = parse_type_string(t);
        DatumSpec back = spec_from_json(spec_to_json(s));
        CHECK(realize(back) == realize(s));
        CHECK(back.name() == s.name());
    }
}

TEST_CASE("datum serialization round trip") {
    for (const char* t : {"A2-sc", "A2-ad", "C2-sc", "GL3"}) {
        RootDatum d = realize(parse_type_string(t));
        json j = datum_to_json(d);
        RootDatum back = realize(spec_from_json(j));
        CHECK(back == d);
        CHECK(datum_to_json(back) == j);
    }
}

TEST_CASE("weight parsing in the fundamental-coweight basis") {
    DatumSpec s = parse_type_string("A2-sc");
    RootDatum d = realize(s);
    WeightBasis b = weight_basis(s);
    CHECK(b == WeightBasis::fundamental);
    LatticeVector theta = parse_weight(d, b, "1,1");
    CHECK(theta == d.simple_coroot(0) + d.simple_coroot(1));
    CHECK(weight_to_json(d, b, theta) == json::array({1, 1}));
    // omega-check_1 of SL3 lies outside the cocharacter lattice.
    CHECK_THROWS_AS(parse_weight(d, b, "1,0"), spec_error);
    CHECK_THROWS_AS(parse_weight(d, b, "1"), spec_error);
    CHECK_THROWS_AS(parse_weight(d, b, "1,x"), spec_error);

    DatumSpec gs = parse_type_string("GL3");
    RootDatum gl = realize(gs);
    CHECK(weight_basis(gs) == WeightBasis::stored);
    CHECK(parse_weight(gl, weight_basis(gs), "2,1,0") == LatticeVector{2, 1, 0});
}

TEST_CASE("integer serialization stays exact") {
    CHECK(int_to_json(Int(7)) == json(7));
    CHECK(int_to_json(Int(-3)) == json(-3));
    Int big = Int("123456789012345678901234567890");
    CHECK(int_to_json(big) == json("123456789012345678901234567890"));
}

TEST_CASE("table serialization") {
    DatumSpec s = parse_type_string("A1-ad");
    RootDatum d = realize(s);
    MultiplicityTable t = kostant_table(d, OrbitLabel(d, {2}));
    json j = table_to_json(d, weight_basis(s), t);
    CHECK(j["dimension"] == 3);
    CHECK(j["highest_weight"] == json::array({2}));
    CHECK(j["entries"].size() == 3);
    std::string csv = table_to_csv(d, weight_basis(s), t);
    CHECK(csv == "weight,multiplicity\n\"-2\",1\n\"0\",1\n\"2\",1\n");
}

TEST_CASE("custom spec json") {
    json j = {{"custom",
               {{"roots", {{2}, {-2}}}, {"coroots", {{1}, {-1}}}, {"simple", {0}}}}};
    DatumSpec s = spec_from_json(j);
    CHECK(s.kind == DatumSpec::Kind::custom);
    RootDatum d = realize(s);
    CHECK(d.rank() == 1);
    CHECK(d.pi1().trivial());
    CHECK_THROWS_AS(spec_from_json(json{{"foo", 1}}), spec_error);
}
