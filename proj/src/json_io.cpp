#include "satake/json_io.hpp"

#include <limits>
#include <sstream>

namespace satake {

std::string DatumSpec::name() const {
    switch (kind) {
        case Kind::named:
            return type.name() + (isogeny == Isogeny::simply_connected ? "-sc" : "-ad");
        case Kind::gl:
            return "GL" + std::to_string(gl_n);
        case Kind::custom:
            return "custom";
    }
    return "?";
}

DatumSpec parse_type_string(const std::string& s) {
    DatumSpec spec;
    if (s.rfind("GL", 0) == 0 || s.rfind("gl", 0) == 0) {
        spec.kind = DatumSpec::Kind::gl;
        try {
            spec.gl_n = std::stoi(s.substr(2));
        } catch (...) {
            throw spec_error("bad GL type '" + s + "'");
        }
        if (spec.gl_n < 1) throw spec_error("bad GL type '" + s + "'");
        return spec;
    }
    const auto dash = s.find('-');
    if (dash == std::string::npos)
        throw spec_error("type must look like 'A2-sc', 'B2-ad' or 'GL3', got '" + s + "'");
    spec.kind = DatumSpec::Kind::named;
    spec.type = parse_cartan_type(s.substr(0, dash));
    const std::string iso = s.substr(dash + 1);
    if (iso == "sc")
        spec.isogeny = Isogeny::simply_connected;
    else if (iso == "ad")
        spec.isogeny = Isogeny::adjoint;
    else
        throw spec_error("isogeny must be 'sc' or 'ad', got '" + iso + "'");
    return spec;
}

namespace {

LatticeVector vec_from_json(const json& j) {
    if (!j.is_array()) throw spec_error("expected a coordinate array");
    LatticeVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw spec_error("coordinates must be integers");
        v.push_back(x.get<Coord>());
    }
    return v;
}

json vec_to_json(const LatticeVector& v) {
    json a = json::array();
    for (Coord c : v) a.push_back(c);
    return a;
}

}  // namespace

DatumSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw spec_error("datum spec must be a JSON object");
    if (j.contains("custom")) {
        const json& c = j.at("custom");
        DatumSpec spec;
        spec.kind = DatumSpec::Kind::custom;
        for (const auto& r : c.at("roots")) spec.roots.push_back(vec_from_json(r));
        for (const auto& r : c.at("coroots")) spec.coroots.push_back(vec_from_json(r));
        for (const auto& i : c.at("simple")) spec.simple.push_back(i.get<int>());
        spec.custom_rank = c.value("rank", -1);
        return spec;
    }
    if (!j.contains("cartan_type")) throw spec_error("datum spec needs 'cartan_type' or 'custom'");
    const std::string t = j.at("cartan_type").get<std::string>();
    if (t.rfind("GL", 0) == 0) return parse_type_string(t);
    std::string iso = j.value("isogeny", "sc");
    return parse_type_string(t + "-" + iso);
}

json spec_to_json(const DatumSpec& s) {
    json j;
    switch (s.kind) {
        case DatumSpec::Kind::named:
            j["cartan_type"] = s.type.name();
            j["isogeny"] = s.isogeny == Isogeny::simply_connected ? "sc" : "ad";
            break;
        case DatumSpec::Kind::gl:
            j["cartan_type"] = "GL" + std::to_string(s.gl_n);
            break;
        case DatumSpec::Kind::custom: {
            json c;
            c["roots"] = json::array();
            c["coroots"] = json::array();
            for (const auto& r : s.roots) c["roots"].push_back(vec_to_json(r));
            for (const auto& r : s.coroots) c["coroots"].push_back(vec_to_json(r));
            c["simple"] = s.simple;
            if (s.custom_rank >= 0) c["rank"] = s.custom_rank;
            j["custom"] = c;
            break;
        }
    }
    return j;
}

RootDatum realize(const DatumSpec& s) {
    switch (s.kind) {
        case DatumSpec::Kind::named:
            return RootDatum::from_cartan(s.type, s.isogeny);
        case DatumSpec::Kind::gl:
            return RootDatum::general_linear(s.gl_n);
        case DatumSpec::Kind::custom:
            return RootDatum::custom(s.roots, s.coroots, s.simple, s.custom_rank);
    }
    throw spec_error("unreachable");
}

json datum_to_json(const RootDatum& d) {
    json c;
    c["roots"] = json::array();
    c["coroots"] = json::array();
    for (const auto& r : d.roots()) c["roots"].push_back(vec_to_json(r));
    for (const auto& r : d.coroots()) c["coroots"].push_back(vec_to_json(r));
    c["simple"] = d.simple();
    c["rank"] = d.rank();
    json j;
    j["custom"] = c;
    return j;
}

WeightBasis weight_basis(const DatumSpec& s) {
    return s.kind == DatumSpec::Kind::named ? WeightBasis::fundamental : WeightBasis::stored;
}

const char* basis_name(WeightBasis b) {
    return b == WeightBasis::fundamental ? "fundamental-coweights" : "stored";
}

LatticeVector parse_weight(const RootDatum& d, WeightBasis b, const std::string& csv) {
    LatticeVector coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            coords.push_back(std::stoll(item));
        } catch (...) {
            throw spec_error("bad coordinate '" + item + "'");
        }
    if (b == WeightBasis::stored) {
        if (static_cast<int>(coords.size()) != d.rank())
            throw spec_error("expected " + std::to_string(d.rank()) + " coordinates");
        return coords;
    }
    if (static_cast<int>(coords.size()) != d.num_simple())
        throw spec_error("expected " + std::to_string(d.num_simple()) +
                         " fundamental coordinates");
    // Solve <alpha_i, nu> = coords_i; for named data the simple roots have
    // full rank, so the solution is unique, but it may leave the lattice.
    RatMatrix a(d.num_simple(), RatVector(d.rank()));
    RatVector rhs(d.num_simple());
    for (int i = 0; i < d.num_simple(); ++i) {
        for (int k = 0; k < d.rank(); ++k) a[i][k] = d.simple_root(i)[k];
        rhs[i] = coords[i];
    }
    auto sol = solve_linear(a, rhs);
    if (!sol) throw spec_error("inconsistent fundamental coordinates");
    LatticeVector nu(d.rank());
    for (int k = 0; k < d.rank(); ++k) {
        if (boost::multiprecision::denominator((*sol)[k]) != 1)
            throw spec_error("coweight " + csv + " is not in the cocharacter lattice");
        Int n = boost::multiprecision::numerator((*sol)[k]);
        nu[k] = n.convert_to<Coord>();
    }
    return nu;
}

json weight_to_json(const RootDatum& d, WeightBasis b, const LatticeVector& nu) {
    if (b == WeightBasis::stored) return vec_to_json(nu);
    LatticeVector f(d.num_simple());
    for (int i = 0; i < d.num_simple(); ++i) f[i] = RootDatum::pair(d.simple_root(i), nu);
    return vec_to_json(f);
}

json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

json group_to_json(const FiniteAbelianGroup& g) {
    json j;
    j["invariant_factors"] = json::array();
    for (const Int& d : g.invariant_factors) j["invariant_factors"].push_back(int_to_json(d));
    j["free_rank"] = g.free_rank;
    j["description"] = g.describe();
    return j;
}

json table_to_json(const RootDatum& d, WeightBasis b, const MultiplicityTable& t) {
    json j;
    j["highest_weight"] = weight_to_json(d, b, t.highest);
    j["entries"] = json::array();
    for (const auto& [nu, m] : t.entries) {
        json e;
        e["weight"] = weight_to_json(d, b, nu);
        e["multiplicity"] = int_to_json(m);
        j["entries"].push_back(e);
    }
    j["dimension"] = int_to_json(t.total_dim());
    return j;
}

json tensor_to_json(const RootDatum& d, WeightBasis b, const TensorTable& t) {
    json j;
    j["lambda"] = weight_to_json(d, b, t.factor_lambda);
    j["mu"] = weight_to_json(d, b, t.factor_mu);
    j["entries"] = json::array();
    for (const auto& [eta, n] : t.entries) {
        json e;
        e["highest_weight"] = weight_to_json(d, b, eta);
        e["multiplicity"] = int_to_json(n);
        j["entries"].push_back(e);
    }
    return j;
}

json report_to_json(const CheckReport& r) {
    json j;
    j["pass"] = r.pass;
    j["violations"] = r.violations;
    json det;
    for (const auto& [k, v] : r.details) det[k] = v;
    j["details"] = det;
    return j;
}

namespace {
std::string csv_coords(const json& arr) {
    std::string out;
    for (const auto& x : arr) {
        if (!out.empty()) out += ',';
        out += x.dump();
    }
    return out;
}
}  // namespace

std::string table_to_csv(const RootDatum& d, WeightBasis b, const MultiplicityTable& t) {
    std::ostringstream os;
    os << "weight,multiplicity\n";
    for (const auto& [nu, m] : t.entries)
        os << '"' << csv_coords(weight_to_json(d, b, nu)) << "\"," << m << '\n';
    return os.str();
}

std::string tensor_to_csv(const RootDatum& d, WeightBasis b, const TensorTable& t) {
    std::ostringstream os;
    os << "highest_weight,multiplicity\n";
    for (const auto& [eta, n] : t.entries)
        os << '"' << csv_coords(weight_to_json(d, b, eta)) << "\"," << n << '\n';
    return os.str();
}

}  // namespace satake
