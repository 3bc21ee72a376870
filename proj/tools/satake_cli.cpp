// Command-line front end: parses datum specs, dispatches to the library and
// emits canonical JSON (sorted keys, fixed coordinate order) or CSV.
//
// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
// 2 verification-suite failure (counterexample serialized).

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "satake/grassmannian.hpp"
#include "satake/isogeny.hpp"
#include "satake/json_io.hpp"
#include "satake/multiplicities.hpp"
#include "satake/tensor.hpp"

namespace {

using namespace satake;

struct Options {
    std::string type;
    std::string custom_spec;
    std::string lambda, mu, nu, kind = "weyl", suite, format = "json";
    long long height_bound = 8;
    unsigned long long seed = 0;
    int count = 0;
};

struct Session {
    DatumSpec spec;
    RootDatum datum;
    WeightBasis basis;
};

Session open_session(const Options& o) {
    DatumSpec spec;
    if (!o.custom_spec.empty()) {
        std::ifstream in(o.custom_spec);
        if (!in) throw spec_error("cannot open spec file '" + o.custom_spec + "'");
        json j = json::parse(in);
        spec = spec_from_json(j);
    } else if (!o.type.empty()) {
        spec = parse_type_string(o.type);
    } else {
        throw spec_error("need --type or --custom-spec");
    }
    RootDatum d = realize(spec);
    return Session{spec, std::move(d), weight_basis(spec)};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json base_output(const Session& s) {
    json j;
    j["spec"] = spec_to_json(s.spec);
    j["basis"] = basis_name(s.basis);
    return j;
}

OrbitLabel parse_label(const Session& s, const std::string& csv, const char* flag) {
    if (csv.empty()) throw spec_error(std::string("missing --") + flag);
    return OrbitLabel(s.datum, parse_weight(s.datum, s.basis, csv));
}

int run_dual(const Options& o) {
    Session s = open_session(o);
    emit(datum_to_json(s.datum.dual()));
    return 0;
}

int run_pi1(const Options& o) {
    Session s = open_session(o);
    json j = base_output(s);
    j["pi1"] = group_to_json(s.datum.pi1());
    emit(j);
    return 0;
}

int run_poset(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    auto nodes = dominant_coweights_up_to(d, o.height_bound);
    json j = base_output(s);
    j["nodes"] = json::array();
    for (const auto& lam : nodes) {
        json n;
        n["coweight"] = weight_to_json(d, s.basis, lam);
        n["dim"] = d.height2(lam);
        j["nodes"].push_back(n);
    }
    // Edge list of the closure order (covering relations).
    std::vector<std::vector<bool>> leq(nodes.size(), std::vector<bool>(nodes.size(), false));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t k = 0; k < nodes.size(); ++k)
            leq[i][k] = i != k && d.dominance_leq(nodes[i], nodes[k]);
    j["edges"] = json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (!leq[i][k]) continue;
            bool covering = true;
            for (std::size_t m = 0; m < nodes.size() && covering; ++m)
                if (leq[i][m] && leq[m][k]) covering = false;
            if (covering) j["edges"].push_back(json::array({i, k}));
        }
    emit(j);
    return 0;
}

int run_dims(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    OrbitLabel lam = parse_label(s, o.lambda, "lambda");
    json j = base_output(s);
    j["lambda"] = weight_to_json(d, s.basis, lam.lambda);
    j["orbit_dim"] = orbit_dim(d, lam);
    auto one = [&](const LatticeVector& nu) {
        json e;
        e["weight"] = weight_to_json(d, s.basis, nu);
        auto sv = sv_intersection_dim(d, lam, nu);
        auto tv = tv_intersection_dim(d, lam, nu);
        e["sv_dim"] = sv ? json(*sv) : json(nullptr);
        e["tv_dim"] = tv ? json(*tv) : json(nullptr);
        return e;
    };
    if (!o.nu.empty()) {
        j["intersection"] = one(parse_weight(d, s.basis, o.nu));
    } else {
        j["intersections"] = json::array();
        for (const auto& nu : weight_diagram(d, lam)) j["intersections"].push_back(one(nu));
    }
    emit(j);
    return 0;
}

int run_mult(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    OrbitLabel lam = parse_label(s, o.lambda, "lambda");
    if (!o.nu.empty()) {
        LatticeVector nu = parse_weight(d, s.basis, o.nu);
        json j;
        j["multiplicity"] = int_to_json(kostant_multiplicity(d, lam, nu));
        emit(j);
        return 0;
    }
    MultiplicityTable t = kostant_table(d, lam, Execution::parallel);
    if (o.format == "csv") {
        std::cout << table_to_csv(d, s.basis, t);
        return 0;
    }
    json j = base_output(s);
    j["table"] = table_to_json(d, s.basis, t);
    emit(j);
    return 0;
}

int run_tensor(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    OrbitLabel lam = parse_label(s, o.lambda, "lambda");
    OrbitLabel mu = parse_label(s, o.mu, "mu");
    TensorTable t = tensor_decompose(d, lam, mu, Execution::parallel);
    if (o.format == "csv") {
        std::cout << tensor_to_csv(d, s.basis, t);
        return 0;
    }
    json j = base_output(s);
    j["tensor"] = tensor_to_json(d, s.basis, t);
    emit(j);
    return 0;
}

int run_isogeny(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    json j = base_output(s);
    j["pi1"] = group_to_json(d.pi1());
    j["center_of_dual"] = group_to_json(center_of_dual(d).group);
    j["central_torus_rank"] = central_torus_rank(d);
    RootDatum ad = adjoint_datum(d);
    j["adjoint"] = {{"datum", datum_to_json(ad)}, {"pi1", group_to_json(ad.pi1())}};
    RootDatum der = derived_datum(d);
    j["derived"] = {{"datum", datum_to_json(der)}, {"pi1", group_to_json(der.pi1())}};
    IsogenyReport rep = dual_isogeny_kernel(der);
    j["dual_isogeny_kernel"] = group_to_json(rep.kernel);
    j["dual_isogeny_kernel_of"] = d.semisimple() ? "datum" : "derived subgroup";
    emit(j);
    return 0;
}

int run_weylmod(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    OrbitLabel lam = parse_label(s, o.lambda, "lambda");
    ModuleKind kind;
    if (o.kind == "weyl")
        kind = ModuleKind::weyl;
    else if (o.kind == "schur")
        kind = ModuleKind::schur;
    else
        throw spec_error("--kind must be 'weyl' or 'schur'");
    ModuleCharacter m = weyl_schur_character(d, lam, kind);
    json j = base_output(s);
    j["label"] = weight_to_json(d, s.basis, m.label);
    j["kind"] = o.kind;
    j["weight_ranks"] = table_to_json(d, s.basis, m.table);
    emit(j);
    return 0;
}

// Deterministic pick independent of the platform's distribution internals.
std::size_t pick(std::mt19937_64& gen, std::size_t n) { return gen() % n; }

int run_check(const Options& o) {
    Session s = open_session(o);
    const auto& d = s.datum;
    const Coord bound = o.height_bound;
    json j = base_output(s);
    j["suite"] = o.suite;
    json failures = json::array();

    auto record = [&](const CheckReport& r, const json& input) {
        if (!r.pass) {
            json f;
            f["input"] = input;
            f["report"] = report_to_json(r);
            failures.push_back(f);
        }
    };

    if (o.suite == "semismall") {
        auto doms = dominant_coweights_up_to(d, bound);
        long long checked = 0;
        for (const auto& lv : doms)
            for (const auto& mv : doms) {
                OrbitLabel lam(d, lv), mu(d, mv);
                std::set<LatticeVector> nus;
                for (const auto& phi : weight_diagram(d, lam))
                    for (const auto& psi : weight_diagram(d, mu)) nus.insert(phi + psi);
                for (const auto& nu : nus) {
                    ++checked;
                    record(semismall_estimate_check(d, lam, mu, nu),
                           json{{"lambda", weight_to_json(d, s.basis, lv)},
                                {"mu", weight_to_json(d, s.basis, mv)},
                                {"nu", weight_to_json(d, s.basis, nu)}});
                }
            }
        j["checked_triples"] = checked;
    } else if (o.suite == "tensor") {
        auto doms = dominant_coweights_up_to(d, bound);
        std::mt19937_64 gen(o.seed);
        const int n = o.count > 0 ? o.count : 50;
        for (int i = 0; i < n; ++i) {
            OrbitLabel lam(d, doms[pick(gen, doms.size())]);
            OrbitLabel mu(d, doms[pick(gen, doms.size())]);
            TensorTable t = tensor_decompose(d, lam, mu, Execution::parallel);
            CheckReport r = verify_support_and_top(d, t);
            if (!(t.entries == tensor_decompose(d, mu, lam).entries))
                r.fail("commutativity violation");
            Int lhs = 0;
            for (const auto& [eta, nn] : t.entries)
                lhs += nn * weyl_dimension(d, OrbitLabel(d, eta));
            if (lhs != weyl_dimension(d, lam) * weyl_dimension(d, mu))
                r.fail("dimension product mismatch");
            record(r, json{{"lambda", weight_to_json(d, s.basis, lam.lambda)},
                           {"mu", weight_to_json(d, s.basis, mu.lambda)}});
        }
        j["checked_pairs"] = n;
    } else if (o.suite == "assoc") {
        auto doms = dominant_coweights_up_to(d, bound);
        std::mt19937_64 gen(o.seed);
        const int n = o.count > 0 ? o.count : 25;
        for (int i = 0; i < n; ++i) {
            OrbitLabel a(d, doms[pick(gen, doms.size())]);
            OrbitLabel b(d, doms[pick(gen, doms.size())]);
            OrbitLabel c(d, doms[pick(gen, doms.size())]);
            record(associativity_check(d, a, b, c),
                   json{{"lambda", weight_to_json(d, s.basis, a.lambda)},
                        {"mu", weight_to_json(d, s.basis, b.lambda)},
                        {"eta", weight_to_json(d, s.basis, c.lambda)}});
        }
        j["checked_triples"] = n;
    } else if (o.suite == "iota") {
        // Exhaustive over pairs of coweights in the W-orbits of the dominant
        // cone up to the bound, shifted against each other through the coroot
        // lattice.
        std::set<LatticeVector> pts;
        for (const auto& lv : dominant_coweights_up_to(d, bound))
            for (const auto& nu : weight_diagram(d, OrbitLabel(d, lv))) pts.insert(nu);
        long long checked = 0;
        for (const auto& nu : pts)
            for (const auto& eta : pts) {
                if (!d.in_coroot_lattice(eta - nu)) continue;
                ++checked;
                if (!d.iota_order_check(nu, eta)) {
                    CheckReport r;
                    r.fail("iota order equivalence violated");
                    record(r, json{{"nu", weight_to_json(d, s.basis, nu)},
                                   {"eta", weight_to_json(d, s.basis, eta)}});
                }
            }
        j["checked_pairs"] = checked;
    } else {
        throw spec_error("unknown suite '" + o.suite +
                         "' (expected semismall, tensor, assoc or iota)");
    }

    j["pass"] = failures.empty();
    j["failures"] = failures;
    emit(j);
    return failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of the affine Grassmannian and dual-group representations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--type", o.type, "Datum type, e.g. A2-sc, B2-ad, GL3");
        c->add_option("--custom-spec", o.custom_spec, "JSON file with a datum spec");
        c->add_option("--format", o.format, "json or csv")->default_str("json");
        return c;
    };

    auto* dual = add_common(app.add_subcommand("dual", "Langlands dual datum"));
    auto* pi1 = add_common(app.add_subcommand("pi1", "Fundamental group of the datum"));
    auto* poset = add_common(app.add_subcommand("poset", "Orbit closure poset up to a height"));
    poset->add_option("--height-bound,--bound", o.height_bound, "Doubled height bound");
    auto* dims = add_common(app.add_subcommand("dims", "Orbit and intersection dimensions"));
    dims->add_option("--lambda", o.lambda, "Dominant coweight");
    dims->add_option("--nu", o.nu, "Weight (optional)");
    auto* mult = add_common(app.add_subcommand("mult", "Weight multiplicities / MV-cycle counts"));
    mult->add_option("--lambda", o.lambda, "Dominant coweight");
    mult->add_option("--nu", o.nu, "Weight (optional; prints one entry)");
    auto* tensor = add_common(app.add_subcommand("tensor", "Tensor product decomposition"));
    tensor->add_option("--lambda", o.lambda, "Dominant coweight");
    tensor->add_option("--mu", o.mu, "Dominant coweight");
    auto* isog = add_common(app.add_subcommand("isogeny", "Adjoint/derived/kernel report"));
    (void)isog;
    auto* weylmod = add_common(app.add_subcommand("weylmod", "Weyl/Schur module weight ranks"));
    weylmod->add_option("--lambda", o.lambda, "Dominant coweight");
    weylmod->add_option("--kind", o.kind, "weyl or schur");
    auto* check = add_common(app.add_subcommand("check", "Verification suites"));
    check->add_option("--suite", o.suite, "semismall, tensor, assoc or iota")->required();
    check->add_option("--height-bound,--bound", o.height_bound, "Doubled height bound");
    check->add_option("--seed", o.seed, "Seed for the random suites");
    check->add_option("--count", o.count, "Sample count for the random suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dual->parsed()) return run_dual(o);
        if (pi1->parsed()) return run_pi1(o);
        if (poset->parsed()) return run_poset(o);
        if (dims->parsed()) return run_dims(o);
        if (mult->parsed()) return run_mult(o);
        if (tensor->parsed()) return run_tensor(o);
        if (isog->parsed()) return run_isogeny(o);
        if (weylmod->parsed()) return run_weylmod(o);
        if (check->parsed()) return run_check(o);
    } catch (const satake::spec_error& e) {
        satake::json err;
        err["error"] = {{"kind", "spec"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const satake::integrity_error& e) {
        satake::json err;
        err["error"] = {{"kind", "integrity"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        satake::json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 1;
}
