// Acceptance suite: thirteen independent criteria, one pass/fail line each.
// Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "satake/isogeny.hpp"
#include "satake/json_io.hpp"

using namespace satake;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass) {
    std::cout << "criterion " << number << " [" << (pass ? "PASS" : "FAIL") << "] " << what
              << "\n";
    if (!pass) ++failures;
}

RootDatum make(const char* family_rank, Isogeny iso) {
    return RootDatum::from_cartan(parse_cartan_type(family_rank), iso);
}

// The lambda range shared by criteria 2, 3, 4, 5, 11 and 12: every dominant
// coweight with <2rho, lambda> <= 16 in A1, A2, B2, G2 and <= 10 in A3,
// simply connected coweight lattices.
std::vector<std::pair<RootDatum, std::vector<LatticeVector>>> criterion2_range() {
    std::vector<std::pair<RootDatum, std::vector<LatticeVector>>> out;
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        auto doms = dominant_coweights_up_to(d, 16);
        out.emplace_back(std::move(d), std::move(doms));
    }
    RootDatum a3 = make("A3", Isogeny::simply_connected);
    auto doms = dominant_coweights_up_to(a3, 10);
    out.emplace_back(std::move(a3), std::move(doms));
    return out;
}

void criterion1() {
    bool pass = true;
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2",
                          "F4"})
        for (Isogeny iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
            RootDatum d = make(t, iso);
            pass = pass && d.dual().dual() == d;
        }
    for (int n = 1; n <= 4; ++n) {
        RootDatum d = RootDatum::general_linear(n);
        pass = pass && d.dual().dual() == d;
    }
    report(1, "duality is an involution on all built-in data", pass);
}

void criteria_2_to_5_11_12() {
    bool pass2 = true, pass3 = true, pass4 = true, pass5 = true, pass11 = true, pass12 = true;
    for (const auto& [d, doms] : criterion2_range()) {
        for (const auto& lv : doms) {
            OrbitLabel lam(d, lv);
            MultiplicityTable k = kostant_table(d, lam, Execution::parallel);
            MultiplicityTable f = freudenthal_table(d, lam);
            pass2 = pass2 && k == f;
            pass3 = pass3 && k.total_dim() == weyl_dimension(d, lam);

            // Support law: positive multiplicity exactly on the weight diagram.
            auto diagram = weight_diagram(d, lam);
            pass4 = pass4 && diagram.size() == k.entries.size();
            for (const auto& [nu, m] : k.entries)
                pass4 = pass4 && m > 0 && diagram.count(nu) == 1;

            for (const auto& nu : diagram) {
                auto sv = sv_intersection_dim(d, lam, nu);
                auto tv = tv_intersection_dim(d, lam, nu);
                pass5 = pass5 && sv && tv && *sv >= 0 && *tv >= 0 &&
                        *sv + *tv == orbit_dim(d, lam);
            }

            // Palindromic and parity-pure graded dimensions.
            PoincareVector p = ic_poincare(d, lam);
            const Coord top = d.height2(lv);
            const Coord par = ((top % 2) + 2) % 2;
            pass11 = pass11 &&
                     par == (component_parity(d, component_of(d, lv)) == Parity::odd ? 1 : 0);
            for (const auto& [deg, m] : p.dims) {
                pass11 = pass11 && ((deg % 2) + 2) % 2 == par;
                auto it = p.dims.find(-deg);
                pass11 = pass11 && it != p.dims.end() && it->second == m;
            }

            // Weyl/Schur duality of the weight-space ranks.
            ModuleCharacter w = weyl_schur_character(d, lam, ModuleKind::weyl);
            ModuleCharacter s = weyl_schur_character(d, lam, ModuleKind::schur);
            pass12 = pass12 && w.table == s.table;
            ModuleCharacter sd =
                weyl_schur_character(d, OrbitLabel(d, -d.w0_cochar(lv)), ModuleKind::schur);
            for (const auto& [nu, m] : w.table.entries)
                pass12 = pass12 && sd.table.at(-nu) == m;
        }
    }
    report(2, "Kostant and Freudenthal multiplicities agree on the full range", pass2);
    report(3, "multiplicities sum to the Weyl dimension", pass3);
    report(4, "multiplicity is positive exactly below lambda", pass4);
    report(5, "semi-infinite intersection dimensions are complementary integers", pass5);
    report(11, "graded multiplicity vectors are palindromic and parity-pure", pass11);
    report(12, "Weyl and Schur weight ranks are kind-independent and dual", pass12);
}

void criterion6() {
    bool pass = true;
    long long checked = 0;
    for (const char* t : {"A2", "B2", "G2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        std::set<LatticeVector> pts;
        for (const auto& lv : dominant_coweights_up_to(d, 12))
            for (const auto& nu : weight_diagram(d, OrbitLabel(d, lv))) pts.insert(nu);
        for (const auto& nu : pts)
            for (const auto& eta : pts) {
                if (!d.in_coroot_lattice(eta - nu)) continue;
                ++checked;
                pass = pass && d.iota_order_check(nu, eta);
            }
    }
    report(6, "iota preserves and reflects dominance on " + std::to_string(checked) + " pairs",
           pass);
}

void criterion7() {
    bool pass = true;
    long long checked = 0;
    for (const char* t : {"A1", "A2", "B2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        auto doms = dominant_coweights_up_to(d, 8);
        for (const auto& lv : doms)
            for (const auto& mv : doms) {
                OrbitLabel lam(d, lv), mu(d, mv);
                std::set<LatticeVector> nus;
                for (const auto& phi : weight_diagram(d, lam))
                    for (const auto& psi : weight_diagram(d, mu)) nus.insert(phi + psi);
                for (const auto& nu : nus) {
                    ++checked;
                    pass = pass && semismall_estimate_check(d, lam, mu, nu).pass;
                }
            }
    }
    report(7, "fixed-point height estimate holds for " + std::to_string(checked) + " triples",
           pass);
}

void criterion8() {
    bool pass = true;
    for (const char* t : {"A2", "B2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        auto doms = dominant_coweights_up_to(d, 10);
        std::mt19937_64 gen(0x5a5a ^ static_cast<unsigned>(t[0]));
        for (int i = 0; i < 50; ++i) {
            OrbitLabel lam(d, doms[gen() % doms.size()]);
            OrbitLabel mu(d, doms[gen() % doms.size()]);
            TensorTable tab = tensor_decompose(d, lam, mu, Execution::parallel);
            pass = pass && verify_support_and_top(d, tab).pass;
            pass = pass && tab.entries == tensor_decompose(d, mu, lam).entries;
            Int lhs = 0;
            for (const auto& [eta, n] : tab.entries) {
                pass = pass && n > 0;
                lhs += n * weyl_dimension(d, OrbitLabel(d, eta));
            }
            pass = pass && lhs == weyl_dimension(d, lam) * weyl_dimension(d, mu);
        }
    }
    report(8, "tensor contracts hold on 50 seeded pairs per type", pass);
}

void criterion9() {
    bool pass = true;
    for (const char* t : {"A1", "A2", "B2"}) {
        RootDatum d = make(t, Isogeny::simply_connected);
        auto doms = dominant_coweights_up_to(d, 8);
        std::mt19937_64 gen(0xa55a ^ static_cast<unsigned>(t[0]));
        for (int i = 0; i < 25; ++i) {
            OrbitLabel a(d, doms[gen() % doms.size()]);
            OrbitLabel b(d, doms[gen() % doms.size()]);
            OrbitLabel c(d, doms[gen() % doms.size()]);
            pass = pass && associativity_check(d, a, b, c).pass;
        }
    }
    // Closed-form rank-one decomposition.
    RootDatum a1 = make("A1", Isogeny::adjoint);
    for (Coord a = 0; a <= 20 && pass; ++a)
        for (Coord b = 0; b <= 20 && pass; ++b) {
            TensorTable tab = tensor_decompose(a1, OrbitLabel(a1, {a}), OrbitLabel(a1, {b}));
            pass = pass && static_cast<Coord>(tab.entries.size()) == std::min(a, b) + 1;
            for (Coord k = 0; k <= std::min(a, b); ++k)
                pass = pass && tab.at({a + b - 2 * k}) == 1;
        }
    report(9, "tensor decomposition is associative and matches rank-one closed form", pass);
}

void criterion10() {
    bool pass = true;
    for (int n = 2; n <= 5; ++n) {
        CartanType t{'A', n - 1};
        pass = pass && RootDatum::from_cartan(t, Isogeny::simply_connected).pi1().trivial();
        FiniteAbelianGroup pgl = RootDatum::from_cartan(t, Isogeny::adjoint).pi1();
        pass = pass && pgl.free_rank == 0 && pgl.torsion_order() == n &&
               pgl.invariant_factors.size() == 1;
        FiniteAbelianGroup gl = RootDatum::general_linear(n).pi1();
        pass = pass && gl.free_rank == 1 && gl.invariant_factors.empty();
    }
    pass = pass &&
           dual_isogeny_kernel(make("A2", Isogeny::simply_connected)).kernel.describe() == "Z/3";
    pass = pass &&
           dual_isogeny_kernel(make("C2", Isogeny::simply_connected)).kernel.describe() == "Z/2";
    report(10, "fundamental groups and dual isogeny kernels", pass);
}

// ---- criterion 13: the command-line binary ----

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    FILE* p = popen((std::string(SATAKE_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int rc = pclose(p);
    r.status = rc < 0 ? rc : WEXITSTATUS(rc);
    return r;
}

void criterion13() {
    bool pass = true;
    const std::vector<std::string> commands = {
        "dual --type B2-sc",
        "pi1 --type A2-ad",
        "poset --type A2-sc --bound 8",
        "dims --type A2-sc --lambda 1,1",
        "mult --type G2-sc --lambda 0,1",
        "mult --type A2-sc --lambda 1,1 --format csv",
        "tensor --type B2-sc --lambda 0,1 --mu 0,2",
        "tensor --type A1-ad --lambda 3 --mu 2 --format csv",
        "isogeny --type GL3",
        "weylmod --type C2-sc --lambda 1,0 --kind schur",
        "check --type A2-sc --suite iota --bound 6",
        "check --type B2-sc --suite tensor --bound 8 --seed 11 --count 10",
        "check --type A1-sc --suite assoc --bound 8 --seed 5 --count 10",
        "check --type A1-sc --suite semismall --bound 6",
    };
    for (const auto& c : commands) {
        CliResult a = run_cli(c);
        CliResult b = run_cli(c);
        pass = pass && a.status == 0 && a.out == b.out && !a.out.empty();
    }
    // Domain errors exit with status 1 and a structured message.
    pass = pass && run_cli("tensor --type B2-sc --lambda 1,0 --mu 1,1").status == 1;
    pass = pass && run_cli("mult --type Z9-sc --lambda 1").status == 1;

    // Round trip on 20 specs: serialize the dual, feed it back, dualize again
    // and compare with the canonical serialization of the original datum.
    std::vector<std::string> specs = {"A1-sc", "A1-ad", "A2-sc", "A2-ad", "A3-sc", "A3-ad",
                                      "B2-sc", "B2-ad", "B3-sc", "B3-ad", "C2-sc", "C2-ad",
                                      "C3-sc", "D4-sc", "G2-sc", "F4-sc", "GL1",   "GL2",
                                      "GL3",   "GL4"};
    for (const auto& name : specs) {
        CliResult first = run_cli("dual --type " + name);
        pass = pass && first.status == 0;
        const std::string path = "acceptance_roundtrip_spec.json";
        std::ofstream(path) << first.out;
        CliResult second = run_cli("dual --custom-spec " + path);
        pass = pass && second.status == 0;
        RootDatum original = realize(parse_type_string(name));
        pass = pass && second.out == datum_to_json(original).dump(2) + "\n";
        std::remove(path.c_str());
    }
    report(13, "command-line output is deterministic and round-trips 20 specs", pass);
}

}  // namespace

int main() {
    criterion1();
    criteria_2_to_5_11_12();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion13();
    if (failures > 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 13 criteria passed\n";
    return 0;
}
