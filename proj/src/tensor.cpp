#include "satake/tensor.hpp"

#include <optional>
#include <sstream>

namespace satake {

namespace {

// Dominant conjugate with the sign of the conjugating element; nullopt when
// the vector lies on a wall (degenerate Klimyk term).
std::optional<std::pair<LatticeVector, int>> regular_dominant(const RootDatum& d,
                                                              LatticeVector v) {
    int sign = 1;
    for (;;) {
        int neg = -1;
        bool wall = false;
        for (int i = 0; i < d.num_simple(); ++i) {
            const Coord p = RootDatum::pair(d.simple_root(i), v);
            if (p < 0) {
                neg = i;
                break;
            }
            if (p == 0) wall = true;
        }
        if (neg < 0) {
            if (wall) return std::nullopt;
            return std::make_pair(v, sign);
        }
        v = d.reflect_cochar(neg, v);
        sign = -sign;
    }
}

void accumulate_klimyk(const RootDatum& d, const LatticeVector& mu2_shift,
                       const LatticeVector& nu, const Int& mult,
                       std::map<LatticeVector, Int>& acc) {
    // Doubled: x = 2(nu + mu) + 2 rho-check.
    LatticeVector x = 2 * nu + mu2_shift;
    auto dom = regular_dominant(d, x);
    if (!dom) return;
    LatticeVector eta2 = dom->first - d.two_rho_check();
    LatticeVector eta(eta2.size());
    for (std::size_t i = 0; i < eta2.size(); ++i) {
        if (eta2[i] % 2 != 0) throw integrity_error("tensor_decompose: odd doubled coordinate");
        eta[i] = eta2[i] / 2;
    }
    acc[eta] += dom->second * mult;
}

}  // namespace

TensorTable tensor_decompose(const RootDatum& d, const OrbitLabel& lambda, const OrbitLabel& mu,
                             Execution exec) {
    const MultiplicityTable table = kostant_table(d, lambda, exec);
    std::vector<std::pair<LatticeVector, Int>> items(table.entries.begin(), table.entries.end());
    const LatticeVector mu2_shift = 2 * mu.lambda + d.two_rho_check();

    std::map<LatticeVector, Int> acc;
    if (exec == Execution::parallel) {
#pragma omp parallel
        {
            std::map<LatticeVector, Int> local;
#pragma omp for schedule(dynamic) nowait
            for (std::size_t i = 0; i < items.size(); ++i)
                accumulate_klimyk(d, mu2_shift, items[i].first, items[i].second, local);
#pragma omp critical(satake_tensor_merge)
            for (const auto& [eta, n] : local) acc[eta] += n;
        }
    } else {
        for (const auto& [nu, m] : items) accumulate_klimyk(d, mu2_shift, nu, m, acc);
    }

    TensorTable t;
    t.factor_lambda = lambda.lambda;
    t.factor_mu = mu.lambda;
    for (const auto& [eta, n] : acc) {
        if (n < 0)
            throw integrity_error("tensor_decompose: negative multiplicity at " + to_string(eta));
        if (n > 0) t.entries.emplace(eta, n);
    }
    return t;
}

CheckReport verify_support_and_top(const RootDatum& d, const TensorTable& t) {
    CheckReport r;
    const LatticeVector top = t.factor_lambda + t.factor_mu;
    const ComponentLabel expected = component_add(d, component_of(d, t.factor_lambda),
                                                  component_of(d, t.factor_mu));
    for (const auto& [eta, n] : t.entries) {
        if (n < 1) r.fail("entry below 1 at " + to_string(eta));
        if (!d.dominance_leq(eta, top))
            r.fail("support violation: " + to_string(eta) + " not <= " + to_string(top));
        if (!(component_of(d, eta) == expected))
            r.fail("component additivity violation at " + to_string(eta));
    }
    if (t.at(top) != 1)
        r.fail("top piece N^{lambda+mu} = " + t.at(top).str() + ", expected 1");
    r.details["support_size"] = std::to_string(t.entries.size());
    return r;
}

CheckReport semismall_estimate_check(const RootDatum& d, const OrbitLabel& lambda,
                                     const OrbitLabel& mu, const LatticeVector& nu) {
    CheckReport r;
    // The estimate is stated for anti-dominant nu; conjugating the orbit label
    // loses nothing.
    const LatticeVector nu_anti = d.w0_cochar(d.dominant_representative(nu).first);
    const Coord bound2 = d.height2(lambda.lambda + mu.lambda + nu_anti);
    Coord max2 = 0;
    bool any = false;
    for (const auto& phi : weight_diagram(d, lambda)) {
        const LatticeVector psi = nu_anti - phi;
        if (!is_weight_of(d, mu, psi)) continue;
        const Coord h2 = d.height2(lambda.lambda + phi);
        if (!any || h2 > max2) max2 = h2;
        any = true;
        if (h2 > bound2) {
            std::ostringstream os;
            os << "pair phi=" << to_string(phi) << " psi=" << to_string(psi)
               << ": 2ht(lambda+phi)=" << h2 << " exceeds bound " << bound2;
            r.fail(os.str());
        }
    }
    r.details["fixed_point_pairs"] = any ? "present" : "none";
    r.details["max2"] = any ? std::to_string(max2) : "-";
    r.details["bound2"] = std::to_string(bound2);
    return r;
}

CheckReport associativity_check(const RootDatum& d, const OrbitLabel& lambda,
                                const OrbitLabel& mu, const OrbitLabel& eta) {
    auto composite = [&d](const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c) {
        // ((a ⊗ b) ⊗ c)
        std::map<LatticeVector, Int> out;
        for (const auto& [sigma, n] : tensor_decompose(d, a, b).entries) {
            for (const auto& [tau, k] :
                 tensor_decompose(d, OrbitLabel(d, sigma), c).entries)
                out[tau] += n * k;
        }
        return out;
    };
    auto composite_right = [&d](const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c) {
        // (a ⊗ (b ⊗ c))
        std::map<LatticeVector, Int> out;
        for (const auto& [sigma, n] : tensor_decompose(d, b, c).entries) {
            for (const auto& [tau, k] :
                 tensor_decompose(d, a, OrbitLabel(d, sigma)).entries)
                out[tau] += n * k;
        }
        return out;
    };
    CheckReport r;
    const auto left = composite(lambda, mu, eta);
    const auto right = composite_right(lambda, mu, eta);
    if (left != right) {
        r.fail("composite tables differ for (" + to_string(lambda.lambda) + ", " +
               to_string(mu.lambda) + ", " + to_string(eta.lambda) + ")");
        for (const auto& [tau, n] : left) {
            auto it = right.find(tau);
            if (it == right.end() || it->second != n)
                r.violations.push_back("  at " + to_string(tau) + ": left " + n.str() +
                                       " vs right " +
                                       (it == right.end() ? std::string("0") : it->second.str()));
        }
    }
    r.details["irreducible_summands"] = std::to_string(left.size());
    return r;
}

}  // namespace satake
