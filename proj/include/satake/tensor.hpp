#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/multiplicities.hpp"

namespace satake {

// Decomposition of L(lambda) ⊗ L(mu) into irreducibles of the dual group:
// entries map each dominant eta in the support to its multiplicity N^eta.
struct TensorTable {
    LatticeVector factor_lambda;
    LatticeVector factor_mu;
    std::map<LatticeVector, Int> entries;

    Int at(const LatticeVector& eta) const {
        auto it = entries.find(eta);
        return it == entries.end() ? Int(0) : it->second;
    }
    bool operator==(const TensorTable&) const = default;
};

// Outcome of a verification operation. Violations name the offending data;
// details carry the quantities the check compared.
struct CheckReport {
    bool pass = true;
    std::vector<std::string> violations;
    std::map<std::string, std::string> details;

    void fail(std::string what) {
        pass = false;
        violations.push_back(std::move(what));
    }
};

// Klimyk's signed dominance rule driven by the multiplicity table of lambda.
// Shifted weights landing on a wall contribute nothing; all cancellations are
// resolved, a negative final entry is a hard error.
TensorTable tensor_decompose(const RootDatum& d, const OrbitLabel& lambda, const OrbitLabel& mu,
                             Execution exec = Execution::serial);

// Support bound eta <= lambda+mu, top-piece normalization N^{lambda+mu} = 1,
// and component additivity under the pi1-grading.
CheckReport verify_support_and_top(const RootDatum& d, const TensorTable& t);

// Fixed-point bound behind semi-smallness of the convolution map: every
// T-fixed point (phi, psi) of the fiber over nu satisfies
// ht(lambda+phi) <= ht(lambda+mu+nu), with nu taken anti-dominant.
CheckReport semismall_estimate_check(const RootDatum& d, const OrbitLabel& lambda,
                                     const OrbitLabel& mu, const LatticeVector& nu);

// (lambda ⊗ mu) ⊗ eta = lambda ⊗ (mu ⊗ eta) as multiplicity tables.
CheckReport associativity_check(const RootDatum& d, const OrbitLabel& lambda,
                                const OrbitLabel& mu, const OrbitLabel& eta);

}  // namespace satake
