#include "satake/multiplicities.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "satake/detail/caches.hpp"

namespace satake {

Int MultiplicityTable::total_dim() const {
    Int s = 0;
    for (const auto& [nu, m] : entries) s += m;
    return s;
}

namespace {

// Positive coroots in a fixed order (height descending, then lex). The memo
// cache keys contain the recursion index, so the order must be reproducible
// across calls.
std::vector<LatticeVector> ordered_positive_coroots(const RootDatum& d) {
    std::vector<LatticeVector> v;
    v.reserve(d.num_positive());
    for (int k : d.positive()) v.push_back(d.coroots()[k]);
    std::sort(v.begin(), v.end(), [&d](const LatticeVector& a, const LatticeVector& b) {
        const Coord ha = d.height2(a), hb = d.height2(b);
        if (ha != hb) return ha > hb;
        return a < b;
    });
    return v;
}

struct PartitionContext {
    const RootDatum& d;
    std::vector<LatticeVector> coroots;
    std::vector<Coord> heights;

    explicit PartitionContext(const RootDatum& dd)
        : d(dd), coroots(ordered_positive_coroots(dd)) {
        for (const auto& c : coroots) heights.push_back(d.height2(c));
    }

    Int count(std::size_t k, const LatticeVector& beta, Coord height) {
        if (height == 0) return is_zero(beta) ? 1 : 0;
        if (height < 0 || k == coroots.size()) return 0;

        LatticeVector key(beta.size() + 1);
        key[0] = static_cast<Coord>(k);
        std::copy(beta.begin(), beta.end(), key.begin() + 1);
        auto& caches = d.caches();
        {
            std::shared_lock lock(caches.partition_mutex);
            auto it = caches.partition.find(key);
            if (it != caches.partition.end()) return it->second;
        }

        Int total = 0;
        LatticeVector rest = beta;
        Coord h = height;
        for (;;) {
            total += count(k + 1, rest, h);
            h -= heights[k];
            if (h < 0) break;
            rest = rest - coroots[k];
        }

        std::unique_lock lock(caches.partition_mutex);
        if (caches.partition.size() >= partition_cache_limit()) caches.partition.clear();
        caches.partition.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

Int kostant_partition(const RootDatum& d, const LatticeVector& beta) {
    if (static_cast<int>(beta.size()) != d.rank()) throw spec_error("beta of wrong rank");
    auto coords = d.simple_coroot_coords(beta);
    if (!coords) throw spec_error("kostant_partition: beta outside the coroot lattice");
    for (const Int& c : *coords)
        if (c < 0) return 0;
    PartitionContext ctx(d);
    return ctx.count(0, beta, d.height2(beta));
}

Int kostant_multiplicity(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu) {
    if (!is_weight_of(d, lambda, nu)) return 0;
    const auto& w = d.weyl();
    // Doubled throughout: arguments of the partition function are differences,
    // so the factor 2 divides out exactly.
    const LatticeVector shifted = 2 * lambda.lambda + d.two_rho_check();
    const LatticeVector target = 2 * nu + d.two_rho_check();
    PartitionContext ctx(d);
    Int acc = 0;
    for (std::size_t i = 0; i < w.order(); ++i) {
        LatticeVector t = w.apply(i, shifted) - target;
        LatticeVector beta(t.size());
        bool even = true;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] % 2 != 0) even = false;
            beta[j] = t[j] / 2;
        }
        if (!even) throw integrity_error("kostant_multiplicity: odd doubled coordinate");
        const Coord h = d.height2(beta);
        if (h < 0) continue;
        auto coords = d.simple_coroot_coords(beta);
        if (!coords) continue;
        bool in_cone = true;
        for (const Int& c : *coords)
            if (c < 0) in_cone = false;
        if (!in_cone) continue;
        const Int p = ctx.count(0, beta, h);
        acc += w.signs[i] * p;
    }
    if (acc < 0) throw integrity_error("kostant_multiplicity: negative result");
    return acc;
}

Int mv_cycle_count(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu) {
    return kostant_multiplicity(d, lambda, nu);
}

std::set<LatticeVector> weight_diagram(const RootDatum& d, const OrbitLabel& lambda) {
    // Enumerate lambda - beta over the truncated positive cone and keep the
    // points whose dominant representative stays below lambda.
    const Coord bound = 2 * d.height2(lambda.lambda);
    std::set<LatticeVector> cone{LatticeVector(d.rank(), 0)};
    std::deque<LatticeVector> queue{LatticeVector(d.rank(), 0)};
    while (!queue.empty()) {
        LatticeVector b = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < d.num_simple(); ++i) {
            LatticeVector nb = b + d.simple_coroot(i);
            if (d.height2(nb) > bound) continue;
            if (cone.insert(nb).second) queue.push_back(nb);
        }
    }
    std::set<LatticeVector> out;
    for (const auto& b : cone) {
        LatticeVector nu = lambda.lambda - b;
        if (d.dominance_leq(d.dominant_representative(nu).first, lambda.lambda)) out.insert(nu);
    }
    return out;
}

MultiplicityTable kostant_table(const RootDatum& d, const OrbitLabel& lambda, Execution exec) {
    auto weights = weight_diagram(d, lambda);
    std::vector<LatticeVector> ws(weights.begin(), weights.end());
    std::vector<Int> mult(ws.size());
    d.weyl();  // force enumeration before the parallel region
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < ws.size(); ++i)
            mult[i] = kostant_multiplicity(d, lambda, ws[i]);
    } else {
        for (std::size_t i = 0; i < ws.size(); ++i)
            mult[i] = kostant_multiplicity(d, lambda, ws[i]);
    }
    MultiplicityTable t;
    t.highest = lambda.lambda;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (mult[i] <= 0)
            throw integrity_error("kostant_table: weight in the diagram with multiplicity 0");
        t.entries.emplace(ws[i], mult[i]);
    }
    return t;
}

MultiplicityTable freudenthal_table(const RootDatum& d, const OrbitLabel& lambda) {
    const InvariantForm form = d.dual().invariant_form();  // form on X_*⊗Q
    auto weights = weight_diagram(d, lambda);
    std::vector<LatticeVector> ws(weights.begin(), weights.end());
    std::sort(ws.begin(), ws.end(), [&d](const LatticeVector& a, const LatticeVector& b) {
        const Coord ha = d.height2(a), hb = d.height2(b);
        if (ha != hb) return ha > hb;
        return a < b;
    });

    const RatVector rho = [&] {
        RatVector r = to_rat(d.two_rho_check());
        for (auto& x : r) x /= 2;
        return r;
    }();
    auto plus_rho = [&](const LatticeVector& v) {
        RatVector r = to_rat(v);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += rho[i];
        return r;
    };
    const RatVector top = plus_rho(lambda.lambda);
    const Rat top_norm = form.eval(top, top);

    std::vector<LatticeVector> pos = ordered_positive_coroots(d);
    std::map<LatticeVector, Int> table;
    table[lambda.lambda] = 1;
    for (const auto& mu : ws) {
        if (mu == lambda.lambda) continue;
        Rat num = 0;
        for (const auto& a : pos) {
            const RatVector ar = to_rat(a);
            LatticeVector up = mu;
            for (;;) {
                up = up + a;
                auto it = table.find(up);
                if (it == table.end()) {
                    if (!weights.count(up)) break;
                    throw integrity_error("freudenthal_table: order violation");
                }
                num += form.eval(to_rat(up), ar) * Rat(it->second);
            }
        }
        const RatVector mup = plus_rho(mu);
        const Rat denom = top_norm - form.eval(mup, mup);
        if (denom <= 0) throw integrity_error("freudenthal_table: nonpositive denominator");
        const Rat m = 2 * num / denom;
        if (boost::multiprecision::denominator(m) != 1)
            throw integrity_error("freudenthal_table: non-integral multiplicity at " +
                                  to_string(mu));
        const Int mi = boost::multiprecision::numerator(m);
        if (mi <= 0)
            throw integrity_error("freudenthal_table: non-positive multiplicity at " +
                                  to_string(mu));
        table.emplace(mu, mi);
    }
    MultiplicityTable t;
    t.highest = lambda.lambda;
    t.entries = std::move(table);
    return t;
}

Int weyl_dimension(const RootDatum& d, const OrbitLabel& lambda) {
    const LatticeVector num_arg = 2 * lambda.lambda + d.two_rho_check();
    Int num = 1, den = 1;
    for (int k : d.positive()) {
        num *= Int(RootDatum::pair(d.roots()[k], num_arg));
        den *= Int(RootDatum::pair(d.roots()[k], d.two_rho_check()));
    }
    if (den == 0 || num % den != 0)
        throw integrity_error("weyl_dimension: non-integral product");
    Int r = num / den;
    if (r <= 0) throw integrity_error("weyl_dimension: non-positive result");
    return r;
}

PoincareVector ic_poincare(const RootDatum& d, const OrbitLabel& lambda, Execution exec) {
    MultiplicityTable t = kostant_table(d, lambda, exec);
    PoincareVector p;
    for (const auto& [nu, m] : t.entries) p.dims[d.height2(nu)] += m;
    return p;
}

}  // namespace satake
