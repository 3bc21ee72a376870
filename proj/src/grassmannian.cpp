#include "satake/grassmannian.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace satake {

namespace {

Coord to_coord(const Int& x) {
    if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min())
        throw integrity_error("coordinate overflow in component arithmetic");
    return x.convert_to<Coord>();
}

LatticeVector apply_int_matrix(const IntMatrix& m, const LatticeVector& v) {
    LatticeVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        r[i] = to_coord(acc);
    }
    return r;
}

Coord mod_nonneg(Coord a, const Int& d) {
    const Coord dd = to_coord(d);
    Coord r = a % dd;
    if (r < 0) r += dd;
    return r;
}

ComponentLabel label_from_smith_coords(const RootDatum& d, const LatticeVector& y) {
    const auto& s = d.coroot_smith();
    LatticeVector reduced(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.diag.size() && s.diag[i] != 0)
            reduced[i] = mod_nonneg(y[i], s.diag[i]);
        else
            reduced[i] = y[i];
    }
    ComponentLabel c;
    c.canonical = reduced;
    c.representative = apply_int_matrix(s.u_inv, reduced);
    return c;
}

}  // namespace

ComponentLabel component_of(const RootDatum& d, const LatticeVector& nu) {
    if (static_cast<int>(nu.size()) != d.rank()) throw spec_error("cocharacter of wrong rank");
    return label_from_smith_coords(d, apply_int_matrix(d.coroot_smith().u, nu));
}

ComponentLabel component_add(const RootDatum& d, const ComponentLabel& a,
                             const ComponentLabel& b) {
    return component_of(d, a.representative + b.representative);
}

Parity component_parity(const RootDatum& d, const ComponentLabel& c) {
    // <2rho, acheck> is even, so the parity of <2rho, nu> only depends on the
    // coset of nu.
    const Coord h = d.height2(c.representative);
    return (h % 2 + 2) % 2 == 0 ? Parity::even : Parity::odd;
}

Coord orbit_dim(const RootDatum& d, const OrbitLabel& lambda) {
    return d.height2(lambda.lambda);
}

bool closure_contains(const RootDatum& d, const OrbitLabel& lambda, const OrbitLabel& mu) {
    return d.dominance_leq(mu.lambda, lambda.lambda);
}

std::set<LatticeVector> s_closure_set(const RootDatum& d, const LatticeVector& nu,
                                      Coord height_bound) {
    if (height_bound < 0) throw spec_error("height bound must be nonnegative");
    std::set<LatticeVector> out{nu};
    std::deque<LatticeVector> queue{nu};
    const Coord top = d.height2(nu);
    while (!queue.empty()) {
        LatticeVector v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < d.num_simple(); ++i) {
            LatticeVector w = v - d.simple_coroot(i);
            if (top - d.height2(w) > height_bound) continue;
            if (out.insert(w).second) queue.push_back(w);
        }
    }
    return out;
}

bool is_weight_of(const RootDatum& d, const OrbitLabel& lambda, const LatticeVector& nu) {
    return d.dominance_leq(d.dominant_representative(nu).first, lambda.lambda);
}

namespace {
Coord halved(Coord doubled, const char* what) {
    if (doubled % 2 != 0)
        throw integrity_error(std::string(what) + ": doubled dimension is odd");
    if (doubled < 0)
        throw integrity_error(std::string(what) + ": negative dimension");
    return doubled / 2;
}
}  // namespace

std::optional<Coord> sv_intersection_dim(const RootDatum& d, const OrbitLabel& lambda,
                                         const LatticeVector& nu) {
    if (!is_weight_of(d, lambda, nu)) return std::nullopt;
    return halved(d.height2(nu + lambda.lambda), "sv_intersection_dim");
}

std::optional<Coord> tv_intersection_dim(const RootDatum& d, const OrbitLabel& lambda,
                                         const LatticeVector& nu) {
    if (!is_weight_of(d, lambda, nu)) return std::nullopt;
    return halved(-d.height2(nu + d.w0_cochar(lambda.lambda)), "tv_intersection_dim");
}

std::vector<LatticeVector> dominant_coweights_up_to(const RootDatum& d, Coord height2_bound) {
    if (!d.semisimple())
        throw spec_error("dominant coweight enumeration needs a semisimple datum");
    if (height2_bound < 0) throw spec_error("height bound must be nonnegative");
    const int s = d.num_simple();
    // <2rho, lambda> = sum c_i <alpha_i, lambda> with 2rho = sum c_i alpha_i,
    // so each fundamental coordinate of a dominant lambda is boxed.
    auto c = d.simple_root_coords(d.two_rho());
    if (!c) throw integrity_error("2rho outside the root lattice");
    std::vector<Coord> limit(s);
    for (int i = 0; i < s; ++i) {
        if ((*c)[i] <= 0) throw integrity_error("2rho with nonpositive simple coordinate");
        limit[i] = (height2_bound / (*c)[i]).convert_to<Coord>();
    }
    RatMatrix a(s, RatVector(d.rank()));
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < d.rank(); ++k) a[i][k] = d.simple_root(i)[k];

    std::vector<LatticeVector> out;
    std::vector<Coord> f(s, 0);
    for (;;) {
        Int h2 = 0;
        for (int i = 0; i < s; ++i) h2 += (*c)[i] * f[i];
        if (h2 <= height2_bound) {
            RatVector rhs(s);
            for (int i = 0; i < s; ++i) rhs[i] = f[i];
            auto sol = solve_linear(a, rhs);
            if (sol) {
                LatticeVector lam(d.rank());
                bool integral = true;
                for (int k = 0; k < d.rank(); ++k) {
                    if (boost::multiprecision::denominator((*sol)[k]) != 1) {
                        integral = false;
                        break;
                    }
                    lam[k] = boost::multiprecision::numerator((*sol)[k]).convert_to<Coord>();
                }
                if (integral) out.push_back(std::move(lam));
            }
        }
        int pos = 0;
        while (pos < s) {
            if (++f[pos] <= limit[pos]) break;
            f[pos] = 0;
            ++pos;
        }
        if (pos == s) break;
    }
    std::sort(out.begin(), out.end(), [&d](const LatticeVector& x, const LatticeVector& y) {
        const Coord hx = d.height2(x), hy = d.height2(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return out;
}

Coord fixed_point_dim_bound(const RootDatum& d, const OrbitLabel& lambda,
                            const std::set<LatticeVector>& fixed_points) {
    if (fixed_points.empty()) throw spec_error("fixed point set must be nonempty");
    bool have = false;
    Coord best = 0;
    for (const auto& nu : fixed_points) {
        if (!is_weight_of(d, lambda, nu))
            throw spec_error("fixed point outside the weights of L(lambda): " + to_string(nu));
        const Coord h = halved(d.height2(lambda.lambda + nu), "fixed_point_dim_bound");
        if (!have || h > best) {
            best = h;
            have = true;
        }
    }
    return best;
}

}  // namespace satake
