#include "satake/root_datum.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "satake/detail/caches.hpp"

namespace satake {

namespace {
std::atomic<std::size_t> g_partition_cache_limit{1u << 22};
}

void set_partition_cache_limit(std::size_t entries) { g_partition_cache_limit = entries; }
std::size_t partition_cache_limit() { return g_partition_cache_limit; }

Rat InvariantForm::eval(const RatVector& x, const RatVector& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < gram.size(); ++j) s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

Rat InvariantForm::eval(const LatticeVector& x, const LatticeVector& y) const {
    return eval(to_rat(x), to_rat(y));
}

LatticeVector WeylGroup::apply(std::size_t w, const LatticeVector& nu) const {
    const auto& m = matrices[w];
    LatticeVector r(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r[i] += m[i * rank + j] * nu[j];
    return r;
}

LatticeVector RootDatum::reflect_cochar(int i, const LatticeVector& nu) const {
    const Coord c = pair(simple_root(i), nu);
    return nu - c * simple_coroot(i);
}

LatticeVector RootDatum::reflect_char(int i, const LatticeVector& chi) const {
    const Coord c = pair(chi, simple_coroot(i));
    return chi - c * simple_root(i);
}

bool RootDatum::is_dominant(const LatticeVector& nu) const {
    for (int i = 0; i < num_simple(); ++i)
        if (pair(simple_root(i), nu) < 0) return false;
    return true;
}

std::pair<LatticeVector, std::vector<int>> RootDatum::dominant_representative(
    const LatticeVector& nu) const {
    LatticeVector v = nu;
    std::vector<int> word;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < num_simple(); ++i)
            if (pair(simple_root(i), v) < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return {v, word};
        v = reflect_cochar(neg, v);
        word.push_back(neg);
    }
}

LatticeVector RootDatum::w0_cochar(const LatticeVector& nu) const {
    LatticeVector v = nu;
    for (int i : w0_word_) v = reflect_cochar(i, v);
    return v;
}

std::optional<std::vector<Int>> RootDatum::simple_coroot_coords(const LatticeVector& nu) const {
    const int s = num_simple();
    RatMatrix m(rank_, RatVector(s));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < s; ++j) m[i][j] = simple_coroot(j)[i];
    auto sol = solve_linear(m, to_rat(nu));
    if (!sol) return std::nullopt;
    std::vector<Int> out(s);
    for (int j = 0; j < s; ++j) {
        if (boost::multiprecision::denominator((*sol)[j]) != 1) return std::nullopt;
        out[j] = boost::multiprecision::numerator((*sol)[j]);
    }
    return out;
}

std::optional<std::vector<Int>> RootDatum::simple_root_coords(const LatticeVector& chi) const {
    const int s = num_simple();
    RatMatrix m(rank_, RatVector(s));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < s; ++j) m[i][j] = simple_root(j)[i];
    auto sol = solve_linear(m, to_rat(chi));
    if (!sol) return std::nullopt;
    std::vector<Int> out(s);
    for (int j = 0; j < s; ++j) {
        if (boost::multiprecision::denominator((*sol)[j]) != 1) return std::nullopt;
        out[j] = boost::multiprecision::numerator((*sol)[j]);
    }
    return out;
}

bool RootDatum::in_coroot_lattice(const LatticeVector& nu) const {
    return simple_coroot_coords(nu).has_value();
}

bool RootDatum::dominance_leq(const LatticeVector& mu, const LatticeVector& lambda) const {
    auto coords = simple_coroot_coords(lambda - mu);
    if (!coords) return false;
    for (const Int& c : *coords)
        if (c < 0) return false;
    return true;
}

RatVector RootDatum::iota(const LatticeVector& nu) const {
    const int s = num_simple();
    // Coroot-span component of nu in the simple coroot basis.
    RatVector p(s);
    for (int j = 0; j < s; ++j) p[j] = pair(simple_root(j), nu);
    RatVector c = rat_apply(cartan_inv_, p);
    RatVector out(rank_, Rat(0));
    for (int i = 0; i < s; ++i) {
        const Rat coeff = c[i] * 2 / form_.simple_norm2[i];
        for (int k = 0; k < rank_; ++k) out[k] += coeff * simple_root(i)[k];
    }
    return out;
}

bool RootDatum::iota_order_check(const LatticeVector& nu, const LatticeVector& eta) const {
    const LatticeVector delta = eta - nu;
    auto coords = simple_coroot_coords(delta);
    if (!coords) throw spec_error("iota_order_check: difference not in the coroot lattice");
    bool left = !is_zero(delta);
    for (const Int& c : *coords)
        if (c < 0) left = false;

    // Right side computed independently through iota and the root lattice.
    const RatVector inu = iota(nu), ieta = iota(eta);
    const int s = num_simple();
    RatMatrix m(rank_, RatVector(s));
    RatVector rhs(rank_);
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < s; ++j) m[i][j] = simple_root(j)[i];
        rhs[i] = ieta[i] - inu[i];
    }
    auto sol = solve_linear(m, rhs);
    bool right = sol.has_value();
    bool nonzero = false;
    if (right)
        for (const Rat& x : *sol) {
            if (boost::multiprecision::denominator(x) != 1 || x < 0) right = false;
            if (x != 0) nonzero = true;
        }
    right = right && nonzero;
    return left == right;
}

RootDatum RootDatum::dual() const {
    RootDatum d;
    d.rank_ = rank_;
    d.roots_ = coroots_;
    d.coroots_ = roots_;
    d.simple_ = simple_;
    d.finalize();
    return d;
}

RootDatum RootDatum::from_cartan_matrix(const CartanMatrix& cm, Isogeny isogeny) {
    if (!is_finite_type(cm)) throw spec_error("Cartan matrix is not of finite type");
    const int n = static_cast<int>(cm.size());
    std::vector<LatticeVector> roots(n), coroots(n);
    std::vector<int> simple(n);
    for (int i = 0; i < n; ++i) {
        simple[i] = i;
        roots[i].assign(n, 0);
        coroots[i].assign(n, 0);
        if (isogeny == Isogeny::simply_connected) {
            // X_* = coroot lattice: coroots are the standard basis, roots are
            // Cartan matrix rows.
            coroots[i][i] = 1;
            for (int j = 0; j < n; ++j) roots[i][j] = cm[i][j];
        } else {
            // X* = root lattice: roots are the standard basis, coroots are
            // Cartan matrix columns.
            roots[i][i] = 1;
            for (int j = 0; j < n; ++j) coroots[i][j] = cm[j][i];
        }
    }
    return build(std::move(roots), std::move(coroots), std::move(simple), true);
}

RootDatum RootDatum::from_cartan(const CartanType& type, Isogeny isogeny) {
    return from_cartan_matrix(cartan_matrix(type), isogeny);
}

RootDatum RootDatum::general_linear(int n) {
    if (n < 1) throw spec_error("GL_n needs n >= 1");
    std::vector<LatticeVector> roots, coroots;
    std::vector<int> simple;
    for (int i = 0; i + 1 < n; ++i) {
        LatticeVector a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(static_cast<int>(roots.size()));
        roots.push_back(a);
        coroots.push_back(a);
    }
    return build(std::move(roots), std::move(coroots), std::move(simple), true, n);
}

RootDatum RootDatum::custom(std::vector<LatticeVector> roots, std::vector<LatticeVector> coroots,
                            std::vector<int> simple_indices, int rank_hint) {
    const bool simple_only = roots.size() == simple_indices.size();
    return build(std::move(roots), std::move(coroots), std::move(simple_indices), simple_only,
                 rank_hint);
}

RootDatum RootDatum::build(std::vector<LatticeVector> roots, std::vector<LatticeVector> coroots,
                           std::vector<int> simple_indices, bool allow_extend, int rank_hint) {
    if (roots.size() != coroots.size())
        throw spec_error("roots and coroots must be index-aligned lists of equal length");
    if (roots.empty() && !simple_indices.empty()) throw spec_error("simple indices out of range");
    if (roots.empty() && rank_hint < 0)
        throw spec_error("cannot deduce the rank of a datum without roots");
    const int rank = roots.empty() ? rank_hint : static_cast<int>(roots[0].size());
    for (const auto& v : roots)
        if (static_cast<int>(v.size()) != rank) throw spec_error("inconsistent root rank");
    for (const auto& v : coroots)
        if (static_cast<int>(v.size()) != rank) throw spec_error("inconsistent coroot rank");
    std::set<int> seen;
    for (int i : simple_indices) {
        if (i < 0 || i >= static_cast<int>(roots.size()) || !seen.insert(i).second)
            throw spec_error("bad simple index set");
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (dot(roots[i], coroots[i]) != 2)
            throw spec_error("pairing <alpha, alpha_check> must equal 2, got " +
                             std::to_string(dot(roots[i], coroots[i])) + " at index " +
                             std::to_string(i));

    const int s = static_cast<int>(simple_indices.size());
    CartanMatrix cm(s, std::vector<Coord>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            cm[i][j] = dot(roots[simple_indices[i]], coroots[simple_indices[j]]);
    if (!is_finite_type(cm)) throw spec_error("Cartan matrix is not of finite type");

    // Reflection closure of the simple pairs.
    std::vector<std::pair<LatticeVector, LatticeVector>> closure;
    std::map<LatticeVector, std::size_t> index;
    std::deque<std::size_t> queue;
    for (int i = 0; i < s; ++i) {
        const auto& a = roots[simple_indices[i]];
        const auto& ac = coroots[simple_indices[i]];
        if (index.count(a)) throw spec_error("duplicate simple root");
        index[a] = closure.size();
        queue.push_back(closure.size());
        closure.emplace_back(a, ac);
    }
    while (!queue.empty()) {
        auto [a, ac] = closure[queue.front()];
        queue.pop_front();
        for (int i = 0; i < s; ++i) {
            const auto& si = roots[simple_indices[i]];
            const auto& sic = coroots[simple_indices[i]];
            LatticeVector ra = a - dot(a, sic) * si;
            LatticeVector rac = ac - dot(si, ac) * sic;
            auto it = index.find(ra);
            if (it == index.end()) {
                index[ra] = closure.size();
                queue.push_back(closure.size());
                closure.emplace_back(std::move(ra), std::move(rac));
            } else if (closure[it->second].second != rac) {
                throw spec_error("simple reflections do not permute roots and coroots compatibly");
            }
        }
    }

    RootDatum d;
    d.rank_ = rank;
    if (allow_extend) {
        d.roots_.reserve(closure.size());
        d.coroots_.reserve(closure.size());
        for (auto& [a, ac] : closure) {
            d.roots_.push_back(std::move(a));
            d.coroots_.push_back(std::move(ac));
        }
        d.simple_.resize(s);
        for (int i = 0; i < s; ++i) d.simple_[i] = i;
    } else {
        if (roots.size() != closure.size())
            throw spec_error("given roots do not form a closed root system");
        for (std::size_t i = 0; i < roots.size(); ++i) {
            auto it = index.find(roots[i]);
            if (it == index.end() || closure[it->second].second != coroots[i])
                throw spec_error("given roots do not match their reflection closure");
        }
        d.roots_ = std::move(roots);
        d.coroots_ = std::move(coroots);
        d.simple_ = std::move(simple_indices);
    }
    d.finalize();
    return d;
}

void RootDatum::finalize() {
    const int s = num_simple();
    cartan_.assign(s, std::vector<Coord>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) cartan_[i][j] = pair(simple_root(i), simple_coroot(j));
    if (!is_finite_type(cartan_)) throw spec_error("Cartan matrix is not of finite type");

    // Positivity: every root must be an all-nonnegative or all-nonpositive
    // integer combination of the simple roots.
    positive_.clear();
    std::vector<std::vector<Int>> expansions(roots_.size());
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        auto coords = simple_root_coords(roots_[k]);
        if (!coords) throw spec_error("root outside the integer span of the simple roots");
        bool nonneg = true, nonpos = true;
        for (const Int& c : *coords) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
        }
        if (nonneg == nonpos) throw spec_error("root with mixed signs in the simple basis");
        if (nonneg) positive_.push_back(static_cast<int>(k));
        expansions[k] = std::move(*coords);
    }
    if (2 * positive_.size() != roots_.size())
        throw spec_error("root system is not symmetric under negation");

    two_rho_.assign(rank_, 0);
    two_rho_check_.assign(rank_, 0);
    for (int k : positive_) {
        two_rho_ = two_rho_ + roots_[k];
        two_rho_check_ = two_rho_check_ + coroots_[k];
    }

    if (s > 0) {
        RatMatrix cr(s, RatVector(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) cr[i][j] = cartan_[i][j];
        cartan_inv_ = rat_inverse(cr);
    } else {
        cartan_inv_.clear();
    }

    // Smith form of the simple-coroot inclusion; pi1 = cokernel.
    IntMatrix m(rank_, std::vector<Int>(s, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < s; ++j) m[i][j] = simple_coroot(j)[i];
    coroot_smith_ = smith_normal_form(m);
    pi1_ = FiniteAbelianGroup{};
    {
        std::size_t nonzero = 0;
        for (const Int& dd : coroot_smith_.diag) {
            if (dd == 0) break;
            ++nonzero;
            if (dd >= 2) pi1_.invariant_factors.push_back(dd);
        }
        pi1_.free_rank = static_cast<int>(rank_ - nonzero);
        semisimple_ = (static_cast<int>(nonzero) == rank_);
    }

    // W-invariant form: symmetrize the Cartan matrix, normalize each simple
    // component so its highest root has squared length 2, extend by zero on
    // the W-fixed complement {<., acheck_j> = 0}.
    std::vector<Rat> q = symmetrizer(cartan_);
    for (const auto& comp : dynkin_components(cartan_)) {
        // Highest root of the component: maximal height among positive roots
        // supported on it.
        Int best_height = -1;
        std::vector<Int> best;
        for (int k : positive_) {
            bool in_comp = true;
            Int height = 0;
            for (int i = 0; i < s; ++i) {
                if (expansions[k][i] != 0 &&
                    std::find(comp.begin(), comp.end(), i) == comp.end())
                    in_comp = false;
                height += expansions[k][i];
            }
            if (!in_comp) continue;
            if (height > best_height) {
                best_height = height;
                best = expansions[k];
            }
        }
        Rat theta_norm2 = 0;
        for (int i : comp)
            for (int j : comp)
                theta_norm2 += Rat(best[i]) * Rat(cartan_[i][j]) * q[j] * Rat(best[j]);
        if (theta_norm2 <= 0) throw integrity_error("highest root with nonpositive length");
        const Rat scale = Rat(2) / theta_norm2;
        for (int i : comp) q[i] *= scale;
    }
    form_.simple_norm2.assign(s, Rat(0));
    for (int i = 0; i < s; ++i) form_.simple_norm2[i] = 2 * q[i];
    // gram = A^T C^{-1} F C^{-T} A with A the simple coroots as rows and
    // F_ij = C_ij q_j the form on the simple roots.
    form_.gram.assign(rank_, RatVector(rank_, Rat(0)));
    if (s > 0) {
        RatMatrix a(s, RatVector(rank_));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < rank_; ++k) a[i][k] = simple_coroot(i)[k];
        RatMatrix f(s, RatVector(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) f[i][j] = Rat(cartan_[i][j]) * q[j];
        RatMatrix cinv_t(s, RatVector(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) cinv_t[i][j] = cartan_inv_[j][i];
        RatMatrix proj = rat_mul(cinv_t, a);  // s x rank
        RatMatrix proj_t(rank_, RatVector(s));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < s; ++j) proj_t[i][j] = proj[j][i];
        form_.gram = rat_mul(rat_mul(proj_t, f), proj);
    }

    w0_word_ = dominant_representative(-two_rho_check_).second;
    caches_ = std::make_shared<Caches>();
}

const WeylGroup& RootDatum::weyl() const {
    std::call_once(caches_->weyl_once, [this] {
        constexpr std::size_t kMaxOrder = 1000000;
        auto wg = std::make_unique<WeylGroup>();
        wg->rank = rank_;
        const int r = rank_;
        const int s = num_simple();
        std::vector<std::vector<Coord>> gens(s, std::vector<Coord>(r * r, 0));
        for (int g = 0; g < s; ++g)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    gens[g][i * r + j] =
                        (i == j ? 1 : 0) - simple_coroot(g)[i] * simple_root(g)[j];
        std::vector<Coord> ident(r * r, 0);
        for (int i = 0; i < r; ++i) ident[i * r + i] = 1;
        std::map<std::vector<Coord>, int> sign_of;
        sign_of[ident] = 1;
        std::deque<std::vector<Coord>> queue{ident};
        wg->matrices.push_back(ident);
        wg->signs.push_back(1);
        while (!queue.empty()) {
            auto m = std::move(queue.front());
            queue.pop_front();
            const int sign = sign_of[m];
            for (int g = 0; g < s; ++g) {
                std::vector<Coord> p(r * r, 0);
                for (int i = 0; i < r; ++i)
                    for (int k = 0; k < r; ++k) {
                        const Coord gik = gens[g][i * r + k];
                        if (gik == 0) continue;
                        for (int j = 0; j < r; ++j) p[i * r + j] += gik * m[k * r + j];
                    }
                if (sign_of.emplace(p, -sign).second) {
                    wg->matrices.push_back(p);
                    wg->signs.push_back(-sign);
                    queue.push_back(std::move(p));
                    if (wg->matrices.size() > kMaxOrder)
                        throw spec_error("Weyl group order above the 10^6 enumeration cap");
                }
            }
        }
        caches_->weyl = std::move(wg);
    });
    return *caches_->weyl;
}

}  // namespace satake
