#include "satake/smith.hpp"

#include <sstream>

namespace satake {

Int FiniteAbelianGroup::torsion_order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

std::string FiniteAbelianGroup::describe() const {
    if (trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Int& d : invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " x ";
        os << "Z^" << free_rank;
    }
    return os.str();
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
    IntMatrix a, u, u_inv, v;
    std::size_t m, n;

    explicit Worker(IntMatrix mat) : a(std::move(mat)) {
        m = a.size();
        n = m ? a[0].size() : 0;
        auto ident = [](std::size_t k) {
            IntMatrix id(k, std::vector<Int>(k, 0));
            for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
            return id;
        };
        u = ident(m);
        u_inv = ident(m);
        v = ident(n);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
        for (std::size_t k = 0; k < m; ++k) std::swap(u_inv[k][i], u_inv[k][j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(a[k][i], a[k][j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(v[k][i], v[k][j]);
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
        for (std::size_t k = 0; k < m; ++k) u_inv[k][i] = -u_inv[k][i];
    }
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] += c * a[j][k];
        for (std::size_t k = 0; k < m; ++k) u[i][k] += c * u[j][k];
        for (std::size_t k = 0; k < m; ++k) u_inv[k][j] -= c * u_inv[k][i];
    }
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < m; ++k) a[k][i] += c * a[k][j];
        for (std::size_t k = 0; k < n; ++k) v[k][i] += c * v[k][j];
    }

    // Deterministic pivot: smallest |entry| > 0 in the submatrix starting at
    // (t, t), first occurrence in row-major order.
    bool pivot(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Int ab = int_abs(a[i][j]);
                if (best == 0 || ab < best) {
                    best = ab;
                    bi = i;
                    bj = j;
                }
            }
        if (best == 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void run() {
        const std::size_t r = std::min(m, n);
        for (std::size_t t = 0; t < r; ++t) {
            for (;;) {
                if (!pivot(t)) return;
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a[i][t] == 0) continue;
                    Int q = a[i][t] / a[t][t];
                    add_row(i, t, -q);
                    if (a[i][t] != 0) dirty = true;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a[t][j] == 0) continue;
                    Int q = a[t][j] / a[t][t];
                    add_col(j, t, -q);
                    if (a[t][j] != 0) dirty = true;
                }
                if (dirty) continue;
                // Divisibility: fold in any entry the pivot does not divide.
                bool fixed = true;
                for (std::size_t i = t + 1; i < m && fixed; ++i)
                    for (std::size_t j = t + 1; j < n && fixed; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            add_row(t, i, 1);
                            fixed = false;
                        }
                if (fixed) break;
            }
            if (a[t][t] < 0) negate_row(t);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix mat) {
    Worker w(std::move(mat));
    w.run();
    SmithForm s;
    const std::size_t r = std::min(w.m, w.n);
    s.diag.resize(r);
    for (std::size_t i = 0; i < r; ++i) s.diag[i] = w.a[i][i];
    s.u = std::move(w.u);
    s.u_inv = std::move(w.u_inv);
    s.v = std::move(w.v);
    return s;
}

FiniteAbelianGroup cokernel(const IntMatrix& a) {
    const std::size_t rows = a.size();
    SmithForm s = smith_normal_form(a);
    FiniteAbelianGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : s.diag) {
        if (d == 0) break;
        ++nonzero;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.free_rank = static_cast<int>(rows - nonzero);
    return g;
}

}  // namespace satake
