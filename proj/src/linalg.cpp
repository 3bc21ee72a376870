#include "satake/linalg.hpp"

namespace satake {

RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatVector to_rat(const LatticeVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

namespace {

// Reduces [a | rhs] to row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& a, RatMatrix* rhs) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        if (rhs)
            for (auto& x : (*rhs)[row]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
            if (rhs)
                for (std::size_t j = 0; j < (*rhs)[i].size(); ++j)
                    (*rhs)[i][j] -= f * (*rhs)[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    RatMatrix work = a;
    RatMatrix rhs(m, RatVector(1));
    for (std::size_t i = 0; i < m; ++i) rhs[i][0] = b[i];
    auto pivots = echelon(work, &rhs);
    // Consistency: a zero row of the coefficient part must have zero rhs.
    for (std::size_t i = pivots.size(); i < m; ++i)
        if (rhs[i][0] != 0) return std::nullopt;
    RatVector x(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r][0];
    return x;
}

RatMatrix rat_inverse(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatMatrix work = a;
    RatMatrix rhs = rat_identity(n);
    auto pivots = echelon(work, &rhs);
    if (pivots.size() != n) throw spec_error("matrix not invertible");
    return rhs;
}

std::size_t rat_rank(RatMatrix a) {
    return echelon(a, nullptr).size();
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
    RatMatrix r(m, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

RatVector rat_apply(const RatMatrix& a, const RatVector& v) {
    RatVector r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

}  // namespace satake
