#include "satake/cartan.hpp"

#include <cctype>
#include <queue>

namespace satake {

CartanType parse_cartan_type(const std::string& s) {
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw spec_error("bad Cartan type '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw spec_error("bad Cartan type '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    auto ok = [&] {
        switch (fam) {
            case 'A': return rank >= 1;
            case 'B': return rank >= 2;
            case 'C': return rank >= 2;
            case 'D': return rank >= 3;
            case 'E': return rank >= 6 && rank <= 8;
            case 'F': return rank == 4;
            case 'G': return rank == 2;
            default: return false;
        }
    }();
    if (!ok) throw spec_error("no finite type '" + s + "'");
    return CartanType{fam, rank};
}

CartanMatrix cartan_matrix(const CartanType& t) {
    const int n = t.rank;
    CartanMatrix c(n, std::vector<Coord>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    };
    switch (t.family) {
        case 'A':
            chain(n);
            break;
        case 'B':  // alpha_n short
            chain(n);
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
            break;
        case 'C':  // alpha_n long
            chain(n);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
            break;
        case 'D':
            chain(n - 1);
            c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
            break;
        case 'E':  // Bourbaki numbering: node 2 hangs off node 4
            c[0][2] = c[2][0] = -1;
            c[1][3] = c[3][1] = -1;
            c[2][3] = c[3][2] = -1;
            for (int i = 3; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
            break;
        case 'F':
            chain(n);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':  // alpha_1 short
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw spec_error("unknown family");
    }
    return c;
}

std::vector<std::vector<int>> dynkin_components(const CartanMatrix& c) {
    const int n = static_cast<int>(c.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j)
                if (j != i && c[i][j] != 0 && comp[j] < 0) {
                    comp[j] = ncomp;
                    q.push(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

std::vector<Rat> symmetrizer(const CartanMatrix& c) {
    const int n = static_cast<int>(c.size());
    std::vector<Rat> q(n, Rat(0));
    for (const auto& comp : dynkin_components(c)) {
        q[comp[0]] = 1;
        std::queue<int> bfs;
        bfs.push(comp[0]);
        while (!bfs.empty()) {
            int i = bfs.front();
            bfs.pop();
            for (int j = 0; j < n; ++j) {
                if (j == i || c[i][j] == 0) continue;
                Rat want = q[i] * c[j][i] / c[i][j];
                if (q[j] == 0) {
                    q[j] = want;
                    bfs.push(j);
                } else if (q[j] != want) {
                    throw spec_error("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    return q;
}

bool is_finite_type(const CartanMatrix& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c[i].size()) != n) return false;
        if (c[i][i] != 2) return false;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c[i][j] > 0) return false;
            if ((c[i][j] == 0) != (c[j][i] == 0)) return false;
        }
    }
    std::vector<Rat> q;
    try {
        q = symmetrizer(c);
    } catch (const spec_error&) {
        return false;
    }
    // Sylvester criterion on the symmetrized matrix f_ij = c_ij * q_j.
    RatMatrix f(n, RatVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f[i][j] = Rat(c[i][j]) * q[j];
    // Leading principal minors via fraction-free-ish elimination on copies.
    for (int k = 1; k <= n; ++k) {
        RatMatrix sub(k, RatVector(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = f[i][j];
        // determinant by elimination
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int p = col;
            while (p < k && sub[p][col] == 0) ++p;
            if (p == k) {
                det = 0;
                break;
            }
            if (p != col) {
                std::swap(sub[p], sub[col]);
                det = -det;
            }
            det *= sub[col][col];
            for (int i = col + 1; i < k; ++i) {
                Rat fct = sub[i][col] / sub[col][col];
                for (int j = col; j < k; ++j) sub[i][j] -= fct * sub[col][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

}  // namespace satake
