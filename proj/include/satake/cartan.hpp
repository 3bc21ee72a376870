#pragma once

#include <string>
#include <vector>

#include "satake/linalg.hpp"
#include "satake/numeric.hpp"

namespace satake {

// An irreducible finite Cartan type, e.g. {family='B', rank=2}.
struct CartanType {
    char family = 'A';  // 'A'..'G'
    int rank = 0;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const CartanType&) const = default;
};

// Parses "A1", "E8", ... and validates family/rank combinations.
CartanType parse_cartan_type(const std::string& s);

using CartanMatrix = std::vector<std::vector<Coord>>;  // C[i][j] = <alpha_i, acheck_j>

// The Bourbaki Cartan matrix of an irreducible type. Conventions: for B_n the
// last simple root is short, for C_n long, for G2 the first simple root is
// short, for F4 the last two are short.
CartanMatrix cartan_matrix(const CartanType& t);

// True iff c is a generalized Cartan matrix of finite type (symmetrizable
// with positive definite symmetrization).
bool is_finite_type(const CartanMatrix& c);

// Symmetrizer q with q_i * c_ij = q_j * c_ji, q_i > 0, normalized to q = 1 on
// the first node of each connected component. Throws spec_error when no
// symmetrizer exists.
std::vector<Rat> symmetrizer(const CartanMatrix& c);

// Connected components of the Dynkin diagram, each a sorted list of indices.
std::vector<std::vector<int>> dynkin_components(const CartanMatrix& c);

}  // namespace satake
