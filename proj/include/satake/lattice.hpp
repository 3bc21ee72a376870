#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "satake/numeric.hpp"

namespace satake {

// A point of X* or X_* in a fixed basis. Which lattice is meant is always
// clear from context; the two are never mixed in one expression.
using LatticeVector = std::vector<Coord>;

// A point of X*⊗Q or X_*⊗Q.
using RatVector = std::vector<Rat>;

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(Coord c, const LatticeVector& a);

bool is_zero(const LatticeVector& a);
Coord dot(const LatticeVector& a, const LatticeVector& b);

std::string to_string(const LatticeVector& a);
std::string to_string(const RatVector& a);

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const noexcept {
        std::size_t h = v.size();
        for (Coord c : v)
            h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace satake
