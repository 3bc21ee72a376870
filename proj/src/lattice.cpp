#include "satake/lattice.hpp"

#include <sstream>

namespace satake {

namespace {
void check_same_size(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size())
        throw spec_error("lattice vectors of different rank");
}
}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same_size(a, b);
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    check_same_size(a, b);
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

LatticeVector operator*(Coord c, const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const LatticeVector& a) {
    for (Coord c : a)
        if (c != 0) return false;
    return true;
}

Coord dot(const LatticeVector& a, const LatticeVector& b) {
    check_same_size(a, b);
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const LatticeVector& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const RatVector& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

}  // namespace satake
