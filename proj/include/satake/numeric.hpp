#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace satake {

// All arithmetic in the library is exact: lattice coordinates are 64-bit
// (they stay tiny), counts and form values are arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Coord = std::int64_t;

// Malformed input: bad datum specs, axiom violations, out-of-domain arguments.
struct spec_error : std::invalid_argument {
    explicit spec_error(const std::string& what) : std::invalid_argument(what) {}
};

// Internal consistency failure: an exact identity the library relies on did
// not hold (non-integral dimension, negative multiplicity, ...). Never
// recoverable; indicates a bug or a falsified theorem.
struct integrity_error : std::logic_error {
    explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace satake
