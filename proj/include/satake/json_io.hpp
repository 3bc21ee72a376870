#pragma once

#include <string>

#include <json.hpp>

#include "satake/isogeny.hpp"
#include "satake/multiplicities.hpp"
#include "satake/root_datum.hpp"
#include "satake/tensor.hpp"

namespace satake {

using nlohmann::json;

// How a datum was specified; kept so output can echo the spec and the
// coordinate basis used for weights on the command line.
struct DatumSpec {
    enum class Kind { named, gl, custom };
    Kind kind = Kind::named;
    CartanType type;                    // named
    Isogeny isogeny = Isogeny::simply_connected;  // named
    int gl_n = 0;                       // gl
    std::vector<LatticeVector> roots;   // custom
    std::vector<LatticeVector> coroots;
    std::vector<int> simple;
    int custom_rank = -1;  // custom; needed when the root list is empty

    std::string name() const;  // "A2-sc", "GL3", "custom"
};

// "A2-sc", "B2-ad", "GL3".
DatumSpec parse_type_string(const std::string& s);
DatumSpec spec_from_json(const json& j);
json spec_to_json(const DatumSpec& s);
RootDatum realize(const DatumSpec& s);

// Canonical full JSON of a datum (custom representation); byte-stable and
// re-parseable through spec_from_json.
json datum_to_json(const RootDatum& d);

enum class WeightBasis { fundamental, stored };

// Named types take fundamental-(co)weight coordinates on the command line,
// GL_n and custom data the stored basis.
WeightBasis weight_basis(const DatumSpec& s);
const char* basis_name(WeightBasis b);

// Comma-separated coordinates -> cocharacter in stored coordinates. Rejects
// vectors outside the cocharacter lattice.
LatticeVector parse_weight(const RootDatum& d, WeightBasis b, const std::string& csv);
json weight_to_json(const RootDatum& d, WeightBasis b, const LatticeVector& nu);

json int_to_json(const Int& n);
json group_to_json(const FiniteAbelianGroup& g);
json table_to_json(const RootDatum& d, WeightBasis b, const MultiplicityTable& t);
json tensor_to_json(const RootDatum& d, WeightBasis b, const TensorTable& t);
json report_to_json(const CheckReport& r);

std::string table_to_csv(const RootDatum& d, WeightBasis b, const MultiplicityTable& t);
std::string tensor_to_csv(const RootDatum& d, WeightBasis b, const TensorTable& t);

}  // namespace satake
