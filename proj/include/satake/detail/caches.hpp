#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "satake/root_datum.hpp"

namespace satake {

// Per-datum memo state, shared between copies of the datum.
struct RootDatum::Caches {
    std::once_flag weyl_once;
    std::unique_ptr<WeylGroup> weyl;
    std::shared_mutex partition_mutex;
    std::unordered_map<LatticeVector, Int, LatticeVectorHash> partition;
};

}  // namespace satake
