#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/lattice.hpp"
#include "satake/linalg.hpp"
#include "satake/numeric.hpp"
#include "satake/smith.hpp"

namespace satake {

enum class Isogeny { simply_connected, adjoint };

// W-invariant symmetric form on X*⊗Q, (theta,theta) = 2 per simple component
// of the root system, zero on the W-fixed complement of the root span.
struct InvariantForm {
    RatMatrix gram;                 // rank x rank
    std::vector<Rat> simple_norm2;  // (alpha_i, alpha_i) per simple position

    Rat eval(const RatVector& x, const RatVector& y) const;
    Rat eval(const LatticeVector& x, const LatticeVector& y) const;
};

// Enumerated Weyl group: each element as a rank x rank integer matrix acting
// on X_* (row-major), with its sign (-1)^length.
struct WeylGroup {
    int rank = 0;
    std::vector<std::vector<Coord>> matrices;
    std::vector<int> signs;

    std::size_t order() const { return matrices.size(); }
    LatticeVector apply(std::size_t w, const LatticeVector& nu) const;
};

// The quadruple (X*, X_*, roots, coroots) with the standard dot-product
// pairing; the combinatorial avatar of a connected reductive group.
// Immutable after construction; all member functions are const and safe for
// concurrent use.
class RootDatum {
  public:
    static RootDatum from_cartan(const CartanType& type, Isogeny isogeny);
    static RootDatum from_cartan_matrix(const CartanMatrix& cm, Isogeny isogeny);
    static RootDatum general_linear(int n);
    // Validates, never trusts: all axioms are re-checked. If `roots` lists
    // exactly the simple roots the full system is generated by reflection
    // closure; otherwise the given lists must match the closure as aligned sets.
    static RootDatum custom(std::vector<LatticeVector> roots,
                            std::vector<LatticeVector> coroots,
                            std::vector<int> simple_indices, int rank_hint = -1);

    int rank() const { return rank_; }
    const std::vector<LatticeVector>& roots() const { return roots_; }
    const std::vector<LatticeVector>& coroots() const { return coroots_; }
    const std::vector<int>& simple() const { return simple_; }
    const std::vector<int>& positive() const { return positive_; }
    int num_simple() const { return static_cast<int>(simple_.size()); }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    const LatticeVector& two_rho() const { return two_rho_; }
    const LatticeVector& two_rho_check() const { return two_rho_check_; }
    const CartanMatrix& cartan() const { return cartan_; }

    const LatticeVector& simple_root(int i) const { return roots_[simple_[i]]; }
    const LatticeVector& simple_coroot(int i) const { return coroots_[simple_[i]]; }

    bool semisimple() const { return semisimple_; }

    static Coord pair(const LatticeVector& character, const LatticeVector& cocharacter) {
        return dot(character, cocharacter);
    }
    Coord height2(const LatticeVector& nu) const { return dot(two_rho_, nu); }

    RootDatum dual() const;

    LatticeVector reflect_cochar(int i, const LatticeVector& nu) const;
    LatticeVector reflect_char(int i, const LatticeVector& chi) const;

    bool is_dominant(const LatticeVector& nu) const;
    // The dominant element of W·nu and a reduced word [i1,...,ik] of simple
    // reflections with s_ik ... s_i1 (nu) dominant.
    std::pair<LatticeVector, std::vector<int>> dominant_representative(const LatticeVector& nu) const;
    LatticeVector w0_cochar(const LatticeVector& nu) const;

    // Integer expansion in the simple coroot / simple root basis; nullopt when
    // outside the lattice or the span.
    std::optional<std::vector<Int>> simple_coroot_coords(const LatticeVector& nu) const;
    std::optional<std::vector<Int>> simple_root_coords(const LatticeVector& chi) const;
    bool in_coroot_lattice(const LatticeVector& nu) const;

    // mu <= lambda: lambda - mu is a nonnegative integer combination of
    // positive coroots. False (not an error) when the difference leaves the
    // coroot lattice.
    bool dominance_leq(const LatticeVector& mu, const LatticeVector& lambda) const;

    FiniteAbelianGroup pi1() const { return pi1_; }
    const SmithForm& coroot_smith() const { return coroot_smith_; }

    const InvariantForm& invariant_form() const { return form_; }
    RatVector iota(const LatticeVector& nu) const;
    // Verifies (nu < eta) <=> (iota nu < iota eta); requires eta - nu in the
    // coroot lattice.
    bool iota_order_check(const LatticeVector& nu, const LatticeVector& eta) const;

    // Lazily enumerated; throws spec_error above 10^6 elements.
    const WeylGroup& weyl() const;

    bool operator==(const RootDatum& o) const {
        return rank_ == o.rank_ && roots_ == o.roots_ && coroots_ == o.coroots_ &&
               simple_ == o.simple_;
    }

    // Shared per-datum memo state (Kostant partition cache lives here so that
    // copies of the datum share it).
    struct Caches;
    Caches& caches() const { return *caches_; }

  private:
    RootDatum() = default;
    static RootDatum build(std::vector<LatticeVector> roots,
                           std::vector<LatticeVector> coroots,
                           std::vector<int> simple_indices, bool allow_extend,
                           int rank_hint = -1);
    void finalize();

    int rank_ = 0;
    std::vector<LatticeVector> roots_;
    std::vector<LatticeVector> coroots_;
    std::vector<int> simple_;
    std::vector<int> positive_;
    LatticeVector two_rho_;
    LatticeVector two_rho_check_;
    CartanMatrix cartan_;
    RatMatrix cartan_inv_;
    bool semisimple_ = false;
    FiniteAbelianGroup pi1_;
    SmithForm coroot_smith_;  // of the matrix with simple coroots as columns
    InvariantForm form_;
    std::vector<int> w0_word_;
    std::shared_ptr<Caches> caches_;
};

// Bound on the Kostant partition memo table (entries per datum); exceeding it
// evicts the table. Shared across threads.
void set_partition_cache_limit(std::size_t entries);
std::size_t partition_cache_limit();

}  // namespace satake
