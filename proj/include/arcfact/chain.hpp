#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "arcfact/perm.hpp"

namespace arcfact {

// Base and strong generating set. Construction runs a randomized Schreier
// generator pass to seed the levels, then the deterministic verification
// pass; the chain is immutable afterwards, so order and membership queries
// are exact. An initial_base prefix pins the first base points (used to read
// off point stabilizers).
class StabilizerChain {
public:
    static StabilizerChain build(unsigned degree, const std::vector<Permutation>& gens,
                                 const std::vector<std::uint32_t>& initial_base = {},
                                 std::uint64_t seed = 0);

    unsigned degree() const { return degree_; }
    const mpz_class& order() const { return order_; }
    std::size_t num_levels() const { return levels_.size(); }
    std::uint32_t base_point(std::size_t level) const { return levels_[level].base; }
    std::uint64_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

    bool contains(const Permutation& p) const;
    Permutation sift(const Permutation& p) const;

    // strong generators fixing the first `level` base points pointwise
    std::vector<Permutation> level_generators(std::size_t level) const;

    // enumeration by transversal products; the order of enumeration depends
    // on internal chain structure, callers needing canonical output must
    // canonicalize downstream
    bool count_fits_u64() const;
    std::uint64_t count_u64() const;
    Permutation element_at(std::uint64_t index) const;

    // element mapping base_point(level) to the given point of its orbit
    Permutation transversal_to(std::size_t level, std::uint32_t point) const;

private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<std::int32_t> pos;       // point -> orbit position, -1 outside
        std::vector<std::uint32_t> orbit;    // BFS order, orbit[0] == base
        std::vector<std::int32_t> parent;    // Schreier tree, by orbit position
        std::vector<std::int32_t> via;       // strong-generator id used for the step
        std::vector<Permutation> inv_cache;  // u_p^-1 per position; empty above cache cap
    };

    StabilizerChain() = default;

    Permutation inv_transversal(std::size_t level, std::size_t pos) const;  // orbit[pos] -> base
    Permutation transversal(std::size_t level, std::size_t pos) const;      // base -> orbit[pos]
    void recompute_orbit(std::size_t level);
    void recompute_all_orbits();
    std::size_t natural_level(const Permutation& g) const;
    void add_strong_generator(const Permutation& g);  // extends base when needed
    void verify();                                    // deterministic Schreier-Sims pass

    unsigned degree_ = 0;
    std::vector<Permutation> strong_;       // all strong generators
    std::vector<std::size_t> strong_level_; // first base point each one moves
    std::vector<Level> levels_;
    mpz_class order_ = 1;
};

}  // namespace arcfact
