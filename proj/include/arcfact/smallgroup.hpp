#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arcfact/group.hpp"

namespace arcfact {

// Multiplication-table view of a group small enough to enumerate, indexed by
// the lexicographic order of the element image arrays. All lattice work
// (subgroup enumeration, conjugacy of subgroups, derived subgroups) happens
// on index sets, which keeps the output canonical no matter how the ambient
// stabilizer chain was built.
class SmallGroup {
public:
    // element-index set of a subgroup, sorted ascending
    using Sub = std::vector<std::uint32_t>;

    static SmallGroup build(const PermGroup& G);  // bound: settings().bounds.subgroups

    std::uint32_t size() const { return n_; }
    unsigned degree() const { return degree_; }
    const Permutation& element(std::uint32_t i) const { return els_[i]; }
    std::optional<std::uint32_t> index_of(const Permutation& p) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t identity() const { return id_; }
    std::uint32_t element_order(std::uint32_t a) const { return order_[a]; }

    Sub close(std::span<const std::uint32_t> gens) const;
    Sub conjugate_sub(const Sub& s, std::uint32_t x) const;
    bool is_normal(const Sub& s) const;

    // the complete subgroup lattice: cyclic subgroups closed under pairwise
    // joins; sorted by (order, element indices)
    std::vector<Sub> all_subgroups() const;

    // one canonical representative (least element-index vector) per
    // conjugacy class
    std::vector<Sub> conjugacy_class_reps(const std::vector<Sub>& subs) const;
    Sub class_canonical_rep(const Sub& s) const;

    std::vector<Sub> normal_subgroups() const;
    Sub derived_subgroup(const Sub& s) const;
    std::vector<std::uint32_t> order_histogram(const Sub& s) const;

    // small generating sequence, greedy over ascending element indices
    std::vector<std::uint32_t> minimal_generators(const Sub& s) const;

    // certified isomorphism test by generator-mapping backtrack
    bool isomorphic_certified(const Sub& a, const Sub& b) const;

    PermGroup to_group(const Sub& s) const;
    Sub sub_from_group(const PermGroup& h) const;  // h must consist of elements of this group

private:
    unsigned degree_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t id_ = 0;
    std::vector<Permutation> els_;
    std::vector<std::uint32_t> table_, inv_, order_;
};

}  // namespace arcfact
