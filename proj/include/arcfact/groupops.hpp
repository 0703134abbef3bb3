#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "arcfact/group.hpp"

namespace arcfact {

std::vector<std::uint32_t> orbit_of(const PermGroup& G, std::uint32_t point);
std::vector<std::vector<std::uint32_t>> orbits_of(const PermGroup& G);
bool is_transitive(const PermGroup& G);

// iterated point stabilizers: largest k with G k-transitive
unsigned transitivity_degree(const PermGroup& G);

struct PrimitivityResult {
    bool primitive;
    // when imprimitive: a minimal nontrivial block containing point 0
    std::vector<std::uint32_t> block;
};
PrimitivityResult is_primitive(const PermGroup& G);  // throws on intransitive input

Subgroup stabilizer(const PermGroup& G, std::uint32_t point);

Subgroup conjugate(const Subgroup& H, const Permutation& x);

// exact intersection by enumerating the smaller factor and sifting against
// the larger one
Subgroup intersection(const Subgroup& H, const Subgroup& K);

// some x in G with H^x = K, canonicalized to the lexicographically least
// witness image array; nullopt means definitively non-conjugate
std::optional<Permutation> are_conjugate_subgroups(const PermGroup& G, const Subgroup& H,
                                                   const Subgroup& K);

// all normal subgroups of H, as join-closure of normal closures of single
// elements; sorted by order then by sorted generator list
std::vector<PermGroup> enumerate_normal_subgroups(const PermGroup& H);

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seed);

// N_G(H) by exhaustive element scan
PermGroup normalizer(const PermGroup& G, const PermGroup& H);

// lexicographically least element of the given order, if any
std::optional<Permutation> find_element_of_order(const PermGroup& G, std::uint64_t k);

// Right-multiplication action of G on the right cosets of H. Vertex 0 is the
// coset H; reps[v] is the canonical (lexicographically least) representative
// of the coset numbered v.
class CosetAction {
public:
    const PermGroup& image() const { return image_; }
    const PermGroup& source() const { return source_; }
    std::uint64_t index() const { return reps_.size(); }
    const Permutation& representative(std::uint32_t v) const { return reps_[v]; }
    std::uint32_t vertex_of(const Permutation& x) const;  // coset Hx
    Permutation act(const Permutation& x) const;          // image permutation of x
    bool faithful() const;
    mpz_class core_order() const;  // |G| / |image|

    friend CosetAction coset_action(const PermGroup& G, const Subgroup& H);

private:
    Permutation coset_key(const Permutation& x) const;

    PermGroup source_;
    std::vector<Permutation> h_elements_;
    std::vector<Permutation> reps_;
    std::unordered_map<Permutation, std::uint32_t, PermHash> vertex_;
    PermGroup image_;
};

CosetAction coset_action(const PermGroup& G, const Subgroup& H);

}  // namespace arcfact
