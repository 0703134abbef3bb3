#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arcfact/chain.hpp"
#include "arcfact/config.hpp"
#include "arcfact/perm.hpp"

namespace arcfact {

// Immutable permutation group; cheap to copy and safe to share across
// threads once built.
class PermGroup {
public:
    PermGroup() = default;
    static PermGroup from_generators(unsigned degree, std::vector<Permutation> gens,
                                     std::vector<std::uint32_t> base_prefix = {});

    bool valid() const { return data_ != nullptr; }
    unsigned degree() const { return data_->degree; }
    const std::vector<Permutation>& generators() const { return data_->gens; }
    const StabilizerChain& chain() const { return data_->chain; }
    const mpz_class& order() const { return data_->chain.order(); }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Permutation& p) const { return data_->chain.contains(p); }

    std::uint64_t order_u64() const;  // throws overflow_error beyond 64 bits

    // full element list in chain-enumeration order; resource_limit_error if
    // the order exceeds `bound`
    std::vector<Permutation> elements(std::uint64_t bound) const;

    // all elements sorted by image array; canonical across chain layouts
    std::vector<Permutation> sorted_elements(std::uint64_t bound) const;

private:
    struct Data {
        unsigned degree;
        std::vector<Permutation> gens;
        StabilizerChain chain;
    };
    std::shared_ptr<const Data> data_;
};

// A group together with the ambient group it lives in. Construction checks
// the containment; Lagrange then holds automatically.
struct Subgroup {
    PermGroup group;
    PermGroup ambient;
};

Subgroup make_subgroup(PermGroup sub, PermGroup ambient);
Subgroup whole_group(PermGroup g);

}  // namespace arcfact
