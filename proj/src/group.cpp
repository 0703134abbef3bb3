#include "arcfact/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcfact {

PermGroup PermGroup::from_generators(unsigned degree, std::vector<Permutation> gens,
                                     std::vector<std::uint32_t> base_prefix) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    for (const Permutation& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch: expected " +
                                        std::to_string(degree) + ", got " +
                                        std::to_string(g.degree()));
    auto data = std::make_shared<Data>();
    data->degree = degree;
    data->gens = gens;
    data->chain = StabilizerChain::build(degree, gens, base_prefix, settings().seed);
    PermGroup g;
    g.data_ = std::move(data);
    return g;
}

std::uint64_t PermGroup::order_u64() const {
    if (!data_->chain.count_fits_u64())
        throw std::overflow_error("group order exceeds 64-bit range; use order() instead");
    return data_->chain.count_u64();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const {
    if (order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("elements", bound,
                                   "group of order " + order().get_str() + " requested");
    std::uint64_t n = data_->chain.count_u64();
    std::vector<Permutation> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(data_->chain.element_at(i));
    return out;
}

std::vector<Permutation> PermGroup::sorted_elements(std::uint64_t bound) const {
    auto els = elements(bound);
    std::sort(els.begin(), els.end());
    return els;
}

Subgroup make_subgroup(PermGroup sub, PermGroup ambient) {
    if (sub.degree() != ambient.degree())
        throw std::invalid_argument("subgroup and ambient group degrees differ");
    for (const Permutation& g : sub.generators())
        if (!ambient.contains(g))
            throw std::invalid_argument("generator " + g.cycle_string() +
                                        " lies outside the ambient group");
    return Subgroup{std::move(sub), std::move(ambient)};
}

Subgroup whole_group(PermGroup g) {
    Subgroup s{g, g};
    return s;
}

}  // namespace arcfact
