#include "arcfact/config.hpp"

namespace arcfact {

Bounds desk_bounds() { return Bounds{}; }

Bounds extended_bounds() {
    Bounds b;
    b.elements = 10'000'000;
    b.subgroups = 20'000;
    b.points = 1'000'000;
    b.normal_order = 1'000'000;
    b.arcs = 100'000'000;
    b.iso_certify = 2'000;
    b.trial_division = 10'000'000;
    return b;
}

Settings& settings() {
    static Settings s;
    return s;
}

resource_limit_error::resource_limit_error(const std::string& name, std::uint64_t b,
                                           const std::string& needed)
    : std::runtime_error("resource limit '" + name + "' (" + std::to_string(b) +
                         ") exceeded: " + needed),
      bound_name(name),
      bound(b) {}

}  // namespace arcfact
