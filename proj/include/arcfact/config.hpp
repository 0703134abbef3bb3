#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arcfact {

// Search and enumeration limits. Every bounded operation either finishes
// exhaustively or throws resource_limit_error; partial results are never
// reported as answers.
struct Bounds {
    std::uint64_t elements = 1'000'000;        // element enumeration (intersections, scans)
    std::uint64_t subgroups = 2'000;           // |H| for full subgroup-lattice enumeration
    std::uint64_t points = 100'000;            // index of coset actions
    std::uint64_t normal_order = 100'000;      // |H| for normal-subgroup enumeration
    std::uint64_t arcs = 10'000'000;           // s-arc counting
    std::uint64_t iso_certify = 500;           // order cutoff for certified isomorphism backtrack
    std::uint64_t trial_division = 1'000'000;  // trial-division limit before Pollard rho
};

Bounds desk_bounds();
Bounds extended_bounds();

struct Settings {
    Bounds bounds;
    // Fixed default so runs are reproducible; --seed overrides. The seed only
    // affects internal stabilizer-chain construction, never reported results.
    std::uint64_t seed = 0x5eed5a17ULL;
    bool parallel = true;
};

Settings& settings();

class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& bound_name, std::uint64_t bound,
                         const std::string& needed);
    std::string bound_name;
    std::uint64_t bound;
};

}  // namespace arcfact
