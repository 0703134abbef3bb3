#pragma once

#include <string>
#include <vector>

#include "arcfact/fields.hpp"
#include "arcfact/group.hpp"
#include "arcfact/groupops.hpp"

namespace arcfact {

// Catalog of named constructions. Specs print and parse through the
// canonical string grammar:
//   S:6  A:6  C:7  D:18  PSL2:9  PGL2:5  PGammaL2:8  M11  M12
//   wr(S:3,2)  dir(S:3,C:2)  coset(S:4,stab:0)
struct GroupSpec {
    enum class Family { S, A, C, D, PSL2, PGL2, PGammaL2, M11, M12, Wreath, Direct, Coset };
    Family family;
    unsigned n = 0;                // S/A/C degree, D order, PSL2-family q
    std::vector<GroupSpec> parts;  // wreath: 1, direct: 2, coset: 1
    unsigned copies = 0;           // wreath top size
    std::string handle;            // coset subgroup handle
};

GroupSpec parse_group_spec(const std::string& text);
std::string to_string(const GroupSpec& spec);

PermGroup build_named(const GroupSpec& spec);
PermGroup build_named(const std::string& spec_text);

// Subgroup handles resolved inside an ambient group:
//   stab:<point>     point stabilizer (0-indexed point)
//   normord:<k>      normalizer of the cyclic group generated by the least
//                    element of order k
//   gens:<cycles>[;<cycles>...]   explicit generators, 1-indexed cycles
//   whole            the ambient group itself
Subgroup resolve_subgroup(const PermGroup& G, const std::string& handle);

// projective line action of PSL2(q); exposed for tests that need the raw
// generator maps
std::vector<Permutation> projective_line_generators(const FiniteField& F, bool add_pgl_scalar,
                                                    bool add_frobenius);

}  // namespace arcfact
