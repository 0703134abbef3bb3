#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcfact/group.hpp"
#include "arcfact/smallgroup.hpp"

namespace arcfact {

// Witness record for a candidate factorization G = HK. The verdict is the
// exact order identity |H∩K||G| = |H||K|; cross-checking additionally runs
// the transitivity criteria on both coset spaces and aborts on disagreement.
struct FactorizationCertificate {
    mpz_class order_g, order_h, order_k, order_intersection;
    bool verdict = false;
    std::vector<std::string> criteria_checked;
};

FactorizationCertificate is_factorization(const PermGroup& G, const Subgroup& H,
                                          const Subgroup& K, bool cross_check = false);

enum class HomFactMode { Conjugate, Isomorphic };

struct HomFactPair {
    std::vector<std::string> a_gens, b_gens;  // canonical generator cycle strings
    mpz_class factor_order;
    mpz_class intersection_order;
    mpz_class index;                      // |G| / |A|
    std::optional<std::string> witness;   // conjugate mode: x with A^x = B
};

struct HomFactReport {
    HomFactMode mode = HomFactMode::Isomorphic;
    std::uint64_t min_index = 2;
    mpz_class group_order;
    std::vector<HomFactPair> pairs;  // empty = definitive nonexistence
    std::uint64_t classes_total = 0;
    std::uint64_t classes_candidate = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t ambient_scanned = 0;
    bool certified_isomorphism = true;  // false if any pair passed on invariants only
};

// Exhaustive search for factorizations Gv = A B with |A| = |B|, index at
// least min_index and pi(A) = pi(Gv). Conjugate mode requires an ambient
// group and an explicit witness; isomorphic mode compares order histogram,
// derived-subgroup order and certifies by backtrack below the configured
// order bound.
HomFactReport homogeneous_search(const PermGroup& Gv, const std::optional<PermGroup>& ambient,
                                 HomFactMode mode, std::uint64_t min_index);

enum class TransitiveFactor { HOnly, KOnly, Both };

// For G = S_n or A_n acting naturally and a verified factorization G = HK,
// reports which factors act transitively; at least one always does.
TransitiveFactor one_factor_transitive(const PermGroup& G, const Subgroup& H, const Subgroup& K);

}  // namespace arcfact
