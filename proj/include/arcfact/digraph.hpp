#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcfact/factor.hpp"
#include "arcfact/group.hpp"
#include "arcfact/groupops.hpp"

namespace arcfact {

class not_antisymmetric_error : public std::invalid_argument {
public:
    not_antisymmetric_error(std::string h, std::string h2);
    std::string witness_h, witness_h2;  // h * g * h2 = g^-1
};

// The coset digraph on the right cosets of H in G with base arc
// (H, Hg); arcs are the G-orbit of the base arc under right multiplication,
// so out-neighbors of H are the cosets Hgh. Construction rejects a
// connecting element giving a symmetric relation (g^-1 in HgH) or a loop
// (g in H).
class CosetDigraph {
public:
    static CosetDigraph build(const PermGroup& G, const Subgroup& H, const Permutation& g);

    const PermGroup& group() const { return g_group_; }
    const Subgroup& vertex_stabilizer() const { return h_; }
    const Permutation& connecting_element() const { return g_; }
    const CosetAction& action() const { return *action_; }

    std::uint64_t vertex_count() const { return action_->index(); }
    std::uint64_t valency() const { return valency_; }
    bool connected() const { return connected_; }
    const std::vector<std::vector<std::uint32_t>>& out_adjacency() const { return out_; }
    std::vector<std::uint32_t> in_neighbors_of_base() const;

    // pointwise stabilizer of the canonical arc segment v_a .. v_b where
    // v_j is the coset H g^j; memoized
    Subgroup arc_stabilizer(unsigned a, unsigned b) const;

private:
    PermGroup g_group_;
    Subgroup h_;
    Permutation g_;
    std::shared_ptr<CosetAction> action_;
    std::uint64_t valency_ = 0;
    bool connected_ = false;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::uint32_t> base_in_;
    mutable std::map<std::pair<unsigned, unsigned>, Subgroup> stab_memo_;
};

struct SArcCount {
    std::uint64_t count = 0;
    bool transitive = false;
};
// counts s-arcs by forward dynamic programming over the out-adjacency and
// decides transitivity by orbit-stabilizer on the canonical s-arc
SArcCount s_arcs_direct(const CosetDigraph& gamma, unsigned s);

struct SArcCriterion {
    bool transitive = false;
    std::vector<FactorizationCertificate> levels;  // one per i in 1..s-1
};
// the stabilizer-factorization characterization of s-arc-transitivity
SArcCriterion s_arc_criterion(const CosetDigraph& gamma, unsigned s);

struct StabNormalAudit {
    bool ok = true;
    std::optional<mpz_class> offending_order;
    std::vector<std::string> offending_gens;
};
// every nontrivial normal subgroup of the vertex stabilizer must fail to be
// normalized by the connecting element; requires a connected digraph
StabNormalAudit vertex_stabilizer_normal_audit(const CosetDigraph& gamma);

PrimitivityResult vertex_primitivity(const CosetDigraph& gamma);

enum class DigraphShape { PrimeDirectedCycle, ValencyAtLeast3, Counterexample };
// dichotomy for vertex-primitive arc-transitive digraphs
DigraphShape valency_or_cycle_audit(const CosetDigraph& gamma);

// checks the descent property: with L normal in G and vertex-transitive and
// gamma (G,s)-arc-transitive, L acts (s-1)-arc-transitively; verified by a
// direct orbit count, not assumed
bool normal_subgroup_descent(const CosetDigraph& gamma, const Subgroup& L, unsigned s);

}  // namespace arcfact
