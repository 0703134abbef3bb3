#include "arcfact/digraph.hpp"

#include <algorithm>

#include "arcfact/kernels.hpp"
#include "arcfact/numtheory.hpp"

namespace arcfact {

not_antisymmetric_error::not_antisymmetric_error(std::string h, std::string h2)
    : std::invalid_argument("the relation is symmetric: " + h + " * g * " + h2 + " = g^-1"),
      witness_h(std::move(h)),
      witness_h2(std::move(h2)) {}

CosetDigraph CosetDigraph::build(const PermGroup& G, const Subgroup& H, const Permutation& g) {
    if (!G.contains(g)) throw std::invalid_argument("connecting element lies outside G");
    for (const Permutation& x : H.group.generators())
        if (!G.contains(x)) throw std::invalid_argument("H is not a subgroup of G");
    if (H.group.contains(g))
        throw std::invalid_argument("connecting element lies in H: the base arc degenerates to a loop");
    // antisymmetry: g^-1 in HgH iff g h g in H for some h in H
    auto h_elements = H.group.sorted_elements(settings().bounds.elements);
    for (const Permutation& h : h_elements) {
        Permutation ghg = g * h * g;
        if (H.group.contains(ghg)) {
            // (ghg)^-1 * g * h = g^-1
            throw not_antisymmetric_error(ghg.inverse().cycle_string(), h.cycle_string());
        }
    }

    CosetDigraph d;
    d.g_group_ = G;
    d.h_ = H;
    d.g_ = g;
    d.action_ = std::make_shared<CosetAction>(coset_action(G, Subgroup{H.group, G}));

    {
        std::vector<Permutation> gens = H.group.generators();
        gens.push_back(g);
        PermGroup span = PermGroup::from_generators(G.degree(), std::move(gens));
        d.connected_ = span.order() == G.order();
    }

    Subgroup hg = conjugate(Subgroup{H.group, G}, g);
    Subgroup core = intersection(Subgroup{H.group, G}, hg);
    mpz_class val = H.group.order() / core.group.order();
    d.valency_ = val.get_ui();

    // adjacency: rebuild the image with base point 0 so its transversal
    // translates the base out-neighborhood to every vertex
    const PermGroup& image = d.action_->image();
    PermGroup based = PermGroup::from_generators(image.degree(), image.generators(), {0});
    Permutation gimg = d.action_->act(g);
    std::vector<Permutation> himgs;
    for (const Permutation& h : H.group.generators()) himgs.push_back(d.action_->act(h));
    auto orbit_under = [&](std::uint32_t start) {
        std::vector<bool> seen(image.degree(), false);
        std::vector<std::uint32_t> frontier{start}, out{start};
        seen[start] = true;
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t p : frontier)
                for (const Permutation& h : himgs) {
                    std::uint32_t q = h[p];
                    if (!seen[q]) {
                        seen[q] = true;
                        out.push_back(q);
                        next.push_back(q);
                    }
                }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::uint32_t> base_out = orbit_under(gimg[0]);
    d.base_in_ = orbit_under(gimg.inverse()[0]);
    if (base_out.size() != d.valency_)
        throw std::logic_error("out-neighborhood size disagrees with the index formula");
    d.out_.resize(image.degree());
    for (std::uint32_t v = 0; v < image.degree(); ++v) {
        Permutation t = based.chain().transversal_to(0, v);
        std::vector<std::uint32_t>& row = d.out_[v];
        row.reserve(base_out.size());
        for (std::uint32_t o : base_out) row.push_back(t[o]);
        std::sort(row.begin(), row.end());
    }
    return d;
}

std::vector<std::uint32_t> CosetDigraph::in_neighbors_of_base() const { return base_in_; }

Subgroup CosetDigraph::arc_stabilizer(unsigned a, unsigned b) const {
    if (a > b) throw std::invalid_argument("empty arc segment");
    auto key = std::make_pair(a, b);
    auto it = stab_memo_.find(key);
    if (it != stab_memo_.end()) return it->second;
    Subgroup result{h_.group, g_group_};
    if (a == b) {
        result = Subgroup{h_.group, g_group_};
        if (a > 0) result = conjugate(result, g_.power(a));
    } else {
        Subgroup prefix = arc_stabilizer(a, b - 1);
        Subgroup last = arc_stabilizer(b, b);
        result = intersection(prefix, last);
    }
    stab_memo_.emplace(key, result);
    return result;
}

SArcCount s_arcs_direct(const CosetDigraph& gamma, unsigned s) {
    SArcCount out;
    out.count = kernels::run_count_walks(gamma.out_adjacency(), s, settings().bounds.arcs);
    Subgroup stab = gamma.arc_stabilizer(0, s);
    out.transitive =
        mpz_class(std::to_string(out.count)) * stab.group.order() == gamma.group().order();
    return out;
}

SArcCriterion s_arc_criterion(const CosetDigraph& gamma, unsigned s) {
    if (s < 2) throw std::invalid_argument("the criterion applies for s >= 2");
    SArcCriterion out;
    out.transitive = true;
    for (unsigned i = 1; i + 1 <= s; ++i) {
        // G_{v_1..v_i} = G_{v_0..v_i} G_{v_1..v_{i+1}}, decided by orders
        FactorizationCertificate cert;
        cert.order_g = gamma.arc_stabilizer(1, i).group.order();
        cert.order_h = gamma.arc_stabilizer(0, i).group.order();
        cert.order_k = gamma.arc_stabilizer(1, i + 1).group.order();
        cert.order_intersection = gamma.arc_stabilizer(0, i + 1).group.order();
        cert.verdict = cert.order_intersection * cert.order_g == cert.order_h * cert.order_k;
        cert.criteria_checked.push_back("order");
        out.transitive = out.transitive && cert.verdict;
        out.levels.push_back(std::move(cert));
    }
    return out;
}

StabNormalAudit vertex_stabilizer_normal_audit(const CosetDigraph& gamma) {
    if (!gamma.connected())
        throw std::invalid_argument("the audit applies to connected digraphs only");
    StabNormalAudit out;
    const Permutation& g = gamma.connecting_element();
    for (const PermGroup& n : enumerate_normal_subgroups(gamma.vertex_stabilizer().group)) {
        if (n.order() == 1) continue;
        bool normalized = true;
        for (const Permutation& x : n.generators())
            if (!n.contains(x.conjugated_by(g))) {
                normalized = false;
                break;
            }
        if (normalized) {
            out.ok = false;
            out.offending_order = n.order();
            for (const Permutation& x : n.generators())
                out.offending_gens.push_back(x.cycle_string());
            return out;
        }
    }
    return out;
}

PrimitivityResult vertex_primitivity(const CosetDigraph& gamma) {
    return is_primitive(gamma.action().image());
}

DigraphShape valency_or_cycle_audit(const CosetDigraph& gamma) {
    if (!vertex_primitivity(gamma).primitive)
        throw std::invalid_argument("the dichotomy applies to vertex-primitive digraphs");
    std::uint64_t val = gamma.valency();
    if (val == 1) {
        // connected valency-1 digraph is a single directed cycle
        mpz_class len(std::to_string(gamma.vertex_count()));
        return is_prime(len) ? DigraphShape::PrimeDirectedCycle : DigraphShape::Counterexample;
    }
    if (val == 2) return DigraphShape::Counterexample;
    return DigraphShape::ValencyAtLeast3;
}

bool normal_subgroup_descent(const CosetDigraph& gamma, const Subgroup& L, unsigned s) {
    if (s < 1) throw std::invalid_argument("descent needs s >= 1");
    const PermGroup& G = gamma.group();
    for (const Permutation& x : L.group.generators())
        if (!G.contains(x)) throw std::invalid_argument("L is not a subgroup of G");
    for (const Permutation& g : G.generators())
        for (const Permutation& x : L.group.generators())
            if (!L.group.contains(x.conjugated_by(g)))
                throw std::invalid_argument("L is not normal in G");
    // vertex transitivity of L
    {
        std::vector<Permutation> limgs;
        for (const Permutation& x : L.group.generators()) limgs.push_back(gamma.action().act(x));
        std::vector<bool> seen(gamma.vertex_count(), false);
        std::vector<std::uint32_t> frontier{0};
        seen[0] = true;
        std::uint64_t cnt = 1;
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t v : frontier)
                for (const Permutation& h : limgs) {
                    std::uint32_t w = h[v];
                    if (!seen[w]) {
                        seen[w] = true;
                        ++cnt;
                        next.push_back(w);
                    }
                }
            frontier = std::move(next);
        }
        if (cnt != gamma.vertex_count())
            throw std::invalid_argument("L is not vertex-transitive on the digraph");
    }
    // gamma must be (G,s)-arc-transitive
    bool gs = s == 1 ? s_arcs_direct(gamma, 1).transitive : s_arc_criterion(gamma, s).transitive;
    if (!gs) throw std::invalid_argument("the digraph is not (G,s)-arc-transitive");
    // direct orbit count for L on (s-1)-arcs
    unsigned t = s - 1;
    std::uint64_t nt = t == 0 ? gamma.vertex_count()
                              : kernels::run_count_walks(gamma.out_adjacency(), t,
                                                         settings().bounds.arcs);
    Subgroup chain_stab = gamma.arc_stabilizer(0, t);
    Subgroup l_stab = intersection(Subgroup{L.group, G}, chain_stab);
    return mpz_class(std::to_string(nt)) * l_stab.group.order() == L.group.order();
}

}  // namespace arcfact
