#include "arcfact/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arcfact/groupops.hpp"
#include "arcfact/kernels.hpp"
#include "arcfact/numtheory.hpp"

namespace arcfact {

namespace {

bool transitive_on_cosets(const CosetAction& act, const PermGroup& H) {
    // orbit of vertex 0 under the images of H's generators
    std::vector<Permutation> himgs;
    for (const Permutation& h : H.generators()) himgs.push_back(act.act(h));
    std::vector<bool> seen(act.index(), false);
    std::vector<std::uint32_t> frontier{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier)
            for (const Permutation& h : himgs) {
                std::uint32_t w = h[v];
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
    }
    return count == act.index();
}

}  // namespace

FactorizationCertificate is_factorization(const PermGroup& G, const Subgroup& H,
                                          const Subgroup& K, bool cross_check) {
    for (const Permutation& g : H.group.generators())
        if (!G.contains(g)) throw std::invalid_argument("H is not a subgroup of G");
    for (const Permutation& g : K.group.generators())
        if (!G.contains(g)) throw std::invalid_argument("K is not a subgroup of G");
    FactorizationCertificate cert;
    cert.order_g = G.order();
    cert.order_h = H.group.order();
    cert.order_k = K.group.order();
    Subgroup inter = intersection(H, K);
    cert.order_intersection = inter.group.order();
    cert.verdict = cert.order_intersection * cert.order_g == cert.order_h * cert.order_k;
    cert.criteria_checked.push_back("order");
    if (cross_check) {
        Subgroup k_in_g{K.group, G};
        bool e = transitive_on_cosets(coset_action(G, k_in_g), H.group);
        cert.criteria_checked.push_back("h-transitive-on-cosets-of-k");
        Subgroup h_in_g{H.group, G};
        bool f = transitive_on_cosets(coset_action(G, h_in_g), K.group);
        cert.criteria_checked.push_back("k-transitive-on-cosets-of-h");
        if (e != cert.verdict || f != cert.verdict)
            throw std::logic_error(
                "factorization criteria disagree (order=" + std::to_string(cert.verdict) +
                ", cosets-of-k=" + std::to_string(e) + ", cosets-of-h=" + std::to_string(f) + ")");
    }
    return cert;
}

namespace {

std::vector<std::string> canonical_gen_strings(const SmallGroup& sg, const SmallGroup::Sub& s) {
    std::vector<std::string> out;
    for (std::uint32_t g : sg.minimal_generators(s)) out.push_back(sg.element(g).cycle_string());
    return out;
}

}  // namespace

HomFactReport homogeneous_search(const PermGroup& Gv, const std::optional<PermGroup>& ambient,
                                 HomFactMode mode, std::uint64_t min_index) {
    if (min_index < 2) throw std::invalid_argument("min_index must be at least 2");
    if (mode == HomFactMode::Conjugate) {
        if (!ambient) throw std::invalid_argument("conjugate mode needs an ambient group");
        for (const Permutation& g : Gv.generators())
            if (!ambient->contains(g))
                throw std::invalid_argument("ambient group does not contain the vertex group");
    }
    HomFactReport rep;
    rep.mode = mode;
    rep.min_index = min_index;
    rep.group_order = Gv.order();

    SmallGroup sg = SmallGroup::build(Gv);
    std::vector<SmallGroup::Sub> classes = sg.conjugacy_class_reps(sg.all_subgroups());
    rep.classes_total = classes.size();

    auto pi_g = prime_set(Gv.order());
    auto pi_ok = [&](std::size_t order) { return prime_set(mpz_class((unsigned long)order)) == pi_g; };
    std::vector<SmallGroup::Sub> cands;
    for (const auto& c : classes) {
        if (c.size() == sg.size()) continue;
        std::uint64_t index = sg.size() / c.size();
        if (index < min_index) continue;
        if (!pi_ok(c.size())) continue;
        cands.push_back(c);
    }
    rep.classes_candidate = cands.size();

    auto factorizes = [&](const SmallGroup::Sub& a, const SmallGroup::Sub& b,
                          mpz_class& inter_order) {
        SmallGroup::Sub inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        inter_order = static_cast<unsigned long>(inter.size());
        return inter.size() * sg.size() == a.size() * b.size();
    };

    auto push_pair = [&](const SmallGroup::Sub& a, const SmallGroup::Sub& b,
                         const mpz_class& inter_order, std::optional<std::string> witness) {
        // the emitted pair must satisfy pi(A) = pi(B) = pi(G)
        if (!pi_ok(a.size()) || !pi_ok(b.size()))
            throw std::logic_error("emitted factorization pair violates the prime-set invariant");
        HomFactPair p;
        p.a_gens = canonical_gen_strings(sg, a);
        p.b_gens = canonical_gen_strings(sg, b);
        p.factor_order = static_cast<unsigned long>(a.size());
        p.intersection_order = inter_order;
        p.index = static_cast<unsigned long>(sg.size() / a.size());
        p.witness = std::move(witness);
        rep.pairs.push_back(std::move(p));
    };

    if (mode == HomFactMode::Isomorphic) {
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                const auto& a = cands[i];
                const auto& b = cands[j];
                if (a.size() != b.size()) continue;
                ++rep.pairs_checked;
                mpz_class inter_order;
                if (!factorizes(a, b, inter_order)) continue;
                if (sg.order_histogram(a) != sg.order_histogram(b)) continue;
                if (sg.derived_subgroup(a).size() != sg.derived_subgroup(b).size()) continue;
                if (a.size() <= settings().bounds.iso_certify) {
                    if (!sg.isomorphic_certified(a, b)) continue;
                } else {
                    rep.certified_isomorphism = false;
                }
                push_pair(a, b, inter_order, std::nullopt);
            }
    } else {
        const StabilizerChain& ac = ambient->chain();
        const std::uint64_t bound = settings().bounds.elements;
        if (ambient->order() > mpz_class(std::to_string(bound)))
            throw resource_limit_error("elements", bound,
                                       "conjugacy scan over an ambient group of order " +
                                           ambient->order().get_str());
        std::uint64_t n = ac.count_u64();
        const StabilizerChain& gvc = Gv.chain();
        for (const auto& a : cands) {
            std::vector<Permutation> agens;
            for (std::uint32_t g : sg.minimal_generators(a)) agens.push_back(sg.element(g));
            auto hits = kernels::run_collect(n, [&](std::uint64_t idx) {
                Permutation x = ac.element_at(idx);
                for (const Permutation& g : agens)
                    if (!gvc.contains(g.conjugated_by(x))) return false;
                return true;
            });
            rep.ambient_scanned += n;
            // group the witnesses by the subgroup they produce
            std::map<SmallGroup::Sub, Permutation> images;
            for (std::uint64_t idx : hits) {
                Permutation x = ac.element_at(idx);
                SmallGroup::Sub b;
                b.reserve(a.size());
                for (std::uint32_t e : a) {
                    auto bi = sg.index_of(sg.element(e).conjugated_by(x));
                    // the generators landed in Gv, so the whole subgroup does
                    if (!bi) throw std::logic_error("conjugate escaped the vertex group");
                    b.push_back(*bi);
                }
                std::sort(b.begin(), b.end());
                auto it = images.find(b);
                if (it == images.end())
                    images.emplace(std::move(b), std::move(x));
                else if (x < it->second)
                    it->second = std::move(x);
            }
            for (const auto& [b, x] : images) {
                ++rep.pairs_checked;
                mpz_class inter_order;
                if (!factorizes(a, b, inter_order)) continue;
                push_pair(a, b, inter_order, x.cycle_string());
            }
        }
    }

    std::sort(rep.pairs.begin(), rep.pairs.end(), [](const HomFactPair& x, const HomFactPair& y) {
        if (x.factor_order != y.factor_order) return x.factor_order > y.factor_order;
        if (x.a_gens != y.a_gens) return x.a_gens < y.a_gens;
        return x.b_gens < y.b_gens;
    });
    return rep;
}

TransitiveFactor one_factor_transitive(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
    mpz_class full;
    mpz_fac_ui(full.get_mpz_t(), G.degree());
    if (G.order() != full && G.order() * 2 != full)
        throw std::invalid_argument("group is not the natural symmetric or alternating group");
    if (!is_factorization(G, H, K, false).verdict)
        throw std::invalid_argument("G = HK does not hold; transitivity split undefined");
    bool h_trans = is_transitive(H.group);
    bool k_trans = is_transitive(K.group);
    if (h_trans && k_trans) return TransitiveFactor::Both;
    if (h_trans) return TransitiveFactor::HOnly;
    if (k_trans) return TransitiveFactor::KOnly;
    throw std::logic_error("factorization of the natural action with both factors intransitive");
}

}  // namespace arcfact
