#include "arcfact/repro.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "arcfact/digraph.hpp"
#include "arcfact/factor.hpp"
#include "arcfact/groups.hpp"
#include "arcfact/numtheory.hpp"

namespace arcfact::repro {

namespace {

using nlohmann::ordered_json;

struct CaseDef {
    std::string id, description, basis, claim;
    std::function<ordered_json()> run;  // throws on failure
};

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw check_failure(what);
}

// ---------------------------------------------------------------- helpers

Subgroup random_subgroup(const PermGroup& G, std::mt19937_64& rng, unsigned max_gens) {
    std::uint64_t n = G.chain().count_u64();
    unsigned k = 1 + static_cast<unsigned>(rng() % max_gens);
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < k; ++i) gens.push_back(G.chain().element_at(rng() % n));
    return make_subgroup(PermGroup::from_generators(G.degree(), std::move(gens)), G);
}

// first connecting elements (ascending image order) giving a genuine digraph
std::vector<Permutation> valid_connectors(const PermGroup& G, const PermGroup& H,
                                          std::size_t want) {
    std::vector<Permutation> out;
    auto h_els = H.sorted_elements(settings().bounds.elements);
    for (const Permutation& g : G.sorted_elements(settings().bounds.elements)) {
        if (H.contains(g)) continue;
        bool symmetric = false;
        for (const Permutation& h : h_els)
            if (H.contains(g * h * g)) {
                symmetric = true;
                break;
            }
        if (symmetric) continue;
        out.push_back(g);
        if (out.size() == want) break;
    }
    return out;
}

ordered_json homfact_json(const HomFactReport& rep) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : rep.pairs) {
        ordered_json pj;
        pj["factor_order"] = p.factor_order.get_str();
        pj["intersection_order"] = p.intersection_order.get_str();
        pj["index"] = p.index.get_str();
        pj["a_gens"] = p.a_gens;
        pj["b_gens"] = p.b_gens;
        if (p.witness) pj["witness"] = *p.witness;
        pairs.push_back(pj);
    }
    ordered_json j;
    j["mode"] = rep.mode == HomFactMode::Conjugate ? "conj" : "iso";
    j["min_index"] = rep.min_index;
    j["group_order"] = rep.group_order.get_str();
    j["pairs"] = pairs;
    j["classes_total"] = rep.classes_total;
    j["classes_candidate"] = rep.classes_candidate;
    j["pairs_checked"] = rep.pairs_checked;
    j["ambient_scanned"] = rep.ambient_scanned;
    return j;
}

// expects the named dihedral-type vertex stabilizer search to come up empty
ordered_json dihedral_case(const std::string& ambient_spec, unsigned element_order,
                           unsigned expected_stab_order, HomFactMode mode,
                           std::uint64_t min_index) {
    PermGroup G = build_named(ambient_spec);
    Subgroup gv = resolve_subgroup(G, "normord:" + std::to_string(element_order));
    require(gv.group.order() == expected_stab_order,
            "vertex stabilizer order " + gv.group.order().get_str() + ", expected " +
                std::to_string(expected_stab_order));
    HomFactReport rep = homogeneous_search(gv.group,
                                           mode == HomFactMode::Conjugate
                                               ? std::optional<PermGroup>(G)
                                               : std::nullopt,
                                           mode, min_index);
    require(rep.pairs.empty(), "expected no factorization, found " +
                                   std::to_string(rep.pairs.size()) + " pair(s)");
    ordered_json j;
    j["ambient"] = ambient_spec;
    j["stabilizer_order"] = gv.group.order().get_str();
    j["search"] = homfact_json(rep);
    return j;
}

// ------------------------------------------------------------------ cases

ordered_json case_criteria_equivalence() {
    const std::vector<std::string> specs = {"S:4", "S:5", "S:6", "S:7",  "A:5",
                                            "A:6", "A:7", "PSL2:7", "PSL2:9", "PGL2:5"};
    std::mt19937_64 rng(0x2c3a17u);
    std::uint64_t triples = 0, factorizations = 0;
    for (const std::string& spec : specs) {
        PermGroup G = build_named(spec);
        std::uint64_t n = G.chain().count_u64();
        for (int t = 0; t < 20; ++t) {
            Subgroup H = random_subgroup(G, rng, 2);
            Subgroup K = random_subgroup(G, rng, 2);
            // cross_check runs the two coset-transitivity criteria and
            // aborts internally if they disagree with the order identity
            FactorizationCertificate cert = is_factorization(G, H, K, true);
            FactorizationCertificate sym = is_factorization(G, K, H, false);
            require(cert.verdict == sym.verdict, "verdict changed under swapping the factors");
            Permutation x = G.chain().element_at(rng() % n);
            Permutation y = G.chain().element_at(rng() % n);
            FactorizationCertificate conj =
                is_factorization(G, conjugate(H, x), conjugate(K, y), false);
            require(cert.verdict == conj.verdict, "verdict changed under conjugation");
            ++triples;
            if (cert.verdict) ++factorizations;
        }
    }
    require(triples >= 200, "expected at least 200 triples");
    ordered_json j;
    j["triples"] = triples;
    j["factorizations_seen"] = factorizations;
    j["criteria"] = {"order", "h-transitive-on-cosets-of-k", "k-transitive-on-cosets-of-h",
                     "swap-symmetry", "conjugation-invariance"};
    return j;
}

ordered_json case_s6_pgl25_wreath() {
    PermGroup G = build_named("S:6");
    PermGroup h = build_named("PGL2:5");
    PermGroup k = build_named("wr(S:3,2)");
    Subgroup H = make_subgroup(h, G), K = make_subgroup(k, G);
    FactorizationCertificate cert = is_factorization(G, H, K, true);
    require(cert.verdict, "S6 = PGL2(5) * (S3 wr S2) did not verify");
    require(cert.order_intersection == 12,
            "intersection order " + cert.order_intersection.get_str() + ", expected 12");
    TransitiveFactor tf = one_factor_transitive(G, H, K);
    require(tf == TransitiveFactor::Both, "both factors are transitive on 6 points");
    ordered_json j;
    j["order_g"] = cert.order_g.get_str();
    j["order_h"] = cert.order_h.get_str();
    j["order_k"] = cert.order_k.get_str();
    j["intersection"] = cert.order_intersection.get_str();
    j["transitive_factors"] = "both";
    return j;
}

ordered_json psl27_factorization(const std::string& k_handle, unsigned expect_k,
                                 unsigned expect_inter, bool h_is_borel) {
    PermGroup G = build_named("PSL2:7");
    // the Borel subgroup of order 21 is the point stabilizer at infinity
    Subgroup borel = stabilizer(G, 7);
    require(borel.group.order() == 21, "point stabilizer order");
    Subgroup other = resolve_subgroup(G, k_handle);
    require(other.group.order() == expect_k,
            "subgroup order " + other.group.order().get_str());
    Subgroup H = h_is_borel ? borel : other;
    Subgroup K = h_is_borel ? other : borel;
    FactorizationCertificate cert = is_factorization(G, H, K, true);
    require(cert.verdict, "factorization did not verify");
    require(cert.order_intersection == expect_inter,
            "intersection order " + cert.order_intersection.get_str());
    ordered_json j;
    j["order_g"] = cert.order_g.get_str();
    j["order_h"] = cert.order_h.get_str();
    j["order_k"] = cert.order_k.get_str();
    j["intersection"] = cert.order_intersection.get_str();
    return j;
}

ordered_json case_homfact_a6() {
    PermGroup A6 = build_named("A:6");
    HomFactReport iso = homogeneous_search(A6, std::nullopt, HomFactMode::Isomorphic, 3);
    require(iso.pairs.size() == 1, "expected exactly one isomorphic pair, found " +
                                       std::to_string(iso.pairs.size()));
    const HomFactPair& p = iso.pairs.front();
    require(p.factor_order == 60, "factor order " + p.factor_order.get_str());
    require(p.intersection_order == 10, "intersection " + p.intersection_order.get_str());
    // both factors are simple of order 60
    for (const auto& gens : {p.a_gens, p.b_gens}) {
        std::vector<Permutation> gs;
        for (const std::string& s : gens) gs.push_back(Permutation::parse_cycles(s, 6));
        PermGroup fac = PermGroup::from_generators(6, gs);
        require(fac.order() == 60, "factor order rebuilt");
        auto normals = enumerate_normal_subgroups(fac);
        require(normals.size() == 2, "order-60 factor is simple");
    }
    HomFactReport conj = homogeneous_search(A6, A6, HomFactMode::Conjugate, 3);
    require(conj.pairs.empty(), "conjugate mode must find nothing in A6");
    ordered_json j;
    j["iso"] = homfact_json(iso);
    j["conj"] = homfact_json(conj);
    return j;
}

ordered_json case_m12_m11() {
    PermGroup M12 = build_named("M12");
    require(M12.order() == 95040, "M12 order");
    Subgroup M11 = stabilizer(M12, 11);
    require(M11.group.order() == 7920, "point stabilizer order");
    // a transitive complement: extend a 660-element subgroup of the point
    // stabilizer by an outside element until the order is 7920 again
    auto x = find_element_of_order(M11.group, 11);
    require(x.has_value(), "element of order 11");
    PermGroup N = normalizer(M11.group, PermGroup::from_generators(12, {*x}));
    require(N.order() == 55, "normalizer order " + N.order().get_str());
    PermGroup L0;
    for (const Permutation& t : M11.group.sorted_elements(settings().bounds.elements)) {
        if (t.order() != 2) continue;
        std::vector<Permutation> gens = N.generators();
        gens.push_back(t);
        PermGroup cand = PermGroup::from_generators(12, gens);
        if (cand.order() == 660) {
            L0 = cand;
            break;
        }
    }
    require(L0.valid() && L0.order() == 660, "order-660 overgroup of the normalizer");
    PermGroup M11p;
    for (const Permutation& y : M12.sorted_elements(settings().bounds.elements)) {
        if (M11.group.contains(y)) continue;
        std::vector<Permutation> gens = L0.generators();
        gens.push_back(y);
        PermGroup cand = PermGroup::from_generators(12, gens);
        if (cand.order() == 7920) {
            M11p = cand;
            break;
        }
    }
    require(M11p.valid(), "transitive complement of order 7920");
    require(is_transitive(M11p), "second factor must be transitive");
    Subgroup A = M11, B = make_subgroup(M11p, M12);
    FactorizationCertificate cert = is_factorization(M12, A, B, false);
    require(cert.verdict, "M12 = M11 * M11' did not verify");
    require(cert.order_intersection == 660,
            "intersection order " + cert.order_intersection.get_str() + ", expected 660");
    auto witness = are_conjugate_subgroups(M12, A, B);
    require(!witness.has_value(), "the two factors must not be conjugate in M12");
    ordered_json j;
    j["order_g"] = cert.order_g.get_str();
    j["order_h"] = cert.order_h.get_str();
    j["order_k"] = cert.order_k.get_str();
    j["intersection"] = cert.order_intersection.get_str();
    j["factors_conjugate"] = false;
    j["second_factor_transitive"] = true;
    return j;
}

ordered_json case_ppd(const mpz_class& a, unsigned m, std::vector<unsigned> expect,
                      bool expect_exceptional) {
    PpdResult r = ppd(a, m);
    require(r.primes.size() == expect.size(), "unexpected number of primitive prime divisors");
    for (std::size_t i = 0; i < expect.size(); ++i)
        require(r.primes[i] == expect[i], "unexpected prime " + r.primes[i].get_str());
    require(r.exceptional == expect_exceptional, "exceptional flag mismatch");
    ordered_json j;
    j["a"] = a.get_str();
    j["m"] = m;
    ordered_json primes = ordered_json::array();
    for (const auto& p : r.primes) primes.push_back(p.get_str());
    j["primes"] = primes;
    j["exceptional"] = r.exceptional;
    return j;
}

ordered_json case_zsigmondy_battery() {
    std::uint64_t checked = 0, nonempty = 0;
    for (unsigned a = 2; a <= 10; ++a)
        for (unsigned m = 2; m <= 12; ++m) {
            PpdResult r = ppd(a, m);
            mpz_class am1;
            mpz_pow_ui(am1.get_mpz_t(), mpz_class(a).get_mpz_t(), m);
            am1 -= 1;
            // definition check with direct arithmetic
            for (const mpz_class& p : r.primes) {
                require(is_prime(p), "non-prime in ppd output");
                require(mpz_divisible_p(am1.get_mpz_t(), p.get_mpz_t()) != 0,
                        "ppd prime does not divide a^m-1");
                if (!(a == 2 && m == 6))
                    for (unsigned i = 1; i < m; ++i) {
                        mpz_class ai1;
                        mpz_pow_ui(ai1.get_mpz_t(), mpz_class(a).get_mpz_t(), i);
                        ai1 -= 1;
                        require(mpz_divisible_p(ai1.get_mpz_t(), p.get_mpz_t()) == 0,
                                "ppd prime divides an earlier a^i-1");
                    }
                require(p % m == 1, "ppd prime not congruent to 1 mod m");
                require(p > m, "ppd prime not exceeding m");
            }
            // completeness against an independent full factorization
            if (!(a == 2 && m == 6)) {
                mpz_class rest = am1;
                std::vector<mpz_class> prime_divisors;
                for (mpz_class d = 2; d * d <= rest; d += (d == 2 ? 1 : 2))
                    if (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
                        prime_divisors.push_back(d);
                        while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) rest /= d;
                    }
                if (rest > 1) prime_divisors.push_back(rest);
                std::vector<mpz_class> expected;
                for (const mpz_class& p : prime_divisors) {
                    bool primitive = true;
                    for (unsigned i = 1; i < m && primitive; ++i) {
                        mpz_class ai1;
                        mpz_pow_ui(ai1.get_mpz_t(), mpz_class(a).get_mpz_t(), i);
                        ai1 -= 1;
                        if (mpz_divisible_p(ai1.get_mpz_t(), p.get_mpz_t())) primitive = false;
                    }
                    if (primitive) expected.push_back(p);
                }
                require(expected == r.primes, "ppd set disagrees with the brute-force oracle");
                if (r.primes.empty())
                    require(r.exceptional, "empty ppd must be flagged exceptional");
            }
            ++checked;
            if (!r.primes.empty()) ++nonempty;
        }
    ordered_json j;
    j["pairs_checked"] = checked;
    j["nonempty"] = nonempty;
    return j;
}

ordered_json case_legendre_bound() {
    std::uint64_t checked = 0;
    for (unsigned n = 1; n <= 300; ++n)
        for (unsigned p = 2; p <= 100; ++p) {
            if (!is_prime(p)) continue;
            FactorialPPart r = factorial_p_part(n, p);
            require(r.bound_holds, "Legendre bound failed at n=" + std::to_string(n) +
                                       ", p=" + std::to_string(p));
            ++checked;
        }
    ordered_json j;
    j["pairs_checked"] = checked;
    return j;
}

ordered_json case_cycle_battery() {
    ordered_json cycles = ordered_json::array();
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        PermGroup G = build_named("C:" + std::to_string(p));
        Subgroup triv = make_subgroup(PermGroup::from_generators(p, {}), G);
        CosetDigraph gamma = CosetDigraph::build(G, triv, G.generators().at(0));
        require(gamma.valency() == 1, "directed cycle valency");
        require(gamma.connected(), "directed cycle connectivity");
        require(vertex_primitivity(gamma).primitive, "prime cycle primitivity");
        require(valency_or_cycle_audit(gamma) == DigraphShape::PrimeDirectedCycle,
                "prime cycle classification");
        require(vertex_stabilizer_normal_audit(gamma).ok, "stabilizer normal audit");
        for (unsigned s = 1; s <= 5; ++s) {
            SArcCount direct = s_arcs_direct(gamma, s);
            require(direct.count == p, "cycle s-arc count");
            require(direct.transitive, "cycle s-arc transitivity (direct)");
            if (s >= 2)
                require(s_arc_criterion(gamma, s).transitive,
                        "cycle s-arc transitivity (criterion)");
            require(normal_subgroup_descent(gamma, whole_group(G), s),
                    "descent along the full group");
        }
        ordered_json cj;
        cj["p"] = p;
        cj["s_max"] = 5;
        cj["both_verifiers"] = true;
        cycles.push_back(cj);
    }
    // the length-2 case is not a digraph: the relation it would define is
    // symmetric, and the builder must reject it
    bool rejected = false;
    try {
        PermGroup C2 = build_named("C:2");
        Subgroup triv = make_subgroup(PermGroup::from_generators(2, {}), C2);
        CosetDigraph::build(C2, triv, C2.generators().at(0));
    } catch (const not_antisymmetric_error&) {
        rejected = true;
    }
    require(rejected, "the 2-cycle must be rejected as symmetric");
    ordered_json j;
    j["cycles"] = cycles;
    j["two_cycle_rejected_as_symmetric"] = true;
    return j;
}

ordered_json case_agreement_battery() {
    struct Entry {
        std::string group, handle;
    };
    // 2-transitive natural actions carry no digraph (every orbital is
    // self-paired), so the catalog uses lower-rank coset actions
    const std::vector<Entry> catalog = {
        {"S:4", "gens:(1,2)"},      {"S:5", "gens:(1,2)"},
        {"A:5", "gens:(1,2,3)"},    {"A:5", "normord:2"},
        {"PSL2:7", "normord:3"},    {"PSL2:7", "normord:4"},
        {"PSL2:9", "normord:4"},    {"PGL2:5", "classord:4"},
        {"PSL2:8", "normord:9"},    {"PGammaL2:8", "normord:9"},
        {"C:6", "gens:"},
    };
    ordered_json instances = ordered_json::array();
    std::uint64_t agreements = 0;
    for (const Entry& e : catalog) {
        PermGroup G = build_named(e.group);
        Subgroup H = resolve_subgroup(G, e.handle);
        mpz_class index = G.order() / H.group.order();
        if (index > 2000) continue;
        for (const Permutation& g : valid_connectors(G, H.group, 2)) {
            CosetDigraph gamma = CosetDigraph::build(G, H, g);
            ordered_json ij;
            ij["group"] = e.group;
            ij["h"] = e.handle;
            ij["g"] = g.cycle_string();
            ij["vertices"] = gamma.vertex_count();
            ij["valency"] = gamma.valency();
            ij["connected"] = gamma.connected();
            for (unsigned s : {2u, 3u}) {
                SArcCount direct = s_arcs_direct(gamma, s);
                SArcCriterion crit = s_arc_criterion(gamma, s);
                require(direct.transitive == crit.transitive,
                        "the two verifiers disagree on " + e.group + " / " + e.handle +
                            " at s=" + std::to_string(s));
                ++agreements;
                ij["s" + std::to_string(s)] = direct.transitive;
            }
            // 1-arc-transitivity holds by construction; monotonicity then
            // requires the s=2 verdict to dominate s=3
            SArcCount a2 = s_arcs_direct(gamma, 2), a3 = s_arcs_direct(gamma, 3);
            if (a3.transitive && a3.count > 0) require(a2.transitive, "monotonicity violated");
            bool primitive = vertex_primitivity(gamma).primitive;
            ij["primitive"] = primitive;
            if (primitive)
                require(valency_or_cycle_audit(gamma) != DigraphShape::Counterexample,
                        "dichotomy violated on a vertex-primitive instance");
            if (gamma.connected())
                require(vertex_stabilizer_normal_audit(gamma).ok,
                        "a nontrivial normal subgroup of the stabilizer is normalized by g");
            instances.push_back(ij);
        }
    }
    require(instances.size() >= 10, "battery too small");
    ordered_json j;
    j["instances"] = instances;
    j["agreement_checks"] = agreements;
    return j;
}

ordered_json case_descent_pgl25() {
    PermGroup G = build_named("PGL2:5");
    SmallGroup sg = SmallGroup::build(G);
    // scan for the first valency-2 instance whose level-1 stabilizer
    // factorization holds and whose span is the whole group
    std::optional<SmallGroup::Sub> pick_h;
    std::optional<std::uint32_t> pick_g;
    for (const auto& sub : sg.all_subgroups()) {
        if (sub.size() != 4) continue;
        for (std::uint32_t g = 0; g < sg.size() && !pick_h; ++g) {
            if (std::binary_search(sub.begin(), sub.end(), g)) continue;
            std::uint32_t gi = sg.inv(g);
            bool symmetric = false;
            for (std::uint32_t h : sub)
                if (std::binary_search(sub.begin(), sub.end(), sg.mul(sg.mul(g, h), g))) {
                    symmetric = true;
                    break;
                }
            if (symmetric) continue;
            SmallGroup::Sub hg = sg.conjugate_sub(sub, g), hgi = sg.conjugate_sub(sub, gi);
            SmallGroup::Sub a, b, ab;
            std::set_intersection(sub.begin(), sub.end(), hgi.begin(), hgi.end(),
                                  std::back_inserter(a));
            std::set_intersection(sub.begin(), sub.end(), hg.begin(), hg.end(),
                                  std::back_inserter(b));
            if (sub.size() / b.size() < 2) continue;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(ab));
            if (ab.size() * sub.size() != a.size() * b.size()) continue;
            SmallGroup::Sub span_gens = sub;
            span_gens.push_back(g);
            if (sg.close(span_gens).size() != sg.size()) continue;
            pick_h = sub;
            pick_g = g;
        }
        if (pick_h) break;
    }
    require(pick_h.has_value(), "no valency-2 two-arc-transitive instance found");
    std::string handle = "gens:";
    bool first = true;
    for (std::uint32_t e : sg.minimal_generators(*pick_h)) {
        if (!first) handle += ";";
        handle += sg.element(e).cycle_string();
        first = false;
    }
    Subgroup H = resolve_subgroup(G, handle);
    CosetDigraph gamma = CosetDigraph::build(G, H, sg.element(*pick_g));
    require(gamma.valency() == 2, "expected a valency-2 instance");
    require(gamma.connected(), "expected a connected instance");
    SArcCount a2 = s_arcs_direct(gamma, 2);
    require(a2.transitive && s_arc_criterion(gamma, 2).transitive,
            "instance must be 2-arc-transitive by both verifiers");
    SArcCount a3 = s_arcs_direct(gamma, 3);
    require(!a3.transitive && !s_arc_criterion(gamma, 3).transitive,
            "instance must not be 3-arc-transitive");
    // the index-2 subgroup generated by the translation, square scaling and
    // inversion maps is normal and vertex-transitive; descent gives
    // 1-arc-transitivity
    const auto& ggens = G.generators();
    PermGroup socle = PermGroup::from_generators(G.degree(), {ggens[0], ggens[1], ggens[2]});
    require(socle.order() * 2 == G.order(), "index-2 subgroup");
    Subgroup L = make_subgroup(socle, G);
    require(normal_subgroup_descent(gamma, L, 2), "descent must verify 1-arc-transitivity");
    bool invalid_rejected = false;
    try {
        PermGroup tiny = PermGroup::from_generators(G.degree(), {ggens[1]});
        normal_subgroup_descent(gamma, make_subgroup(tiny, G), 2);
    } catch (const std::invalid_argument&) {
        invalid_rejected = true;
    }
    require(invalid_rejected, "a vertex-intransitive or non-normal L must be rejected");
    ordered_json j;
    j["vertices"] = gamma.vertex_count();
    j["valency"] = gamma.valency();
    j["two_arc_transitive"] = true;
    j["three_arc_transitive"] = false;
    j["descent_verified"] = true;
    return j;
}

ordered_json case_not_reproducible() {
    ordered_json items = ordered_json::array();
    ordered_json a;
    a["id"] = "linear-socle-classification";
    a["statement"] =
        "the bound s <= 2 for vertex-primitive s-arc-transitive digraphs whose automorphism "
        "group is almost simple with a two-dimensional-linear-type socle";
    a["reason"] =
        "a classification over infinite families; only its delegated desk-scale checkpoints "
        "are machine-checkable, and this suite certifies exactly those";
    items.push_back(a);
    ordered_json b;
    b["id"] = "psl3-p2-family";
    b["statement"] =
        "the known 2-arc-transitive family with vertex stabilizer A6 and arc stabilizer A5 "
        "over three-dimensional projective groups";
    b["reason"] =
        "the smallest faithful coset action has index around 10^9, far beyond the desk-scale "
        "bounds of this toolkit; recorded as not reproducible";
    items.push_back(b);
    ordered_json j;
    j["not_reproducible"] = items;
    j["covered_instead"] = "every desk-scale computational checkpoint: the factorization "
                           "criteria equivalences, the named factorizations and their "
                           "intersection orders, the homogeneous-factorization searches, the "
                           "primitive-prime-divisor and factorial-part arithmetic, and the "
                           "digraph verifier batteries";
    return j;
}

const std::vector<CaseDef>& cases() {
    static const std::vector<CaseDef> defs = {
        {"criteria-equivalence", "factorization criteria agree on randomized triples",
         "derived",
         "for 200 random (G,H,K) from the catalog the order identity, both coset-transitivity "
         "criteria, factor swapping and conjugation all give one verdict",
         case_criteria_equivalence},
        {"s6-pgl25-wreath", "S6 as a product of PGL2(5) and S3 wr S2", "literature",
         "S6 = PGL2(5) * (S3 wr S2) with intersection of order 12",
         case_s6_pgl25_wreath},
        {"psl27-borel-s4", "PSL2(7) as a product of the Borel subgroup and S4", "literature",
         "PSL2(7) = (C7:C3) * S4 with intersection of order 3",
         [] { return psl27_factorization("classord:24", 24, 3, true); }},
        {"psl27-d8-borel", "PSL2(7) as a product of a Sylow 2-subgroup and the Borel",
         "literature", "PSL2(7) = D8 * (C7:C3) with trivial intersection",
         [] { return psl27_factorization("normord:4", 8, 1, false); }},
        {"homfact-a6-a5", "the homogeneous factorization of A6 by two kinds of A5",
         "derived",
         "the isomorphic-mode search over A6 finds exactly the pair of order-60 simple "
         "factors with intersection of order 10, and the conjugate-mode search finds none",
         case_homfact_a6},
        {"m12-m11-pair", "M12 as a product of two non-conjugate M11 subgroups", "derived",
         "M12 = M11 * M11' with intersection of order 660 and the factors not conjugate",
         case_m12_m11},
        {"dihedral-psl2-9", "no conjugate-factor factorization of the D8 stabilizer",
         "literature",
         "in PSL2(9) the order-8 dihedral vertex stabilizer has no factorization with factors "
         "conjugate in the group and index at least 2",
         [] { return dihedral_case("PSL2:9", 4, 8, HomFactMode::Conjugate, 2); }},
        {"dihedral-pgl2-9", "no conjugate-factor factorization of the D16 stabilizer",
         "literature",
         "in PGL2(9) the order-16 dihedral vertex stabilizer has no factorization with "
         "factors conjugate in the group and index at least 2",
         [] { return dihedral_case("PGL2:9", 8, 16, HomFactMode::Conjugate, 2); }},
        {"dihedral-psl2-8", "no homogeneous factorization of the D18 stabilizer",
         "literature",
         "in PSL2(8) the order-18 dihedral vertex stabilizer has no homogeneous factorization "
         "with index at least 3",
         [] { return dihedral_case("PSL2:8", 9, 18, HomFactMode::Isomorphic, 3); }},
        {"dihedral-pgammal2-8", "no homogeneous factorization of the C9:C6 stabilizer",
         "literature",
         "in PGammaL2(8) the order-54 vertex stabilizer has no homogeneous factorization with "
         "index at least 3",
         [] { return dihedral_case("PGammaL2:8", 9, 54, HomFactMode::Isomorphic, 3); }},
        {"dihedral-psl2-7", "no homogeneous factorization of the D8 stabilizer", "literature",
         "in PSL2(7) the order-8 dihedral subgroup has no homogeneous factorization with "
         "index at least 3",
         [] { return dihedral_case("PSL2:7", 4, 8, HomFactMode::Isomorphic, 3); }},
        {"ppd-2-6", "the designated primitive prime divisor set of (2,6)", "literature",
         "ppd(2,6) = {7} by convention, flagged exceptional",
         [] { return case_ppd(2, 6, {7}, true); }},
        {"ppd-3-2", "the empty primitive prime divisor set of (3,2)", "derived",
         "ppd(3,2) is empty since 3+1 is a power of two",
         [] { return case_ppd(3, 2, {}, true); }},
        {"zsigmondy-battery", "primitive prime divisors across the desk range", "derived",
         "for all 2 <= a <= 10, 2 <= m <= 12 the ppd set matches the brute-force definition "
         "and every member is 1 mod m and exceeds m",
         case_zsigmondy_battery},
        {"legendre-bound", "the factorial p-part bound", "derived",
         "((n!)_p)^(p-1) < p^n exactly, for all n <= 300 and primes p <= 100",
         case_legendre_bound},
        {"cycle-battery", "directed prime cycles pass both verifiers", "direct",
         "directed p-cycles for p in {3,5,7,11} are vertex-primitive and s-arc-transitive for "
         "s <= 5 by both verifiers; the 2-cycle is rejected as symmetric",
         case_cycle_battery},
        {"agreement-battery", "the two s-arc verifiers agree across the catalog", "derived",
         "on every catalog coset digraph of index at most 2000 the direct count and the "
         "stabilizer-factorization criterion agree for s in {2,3}; vertex-primitive instances "
         "satisfy the prime-cycle-or-valency-3 dichotomy; connected instances pass the "
         "stabilizer normal-subgroup audit",
         case_agreement_battery},
        {"descent-pgl25", "a 2-arc-transitive instance and its normal-subgroup descent",
         "derived",
         "PGL2(5) carries a connected valency-2 coset digraph that is 2- but not "
         "3-arc-transitive, and its index-2 normal subgroup acts arc-transitively",
         case_descent_pgl25},
        {"not-reproducible", "desk-scale disclosure", "direct",
         "the classification statement and its large example family are beyond desk scale; "
         "the suite certifies the delegated checkpoints instead",
         case_not_reproducible},
    };
    return defs;
}

bool matches(const std::string& pattern, const std::string& id) {
    if (pattern.empty()) return true;
    if (!pattern.empty() && pattern.back() == '*')
        return id.rfind(pattern.substr(0, pattern.size() - 1), 0) == 0;
    return pattern == id;
}

CaseResult run_def(const CaseDef& def) {
    CaseResult r;
    r.id = def.id;
    r.description = def.description;
    r.basis = def.basis;
    r.claim = def.claim;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.details = def.run();
        r.pass = true;
    } catch (const resource_limit_error& e) {
        r.resource_limited = true;
        r.error = e.what();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
    return r;
}

}  // namespace

std::vector<std::string> case_ids() {
    std::vector<std::string> out;
    for (const CaseDef& d : cases()) out.push_back(d.id);
    return out;
}

CaseResult run_case(const std::string& id) {
    for (const CaseDef& d : cases())
        if (d.id == id) return run_def(d);
    throw std::invalid_argument("unknown repro case '" + id + "'");
}

SuiteResult run_suite(const std::string& filter) {
    SuiteResult suite;
    for (const CaseDef& d : cases()) {
        if (!matches(filter, d.id)) continue;
        CaseResult r = run_def(d);
        suite.all_pass = suite.all_pass && r.pass;
        suite.any_limit = suite.any_limit || r.resource_limited;
        suite.cases.push_back(std::move(r));
    }
    if (suite.cases.empty()) throw std::invalid_argument("no repro case matches '" + filter + "'");
    return suite;
}

nlohmann::ordered_json to_json(const SuiteResult& suite, bool include_timings) {
    ordered_json arr = ordered_json::array();
    for (const CaseResult& c : suite.cases) {
        ordered_json j;
        j["id"] = c.id;
        j["description"] = c.description;
        j["basis"] = c.basis;
        j["claim"] = c.claim;
        j["status"] = c.pass ? "pass" : (c.resource_limited ? "resource-limit" : "fail");
        if (!c.error.empty()) j["error"] = c.error;
        j["details"] = c.details;
        if (include_timings) j["ms"] = c.ms;
        arr.push_back(std::move(j));
    }
    ordered_json out;
    out["cases"] = std::move(arr);
    out["all_pass"] = suite.all_pass;
    out["any_resource_limit"] = suite.any_limit;
    return out;
}

}  // namespace arcfact::repro
