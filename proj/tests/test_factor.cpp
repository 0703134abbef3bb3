#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arcfact/factor.hpp"
#include "arcfact/groupops.hpp"
#include "arcfact/groups.hpp"

using namespace arcfact;

TEST_CASE("order identity on the S6 factorization") {
    PermGroup s6 = build_named("S:6");
    Subgroup h = make_subgroup(build_named("PGL2:5"), s6);
    Subgroup k = make_subgroup(build_named("wr(S:3,2)"), s6);
    FactorizationCertificate cert = is_factorization(s6, h, k, true);
    CHECK(cert.verdict);
    CHECK(cert.order_intersection == 12);
    CHECK(cert.criteria_checked.size() == 3);
}

TEST_CASE("whole group factorization is trivial") {
    PermGroup g = build_named("A:5");
    FactorizationCertificate cert = is_factorization(g, whole_group(g), whole_group(g), true);
    CHECK(cert.verdict);
    CHECK(cert.order_intersection == g.order());
}

TEST_CASE("PSL2(7) factorizations") {
    PermGroup g = build_named("PSL2:7");
    Subgroup borel = stabilizer(g, 7);
    Subgroup s4 = resolve_subgroup(g, "classord:24");
    FactorizationCertificate a = is_factorization(g, borel, s4, true);
    CHECK(a.verdict);
    CHECK(a.order_intersection == 3);
    Subgroup d8 = resolve_subgroup(g, "normord:4");
    FactorizationCertificate b = is_factorization(g, d8, borel, true);
    CHECK(b.verdict);
    CHECK(b.order_intersection == 1);
}

TEST_CASE("negative case") {
    PermGroup s5 = build_named("S:5");
    Subgroup h = stabilizer(s5, 0);
    FactorizationCertificate cert = is_factorization(s5, h, h, true);
    CHECK_FALSE(cert.verdict);
}

TEST_CASE("swap and conjugation invariance on random triples") {
    std::mt19937_64 rng(42);
    for (const std::string spec : {"S:5", "A:5", "PGL2:5"}) {
        PermGroup g = build_named(spec);
        std::uint64_t n = g.chain().count_u64();
        for (int t = 0; t < 12; ++t) {
            auto rnd_sub = [&] {
                std::vector<Permutation> gens{g.chain().element_at(rng() % n)};
                if (rng() & 1) gens.push_back(g.chain().element_at(rng() % n));
                return make_subgroup(PermGroup::from_generators(g.degree(), gens), g);
            };
            Subgroup h = rnd_sub(), k = rnd_sub();
            bool v = is_factorization(g, h, k, true).verdict;
            CHECK(is_factorization(g, k, h, false).verdict == v);
            Permutation x = g.chain().element_at(rng() % n);
            Permutation y = g.chain().element_at(rng() % n);
            CHECK(is_factorization(g, conjugate(h, x), conjugate(k, y), false).verdict == v);
        }
    }
}

TEST_CASE("homogeneous search on A6") {
    PermGroup a6 = build_named("A:6");
    HomFactReport iso = homogeneous_search(a6, std::nullopt, HomFactMode::Isomorphic, 3);
    REQUIRE(iso.pairs.size() == 1);
    CHECK(iso.pairs[0].factor_order == 60);
    CHECK(iso.pairs[0].intersection_order == 10);
    CHECK(iso.pairs[0].index == 6);
    CHECK(iso.certified_isomorphism);

    HomFactReport conj = homogeneous_search(a6, a6, HomFactMode::Conjugate, 3);
    CHECK(conj.pairs.empty());
    CHECK(conj.classes_candidate > 0);
}

TEST_CASE("search rejects bad arguments") {
    PermGroup a5 = build_named("A:5");
    CHECK_THROWS_AS(homogeneous_search(a5, std::nullopt, HomFactMode::Conjugate, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(homogeneous_search(a5, std::nullopt, HomFactMode::Isomorphic, 1),
                    std::invalid_argument);
}

TEST_CASE("dihedral stabilizers have no factorization in the stated mode") {
    struct Case {
        const char* ambient;
        unsigned elt_order, stab_order;
        HomFactMode mode;
        std::uint64_t min_index;
    };
    const Case cases[] = {
        {"PSL2:9", 4, 8, HomFactMode::Conjugate, 2},
        {"PGL2:9", 8, 16, HomFactMode::Conjugate, 2},
        {"PSL2:8", 9, 18, HomFactMode::Isomorphic, 3},
        {"PGammaL2:8", 9, 54, HomFactMode::Isomorphic, 3},
        {"PSL2:7", 4, 8, HomFactMode::Isomorphic, 3},
    };
    for (const Case& c : cases) {
        PermGroup g = build_named(c.ambient);
        Subgroup gv = resolve_subgroup(g, "normord:" + std::to_string(c.elt_order));
        CHECK(gv.group.order() == c.stab_order);
        HomFactReport rep = homogeneous_search(
            gv.group, c.mode == HomFactMode::Conjugate ? std::optional<PermGroup>(g) : std::nullopt,
            c.mode, c.min_index);
        CHECK(rep.pairs.empty());
    }
    // mode matters: the D8 stabilizer of PSL2(9) has an isomorphic pair of
    // klein subgroups that are not conjugate in the group
    PermGroup psl9 = build_named("PSL2:9");
    Subgroup d8 = resolve_subgroup(psl9, "normord:4");
    HomFactReport iso = homogeneous_search(d8.group, std::nullopt, HomFactMode::Isomorphic, 2);
    REQUIRE(iso.pairs.size() == 1);
    CHECK(iso.pairs[0].factor_order == 4);
    CHECK(iso.pairs[0].intersection_order == 2);
}

TEST_CASE("one factor is transitive") {
    PermGroup s6 = build_named("S:6");
    Subgroup h = make_subgroup(build_named("PGL2:5"), s6);
    Subgroup k = make_subgroup(build_named("wr(S:3,2)"), s6);
    CHECK(one_factor_transitive(s6, h, k) == TransitiveFactor::Both);

    PermGroup s4 = build_named("S:4");
    Subgroup s3 = stabilizer(s4, 0);
    Subgroup a4 = make_subgroup(build_named("A:4"), s4);
    CHECK(one_factor_transitive(s4, s3, a4) == TransitiveFactor::KOnly);

    // not a factorization
    Subgroup s3b = stabilizer(s4, 1);
    CHECK_THROWS_AS(one_factor_transitive(s4, s3, s3b), std::invalid_argument);
    // not a natural symmetric/alternating group
    PermGroup c6 = build_named("C:6");
    CHECK_THROWS_AS(one_factor_transitive(c6, whole_group(c6), whole_group(c6)),
                    std::invalid_argument);
}

TEST_CASE("exhaustive factorization scan keeps one factor transitive") {
    // every factorization of the natural S_n / A_n found by an exhaustive
    // class-pair scan has a transitive factor
    for (const std::string spec : {"S:4", "S:5", "A:5", "A:6", "S:6"}) {
        PermGroup g = build_named(spec);
        SmallGroup sg = SmallGroup::build(g);
        auto reps = sg.conjugacy_class_reps(sg.all_subgroups());
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j) {
                SmallGroup::Sub inter;
                std::set_intersection(reps[i].begin(), reps[i].end(), reps[j].begin(),
                                      reps[j].end(), std::back_inserter(inter));
                if (inter.size() * sg.size() != reps[i].size() * reps[j].size()) continue;
                Subgroup h = make_subgroup(sg.to_group(reps[i]), g);
                Subgroup k = make_subgroup(sg.to_group(reps[j]), g);
                CHECK_NOTHROW(one_factor_transitive(g, h, k));
            }
    }
}
