#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcfact/groupops.hpp"
#include "arcfact/groups.hpp"
#include "arcfact/smallgroup.hpp"

using namespace arcfact;

TEST_CASE("finite fields") {
    FiniteField f9 = FiniteField::make(9);
    CHECK(f9.characteristic() == 3);
    CHECK(f9.extension_degree() == 2);
    std::uint16_t g = f9.primitive_element();
    std::uint16_t x = g;
    unsigned order = 1;
    while (x != 1) {
        x = f9.mul(x, g);
        ++order;
    }
    CHECK(order == 8);

    FiniteField f8 = FiniteField::make(8);
    CHECK(f8.extension_degree() == 3);
    FiniteField f7 = FiniteField::make(7);
    CHECK(f7.extension_degree() == 1);
    CHECK(f7.mul(3, 5) == 1);

    // x^2 + 1 is reducible over F_2: (x+1)^2
    CHECK_THROWS_AS(FiniteField::make(4, {1, 0}), std::invalid_argument);
    // but irreducible over F_3
    FiniteField f9b = FiniteField::make(9, {1, 0});
    CHECK(f9b.q() == 9);
}

TEST_CASE("projective group orders") {
    for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 25u}) {
        PermGroup psl = build_named("PSL2:" + std::to_string(q));
        mpz_class expect = mpz_class(q) * (mpz_class(q) * q - 1) / (q % 2 == 0 ? 1 : 2);
        CHECK(psl.order() == expect);
        CHECK(psl.degree() == q + 1);
        CHECK(transitivity_degree(psl) >= 2);
    }
    CHECK(build_named("PGL2:5").order() == 120);
    CHECK(build_named("PGL2:9").order() == 720);
    CHECK(build_named("PGammaL2:8").order() == 1512);   // 3 * |PGL2(8)|
    CHECK(build_named("PGammaL2:9").order() == 1440);   // 2 * |PGL2(9)|
    CHECK(build_named("PSL2:81").order() == 265680);
}

TEST_CASE("named groups") {
    CHECK(build_named("S:6").order() == 720);
    CHECK(build_named("A:6").order() == 360);
    CHECK(build_named("A:7").order() == 2520);
    CHECK(build_named("C:7").order() == 7);
    PermGroup d18 = build_named("D:18");
    CHECK(d18.order() == 18);
    CHECK(d18.degree() == 9);
    PermGroup w = build_named("wr(S:3,2)");
    CHECK(w.order() == 72);
    CHECK(w.degree() == 6);
    PermGroup dir = build_named("dir(S:3,C:2)");
    CHECK(dir.order() == 12);
    CHECK(dir.degree() == 5);
    PermGroup cs = build_named("coset(S:4,stab:0)");
    CHECK(cs.degree() == 4);
    CHECK(cs.order() == 24);
    CHECK(build_named("M11").order() == 7920);
    CHECK_THROWS_AS(build_named("D:7"), std::invalid_argument);
    CHECK_THROWS_AS(build_named("Q:8"), parse_error);
}

TEST_CASE("M11 sits inside M12 as a point stabilizer") {
    PermGroup m12 = build_named("M12");
    Subgroup stab = stabilizer(m12, 11);
    CHECK(stab.group.order() == 7920);
    PermGroup m11 = build_named("M11");
    CHECK(m11.order() == 7920);
    // the standalone M11 generators extended by a fixed point are exactly
    // members of the embedded copy
    for (const Permutation& g : m11.generators()) {
        std::vector<std::uint32_t> img(12);
        for (std::uint32_t i = 0; i < 11; ++i) img[i] = g[i];
        img[11] = 11;
        CHECK(stab.group.contains(Permutation(std::move(img))));
    }
}

TEST_CASE("spec strings round-trip") {
    for (const std::string s :
         {"S:6", "A:6", "C:7", "D:18", "PSL2:9", "PGL2:5", "PGammaL2:8", "M11", "M12",
          "wr(S:3,2)", "dir(S:3,C:2)", "coset(S:4,stab:0)", "wr(dir(C:2,C:3),3)"}) {
        GroupSpec spec = parse_group_spec(s);
        CHECK(to_string(spec) == s);
        CHECK(to_string(parse_group_spec(to_string(spec))) == s);
    }
    CHECK_THROWS_AS(parse_group_spec("wr(S:3"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("S:"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("S:6 extra"), parse_error);
    try {
        parse_group_spec("wr(S:3,x)");
    } catch (const parse_error& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("subgroup handles") {
    PermGroup psl7 = build_named("PSL2:7");
    CHECK(resolve_subgroup(psl7, "stab:7").group.order() == 21);
    CHECK(resolve_subgroup(psl7, "normord:4").group.order() == 8);
    CHECK(resolve_subgroup(psl7, "normord:7").group.order() == 21);
    CHECK(resolve_subgroup(psl7, "classord:24").group.order() == 24);
    CHECK(resolve_subgroup(psl7, "whole").group.order() == 168);
    CHECK_THROWS_AS(resolve_subgroup(psl7, "normord:13"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_subgroup(psl7, "bogus:1"), std::invalid_argument);

    PermGroup s6 = build_named("S:6");
    Subgroup twisted = resolve_subgroup(s6, "gens:(1,2,3);(4,5)");
    CHECK(twisted.group.order() == 6);
}

TEST_CASE("subgroup lattice engine") {
    SmallGroup s4 = SmallGroup::build(build_named("S:4"));
    auto subs = s4.all_subgroups();
    CHECK(subs.size() == 30);
    CHECK(s4.conjugacy_class_reps(subs).size() == 11);

    SmallGroup c6 = SmallGroup::build(build_named("C:6"));
    CHECK(c6.all_subgroups().size() == 4);
    CHECK(c6.conjugacy_class_reps(c6.all_subgroups()).size() == 4);

    SmallGroup d18 = SmallGroup::build(build_named("D:18"));
    auto dsubs = d18.all_subgroups();
    CHECK(dsubs.size() == 16);
    CHECK(d18.conjugacy_class_reps(dsubs).size() == 6);

    // completeness against one-element-extension closure for small orders
    for (const std::string spec : {"S:4", "C:6", "D:12", "A:4"}) {
        SmallGroup sg = SmallGroup::build(build_named(spec));
        std::vector<SmallGroup::Sub> all;
        std::vector<SmallGroup::Sub> frontier{sg.close({})};
        all = frontier;
        while (!frontier.empty()) {
            std::vector<SmallGroup::Sub> next;
            for (const auto& s : frontier)
                for (std::uint32_t x = 0; x < sg.size(); ++x) {
                    if (std::binary_search(s.begin(), s.end(), x)) continue;
                    SmallGroup::Sub gens = s;
                    gens.push_back(x);
                    SmallGroup::Sub t = sg.close(gens);
                    if (std::find(all.begin(), all.end(), t) == all.end()) {
                        all.push_back(t);
                        next.push_back(t);
                    }
                }
            frontier = std::move(next);
        }
        CHECK(all.size() == sg.all_subgroups().size());
    }
}

TEST_CASE("certified isomorphism testing") {
    SmallGroup sg = SmallGroup::build(build_named("S:4"));
    auto subs = sg.all_subgroups();
    // the two order-4 shapes: cyclic vs klein
    SmallGroup::Sub c4, v4, v4b;
    for (const auto& s : subs) {
        if (s.size() != 4) continue;
        auto hist = sg.order_histogram(s);
        bool cyclic = std::count(hist.begin(), hist.end(), 4u) > 0;
        if (cyclic && c4.empty())
            c4 = s;
        else if (!cyclic && v4.empty())
            v4 = s;
        else if (!cyclic && s != v4 && v4b.empty())
            v4b = s;
    }
    REQUIRE(!c4.empty());
    REQUIRE(!v4.empty());
    REQUIRE(!v4b.empty());
    CHECK_FALSE(sg.isomorphic_certified(c4, v4));
    CHECK(sg.isomorphic_certified(v4, v4b));
    CHECK(sg.isomorphic_certified(c4, c4));
}
