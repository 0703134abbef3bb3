#include <numeric>
#include <stdexcept>

#include "arcfact/groups.hpp"

namespace arcfact {

namespace {

Permutation cycle_on(unsigned degree, std::uint32_t from, std::uint32_t to_excl) {
    // (from, from+1, ..., to_excl-1)
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    for (std::uint32_t i = from; i < to_excl; ++i) img[i] = i + 1 == to_excl ? from : i + 1;
    return Permutation(std::move(img));
}

Permutation transposition(unsigned degree, std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

PermGroup symmetric(unsigned n) {
    if (n == 0) throw std::invalid_argument("S:n requires n >= 1");
    if (n == 1) return PermGroup::from_generators(1, {});
    std::vector<Permutation> gens{transposition(n, 0, 1)};
    if (n > 2) gens.push_back(cycle_on(n, 0, n));
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup alternating(unsigned n) {
    if (n == 0) throw std::invalid_argument("A:n requires n >= 1");
    if (n <= 2) return PermGroup::from_generators(n, {});
    std::vector<std::uint32_t> three(n);
    std::iota(three.begin(), three.end(), 0u);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    std::vector<Permutation> gens{Permutation(std::move(three))};
    if (n >= 4) gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n));
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup cyclic(unsigned n) {
    if (n == 0) throw std::invalid_argument("C:n requires n >= 1");
    if (n == 1) return PermGroup::from_generators(1, {});
    return PermGroup::from_generators(n, {cycle_on(n, 0, n)});
}

PermGroup dihedral(unsigned order) {
    if (order < 6 || order % 2 != 0)
        throw std::invalid_argument(
            "D:k takes the group order, an even number >= 6 (degree k/2)");
    unsigned n = order / 2;
    std::vector<std::uint32_t> refl(n);
    for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return PermGroup::from_generators(n, {cycle_on(n, 0, n), Permutation(std::move(refl))});
}

const std::vector<Permutation>& mathieu11_generators() {
    static const std::vector<Permutation> gens = {
        Permutation::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
        Permutation::parse_cycles("(3,7,11,8)(4,10,5,6)", 11)};
    return gens;
}

const std::vector<Permutation>& mathieu12_generators() {
    static const std::vector<Permutation> gens = {
        Permutation::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12),
        Permutation::parse_cycles("(3,7,11,8)(4,10,5,6)", 12),
        Permutation::parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)};
    return gens;
}

PermGroup wreath_imprimitive(const PermGroup& R, unsigned k) {
    if (k == 0) throw std::invalid_argument("wreath copies must be >= 1");
    unsigned d = R.degree(), n = d * k;
    std::vector<Permutation> gens;
    for (const Permutation& g : R.generators()) {
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        for (std::uint32_t i = 0; i < d; ++i) img[i] = g[i];
        gens.push_back(Permutation(std::move(img)));
    }
    if (k >= 2) {
        std::vector<std::uint32_t> swap01(n);
        std::iota(swap01.begin(), swap01.end(), 0u);
        for (std::uint32_t i = 0; i < d; ++i) {
            swap01[i] = d + i;
            swap01[d + i] = i;
        }
        gens.push_back(Permutation(std::move(swap01)));
        if (k > 2) {
            std::vector<std::uint32_t> cyc(n);
            for (std::uint32_t b = 0; b < k; ++b)
                for (std::uint32_t i = 0; i < d; ++i) cyc[b * d + i] = ((b + 1) % k) * d + i;
            gens.push_back(Permutation(std::move(cyc)));
        }
    }
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup direct_disjoint(const PermGroup& A, const PermGroup& B) {
    unsigned da = A.degree(), n = da + B.degree();
    std::vector<Permutation> gens;
    for (const Permutation& g : A.generators()) {
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        for (std::uint32_t i = 0; i < da; ++i) img[i] = g[i];
        gens.push_back(Permutation(std::move(img)));
    }
    for (const Permutation& g : B.generators()) {
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        for (std::uint32_t i = 0; i < B.degree(); ++i) img[da + i] = da + g[i];
        gens.push_back(Permutation(std::move(img)));
    }
    return PermGroup::from_generators(n, std::move(gens));
}

}  // namespace

std::vector<Permutation> projective_line_generators(const FiniteField& F, bool add_pgl_scalar,
                                                    bool add_frobenius) {
    const unsigned q = F.q();
    const std::uint32_t INF = q;
    auto mobius = [&](std::uint16_t a, std::uint16_t b, std::uint16_t c, std::uint16_t d) {
        std::vector<std::uint32_t> img(q + 1);
        for (unsigned x = 0; x < q; ++x) {
            std::uint16_t num = F.add(F.mul(a, static_cast<std::uint16_t>(x)), b);
            std::uint16_t den = F.add(F.mul(c, static_cast<std::uint16_t>(x)), d);
            img[x] = den != 0 ? F.mul(num, F.inv(den)) : INF;
        }
        img[INF] = c != 0 ? F.mul(a, F.inv(c)) : INF;
        return Permutation(std::move(img));
    };
    std::uint16_t lam = F.primitive_element();
    std::vector<Permutation> gens;
    gens.push_back(mobius(1, 1, 0, 1));  // x -> x + 1
    // scaling by the least square generating the squares; for even q every
    // scalar is a square so the primitive element itself is used
    std::uint16_t scale = q % 2 == 0 ? lam : F.mul(lam, lam);
    gens.push_back(mobius(scale, 0, 0, 1));
    gens.push_back(mobius(0, F.neg(1), 1, 0));  // x -> -1/x
    if (add_pgl_scalar && q % 2 == 1) gens.push_back(mobius(lam, 0, 0, 1));
    if (add_frobenius) {
        std::vector<std::uint32_t> img(q + 1);
        for (unsigned x = 0; x < q; ++x) img[x] = F.frobenius(static_cast<std::uint16_t>(x));
        img[INF] = INF;
        gens.push_back(Permutation(std::move(img)));
    }
    return gens;
}

PermGroup build_named(const GroupSpec& spec) {
    using F = GroupSpec::Family;
    const std::uint64_t pbound = settings().bounds.points;
    auto check_degree = [&](std::uint64_t deg) {
        if (deg > pbound)
            throw resource_limit_error("points", pbound,
                                       "construction of degree " + std::to_string(deg));
    };
    switch (spec.family) {
        case F::S:
            check_degree(spec.n);
            return symmetric(spec.n);
        case F::A:
            check_degree(spec.n);
            return alternating(spec.n);
        case F::C:
            check_degree(spec.n);
            return cyclic(spec.n);
        case F::D:
            check_degree(spec.n / 2);
            return dihedral(spec.n);
        case F::PSL2:
        case F::PGL2:
        case F::PGammaL2: {
            if (spec.n < 2) throw std::invalid_argument("projective groups need q >= 2");
            FiniteField field = FiniteField::make(spec.n);
            check_degree(spec.n + 1);
            auto gens = projective_line_generators(field, spec.family != F::PSL2,
                                                   spec.family == F::PGammaL2);
            return PermGroup::from_generators(spec.n + 1, std::move(gens));
        }
        case F::M11:
            return PermGroup::from_generators(11, mathieu11_generators());
        case F::M12:
            return PermGroup::from_generators(12, mathieu12_generators());
        case F::Wreath: {
            PermGroup base = build_named(spec.parts.at(0));
            check_degree(static_cast<std::uint64_t>(base.degree()) * spec.copies);
            return wreath_imprimitive(base, spec.copies);
        }
        case F::Direct: {
            PermGroup a = build_named(spec.parts.at(0));
            PermGroup b = build_named(spec.parts.at(1));
            check_degree(static_cast<std::uint64_t>(a.degree()) + b.degree());
            return direct_disjoint(a, b);
        }
        case F::Coset: {
            PermGroup g = build_named(spec.parts.at(0));
            Subgroup h = resolve_subgroup(g, spec.handle);
            return coset_action(g, h).image();
        }
    }
    throw std::logic_error("unhandled group family");
}

PermGroup build_named(const std::string& spec_text) {
    return build_named(parse_group_spec(spec_text));
}

Subgroup resolve_subgroup(const PermGroup& G, const std::string& handle) {
    if (handle == "whole") return whole_group(G);
    auto colon = handle.find(':');
    std::string kind = handle.substr(0, colon == std::string::npos ? handle.size() : colon);
    std::string arg = colon == std::string::npos ? "" : handle.substr(colon + 1);
    if (kind == "stab") {
        unsigned long point = std::stoul(arg);
        return stabilizer(G, static_cast<std::uint32_t>(point));
    }
    if (kind == "normord") {
        unsigned long k = std::stoul(arg);
        auto x = find_element_of_order(G, k);
        if (!x)
            throw std::invalid_argument("group has no element of order " + arg);
        PermGroup cyc = PermGroup::from_generators(G.degree(), {*x});
        return make_subgroup(normalizer(G, cyc), G);
    }
    if (kind == "classord") {
        unsigned long k = std::stoul(arg);
        SmallGroup sg = SmallGroup::build(G);
        for (const auto& rep : sg.conjugacy_class_reps(sg.all_subgroups()))
            if (rep.size() == k) return make_subgroup(sg.to_group(rep), G);
        throw std::invalid_argument("group has no subgroup of order " + arg);
    }
    if (kind == "gens") {
        std::vector<Permutation> gens;
        std::size_t start = colon + 1;
        while (start <= handle.size()) {
            std::size_t semi = handle.find(';', start);
            std::string part = handle.substr(
                start, semi == std::string::npos ? std::string::npos : semi - start);
            if (!part.empty()) gens.push_back(Permutation::parse_cycles(part, G.degree()));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        return make_subgroup(PermGroup::from_generators(G.degree(), std::move(gens)), G);
    }
    throw std::invalid_argument(
        "unknown subgroup handle '" + handle +
        "' (expected stab:<p>, normord:<k>, classord:<k>, gens:<cycles>, whole)");
}

}  // namespace arcfact
