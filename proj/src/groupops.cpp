#include "arcfact/groupops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "arcfact/kernels.hpp"

namespace arcfact {

std::vector<std::uint32_t> orbit_of(const PermGroup& G, std::uint32_t point) {
    if (point >= G.degree()) throw std::invalid_argument("point out of range");
    std::vector<bool> seen(G.degree(), false);
    std::vector<std::uint32_t> frontier{point}, out{point};
    seen[point] = true;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t p : frontier)
            for (const Permutation& g : G.generators()) {
                std::uint32_t q = g[p];
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
}

std::vector<std::vector<std::uint32_t>> orbits_of(const PermGroup& G) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(G.degree(), false);
    for (std::uint32_t p = 0; p < G.degree(); ++p) {
        if (seen[p]) continue;
        auto orb = orbit_of(G, p);
        for (std::uint32_t q : orb) seen[q] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

bool is_transitive(const PermGroup& G) { return orbit_of(G, 0).size() == G.degree(); }

unsigned transitivity_degree(const PermGroup& G) {
    unsigned n = G.degree(), k = 0;
    PermGroup H = G;
    while (k < n) {
        if (orbit_of(H, k).size() != static_cast<std::size_t>(n - k)) break;
        ++k;
        if (k == n) break;
        H = stabilizer(H, k - 1).group;
    }
    return k;
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    // returns the representative that lost (got absorbed), or ~0u if equal
    std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return ~0u;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return b;
    }
};

// minimal block system in which alpha and beta share a block
std::vector<std::uint32_t> minimal_block_of(const PermGroup& G, std::uint32_t alpha,
                                            std::uint32_t beta) {
    UnionFind uf(G.degree());
    std::deque<std::uint32_t> queue;
    uf.unite(alpha, beta);
    queue.push_back(std::max(alpha, beta));
    while (!queue.empty()) {
        std::uint32_t gamma = queue.front();
        queue.pop_front();
        for (const Permutation& g : G.generators()) {
            std::uint32_t a = g[gamma], b = g[uf.find(gamma)];
            std::uint32_t lost = uf.unite(a, b);
            if (lost != ~0u) queue.push_back(lost);
        }
    }
    std::vector<std::uint32_t> block;
    std::uint32_t root = uf.find(alpha);
    for (std::uint32_t p = 0; p < G.degree(); ++p)
        if (uf.find(p) == root) block.push_back(p);
    return block;
}

}  // namespace

PrimitivityResult is_primitive(const PermGroup& G) {
    if (!is_transitive(G))
        throw std::invalid_argument("primitivity is defined for transitive groups only");
    unsigned n = G.degree();
    if (n == 1) return {true, {}};
    PrimitivityResult res{true, {}};
    for (std::uint32_t beta = 1; beta < n; ++beta) {
        auto block = minimal_block_of(G, 0, beta);
        if (block.size() < n) {
            if (res.primitive || block.size() < res.block.size()) res.block = block;
            res.primitive = false;
        }
    }
    return res;
}

Subgroup stabilizer(const PermGroup& G, std::uint32_t point) {
    if (point >= G.degree()) throw std::invalid_argument("point out of range");
    PermGroup based = PermGroup::from_generators(G.degree(), G.generators(), {point});
    PermGroup stab = PermGroup::from_generators(G.degree(), based.chain().level_generators(1));
    return make_subgroup(std::move(stab), G);
}

Subgroup conjugate(const Subgroup& H, const Permutation& x) {
    if (!H.ambient.contains(x))
        throw std::invalid_argument("conjugating element lies outside the ambient group");
    std::vector<Permutation> gens;
    gens.reserve(H.group.generators().size());
    for (const Permutation& g : H.group.generators()) gens.push_back(g.conjugated_by(x));
    PermGroup conj = PermGroup::from_generators(H.group.degree(), std::move(gens));
    if (conj.order() != H.group.order())
        throw std::logic_error("conjugate changed the subgroup order");
    return Subgroup{std::move(conj), H.ambient};
}

namespace {

// grow a group by the listed elements, rebuilding only when one is new
PermGroup grow_from(unsigned degree, const std::vector<Permutation>& seed,
                    const std::vector<Permutation>& elements) {
    PermGroup g = PermGroup::from_generators(degree, seed);
    std::vector<Permutation> gens = seed;
    for (const Permutation& p : elements) {
        if (!g.contains(p)) {
            gens.push_back(p);
            g = PermGroup::from_generators(degree, gens);
        }
    }
    return g;
}

void check_common_ambient(const Subgroup& H, const Subgroup& K) {
    if (H.group.degree() != K.group.degree())
        throw std::invalid_argument("subgroups act on different domains");
    for (const Permutation& g : H.group.generators())
        if (!K.ambient.contains(g))
            throw std::invalid_argument("factors do not share an ambient group");
    for (const Permutation& g : K.group.generators())
        if (!H.ambient.contains(g))
            throw std::invalid_argument("factors do not share an ambient group");
}

}  // namespace

Subgroup intersection(const Subgroup& H, const Subgroup& K) {
    check_common_ambient(H, K);
    const std::uint64_t bound = settings().bounds.elements;
    const PermGroup& small = H.group.order() <= K.group.order() ? H.group : K.group;
    const PermGroup& large = H.group.order() <= K.group.order() ? K.group : H.group;
    if (small.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("elements", bound,
                                   "intersection via enumeration of a group of order " +
                                       small.order().get_str());
    const StabilizerChain& sc = small.chain();
    const StabilizerChain& lc = large.chain();
    std::uint64_t n = sc.count_u64();
    auto hits = kernels::run_collect(n, [&](std::uint64_t i) { return lc.contains(sc.element_at(i)); });
    std::vector<Permutation> members;
    members.reserve(hits.size());
    for (std::uint64_t i : hits) members.push_back(sc.element_at(i));
    PermGroup inter = grow_from(small.degree(), {}, members);
    return Subgroup{std::move(inter), H.ambient};
}

std::optional<Permutation> are_conjugate_subgroups(const PermGroup& G, const Subgroup& H,
                                                   const Subgroup& K) {
    for (const Permutation& g : H.group.generators())
        if (!G.contains(g)) throw std::invalid_argument("H is not a subgroup of G");
    for (const Permutation& g : K.group.generators())
        if (!G.contains(g)) throw std::invalid_argument("K is not a subgroup of G");
    if (H.group.order() != K.group.order()) return std::nullopt;
    if (H.group.order() == 1) return Permutation(G.degree());
    {
        // conjugation preserves the orbit-size multiset
        auto sizes = [](const PermGroup& g) {
            std::vector<std::size_t> s;
            for (auto& o : orbits_of(g)) s.push_back(o.size());
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sizes(H.group) != sizes(K.group)) return std::nullopt;
    }
    bool same = true;
    for (const Permutation& g : H.group.generators())
        if (!K.group.contains(g)) {
            same = false;
            break;
        }
    if (same) return Permutation(G.degree());

    const std::uint64_t bound = settings().bounds.elements;
    if (G.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("elements", bound,
                                   "conjugacy scan over a group of order " + G.order().get_str());
    const StabilizerChain& gc = G.chain();
    const auto& hgens = H.group.generators();
    const StabilizerChain& kc = K.group.chain();
    std::uint64_t n = gc.count_u64();
    auto hits = kernels::run_collect(n, [&](std::uint64_t i) {
        Permutation x = gc.element_at(i);
        for (const Permutation& h : hgens)
            if (!kc.contains(h.conjugated_by(x))) return false;
        return true;
    });
    if (hits.empty()) return std::nullopt;
    Permutation best = gc.element_at(hits[0]);
    for (std::size_t j = 1; j < hits.size(); ++j) {
        Permutation cand = gc.element_at(hits[j]);
        if (cand < best) best = cand;
    }
    return best;
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seed) {
    std::vector<Permutation> gens;
    for (const Permutation& s : seed)
        if (!s.is_identity()) gens.push_back(s);
    PermGroup N = PermGroup::from_generators(G.degree(), gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> add;
        for (const Permutation& n : gens)
            for (const Permutation& g : G.generators()) {
                Permutation c = n.conjugated_by(g);
                if (!N.contains(c)) add.push_back(c);
            }
        if (!add.empty()) {
            for (const Permutation& a : add)
                if (!N.contains(a)) {
                    gens.push_back(a);
                    N = PermGroup::from_generators(G.degree(), gens);
                }
            grew = true;
        }
    }
    return N;
}

namespace {

std::optional<Permutation> min_nontrivial_element(const PermGroup& G, std::uint64_t cap) {
    if (G.order() == 1) return std::nullopt;
    if (G.order() > mpz_class(std::to_string(cap))) return std::nullopt;
    std::uint64_t n = G.chain().count_u64();
    std::optional<Permutation> best;
    for (std::uint64_t i = 0; i < n; ++i) {
        Permutation p = G.chain().element_at(i);
        if (p.is_identity()) continue;
        if (!best || p < *best) best = std::move(p);
    }
    return best;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    for (const Permutation& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

}  // namespace

std::vector<PermGroup> enumerate_normal_subgroups(const PermGroup& H) {
    const std::uint64_t bound = settings().bounds.normal_order;
    if (H.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("normal_order", bound,
                                   "normal-subgroup enumeration of a group of order " +
                                       H.order().get_str());
    std::uint64_t n = H.chain().count_u64();
    // one normal closure per conjugacy class of elements
    std::unordered_set<Permutation, PermHash> marked;
    std::vector<PermGroup> atoms;
    atoms.push_back(PermGroup::from_generators(H.degree(), {}));  // trivial
    for (std::uint64_t i = 0; i < n; ++i) {
        Permutation e = H.chain().element_at(i);
        if (e.is_identity() || marked.count(e)) continue;
        // mark the conjugacy class of e
        std::vector<Permutation> frontier{e};
        marked.insert(e);
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& c : frontier)
                for (const Permutation& g : H.generators()) {
                    Permutation d = c.conjugated_by(g);
                    if (marked.insert(d).second) next.push_back(d);
                }
            frontier = std::move(next);
        }
        PermGroup cl = normal_closure(H, {e});
        bool known = false;
        for (const PermGroup& a : atoms)
            if (same_group(a, cl)) {
                known = true;
                break;
            }
        if (!known) atoms.push_back(std::move(cl));
    }
    // join-closure: products of normal subgroups are normal
    std::vector<PermGroup> normals = atoms;
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t m = normals.size();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                std::vector<Permutation> gens = normals[a].generators();
                gens.insert(gens.end(), normals[b].generators().begin(),
                            normals[b].generators().end());
                PermGroup join = PermGroup::from_generators(H.degree(), gens);
                bool known = false;
                for (const PermGroup& kn : normals)
                    if (same_group(kn, join)) {
                        known = true;
                        break;
                    }
                if (!known) {
                    normals.push_back(std::move(join));
                    grew = true;
                }
            }
    }
    std::sort(normals.begin(), normals.end(), [&](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        auto ma = min_nontrivial_element(a, settings().bounds.elements);
        auto mb = min_nontrivial_element(b, settings().bounds.elements);
        if (ma && mb) return *ma < *mb;
        return false;
    });
    return normals;
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
    const std::uint64_t bound = settings().bounds.elements;
    if (G.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("elements", bound,
                                   "normalizer scan over a group of order " + G.order().get_str());
    const StabilizerChain& gc = G.chain();
    const StabilizerChain& hc = H.chain();
    const auto& hgens = H.generators();
    std::uint64_t n = gc.count_u64();
    auto hits = kernels::run_collect(n, [&](std::uint64_t i) {
        Permutation x = gc.element_at(i);
        for (const Permutation& h : hgens)
            if (!hc.contains(h.conjugated_by(x))) return false;
        return true;
    });
    std::vector<Permutation> members;
    members.reserve(hits.size());
    for (std::uint64_t i : hits) members.push_back(gc.element_at(i));
    return grow_from(G.degree(), {}, members);
}

std::optional<Permutation> find_element_of_order(const PermGroup& G, std::uint64_t k) {
    const std::uint64_t bound = settings().bounds.elements;
    if (G.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("elements", bound,
                                   "element scan over a group of order " + G.order().get_str());
    const StabilizerChain& gc = G.chain();
    std::uint64_t n = gc.count_u64();
    auto hits =
        kernels::run_collect(n, [&](std::uint64_t i) { return gc.element_at(i).order() == k; });
    if (hits.empty()) return std::nullopt;
    Permutation best = gc.element_at(hits[0]);
    for (std::size_t j = 1; j < hits.size(); ++j) {
        Permutation cand = gc.element_at(hits[j]);
        if (cand < best) best = cand;
    }
    return best;
}

Permutation CosetAction::coset_key(const Permutation& x) const {
    Permutation key = h_elements_[0] * x;
    for (std::size_t i = 1; i < h_elements_.size(); ++i) {
        Permutation cand = h_elements_[i] * x;
        if (cand < key) key = cand;
    }
    return key;
}

std::uint32_t CosetAction::vertex_of(const Permutation& x) const {
    auto it = vertex_.find(coset_key(x));
    if (it == vertex_.end())
        throw std::invalid_argument("element lies outside the acting group");
    return it->second;
}

Permutation CosetAction::act(const Permutation& x) const {
    std::vector<std::uint32_t> img(reps_.size());
    for (std::uint32_t v = 0; v < reps_.size(); ++v) img[v] = vertex_of(reps_[v] * x);
    return Permutation(std::move(img));
}

bool CosetAction::faithful() const { return image_.order() == source_.order(); }

mpz_class CosetAction::core_order() const { return source_.order() / image_.order(); }

CosetAction coset_action(const PermGroup& G, const Subgroup& H) {
    for (const Permutation& g : H.group.generators())
        if (!G.contains(g)) throw std::invalid_argument("H is not a subgroup of G");
    mpz_class index_z = G.order() / H.group.order();
    const std::uint64_t pbound = settings().bounds.points;
    if (index_z > mpz_class(std::to_string(pbound)))
        throw resource_limit_error("points", pbound,
                                   "coset action of index " + index_z.get_str());
    CosetAction act;
    act.source_ = G;
    act.h_elements_ = H.group.sorted_elements(settings().bounds.elements);

    std::vector<std::vector<std::uint32_t>> img_gens(G.generators().size());
    act.reps_.push_back(act.coset_key(Permutation(G.degree())));
    act.vertex_.emplace(act.reps_[0], 0);
    for (std::uint32_t head = 0; head < act.reps_.size(); ++head) {
        Permutation rep = act.reps_[head];  // copy: reps_ may reallocate
        for (std::size_t si = 0; si < G.generators().size(); ++si) {
            Permutation key = act.coset_key(rep * G.generators()[si]);
            auto it = act.vertex_.find(key);
            std::uint32_t to;
            if (it == act.vertex_.end()) {
                to = static_cast<std::uint32_t>(act.reps_.size());
                act.vertex_.emplace(key, to);
                act.reps_.push_back(std::move(key));
            } else {
                to = it->second;
            }
            if (img_gens[si].size() <= head) img_gens[si].resize(head + 1);
            img_gens[si][head] = to;
        }
    }
    if (mpz_class(std::to_string(act.reps_.size())) != index_z)
        throw std::logic_error("coset enumeration found " + std::to_string(act.reps_.size()) +
                               " cosets, expected " + index_z.get_str());
    std::vector<Permutation> igens;
    for (auto& v : img_gens) {
        v.resize(act.reps_.size());
        igens.emplace_back(std::move(v));
    }
    act.image_ = PermGroup::from_generators(static_cast<unsigned>(act.reps_.size()), igens);
    return act;
}

}  // namespace arcfact
