#include "arcfact/smallgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace arcfact {

namespace {

struct SubHash {
    std::size_t operator()(const SmallGroup::Sub& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ s.size();
        for (std::uint32_t v : s) h = (h ^ v) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace

SmallGroup SmallGroup::build(const PermGroup& G) {
    const std::uint64_t bound = settings().bounds.subgroups;
    if (G.order() > mpz_class(std::to_string(bound)))
        throw resource_limit_error("subgroups", bound,
                                   "multiplication table of a group of order " +
                                       G.order().get_str());
    SmallGroup s;
    s.degree_ = G.degree();
    s.els_ = G.sorted_elements(bound);
    s.n_ = static_cast<std::uint32_t>(s.els_.size());
    std::unordered_map<Permutation, std::uint32_t, PermHash> idx;
    idx.reserve(s.n_ * 2);
    for (std::uint32_t i = 0; i < s.n_; ++i) idx.emplace(s.els_[i], i);
    s.table_.resize(static_cast<std::size_t>(s.n_) * s.n_);
    for (std::uint32_t a = 0; a < s.n_; ++a)
        for (std::uint32_t b = 0; b < s.n_; ++b)
            s.table_[static_cast<std::size_t>(a) * s.n_ + b] = idx.at(s.els_[a] * s.els_[b]);
    s.inv_.resize(s.n_);
    for (std::uint32_t a = 0; a < s.n_; ++a) s.inv_[a] = idx.at(s.els_[a].inverse());
    s.id_ = idx.at(Permutation(s.degree_));
    s.order_.resize(s.n_);
    for (std::uint32_t a = 0; a < s.n_; ++a) {
        std::uint32_t k = 1, x = a;
        while (x != s.id_) {
            x = s.mul(x, a);
            ++k;
        }
        s.order_[a] = k;
    }
    return s;
}

std::optional<std::uint32_t> SmallGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(els_.begin(), els_.end(), p);
    if (it != els_.end() && *it == p)
        return static_cast<std::uint32_t>(it - els_.begin());
    return std::nullopt;
}

SmallGroup::Sub SmallGroup::close(std::span<const std::uint32_t> gens) const {
    std::vector<bool> in(n_, false);
    std::vector<std::uint32_t> frontier{id_};
    in[id_] = true;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t x : frontier)
            for (std::uint32_t g : gens) {
                std::uint32_t y = mul(x, g);
                if (!in[y]) {
                    in[y] = true;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    Sub out;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

SmallGroup::Sub SmallGroup::conjugate_sub(const Sub& s, std::uint32_t x) const {
    Sub out;
    out.reserve(s.size());
    std::uint32_t xi = inv_[x];
    for (std::uint32_t e : s) out.push_back(mul(mul(xi, e), x));
    std::sort(out.begin(), out.end());
    return out;
}

bool SmallGroup::is_normal(const Sub& s) const {
    for (std::uint32_t x = 0; x < n_; ++x)
        if (conjugate_sub(s, x) != s) return false;
    return true;
}

std::vector<SmallGroup::Sub> SmallGroup::all_subgroups() const {
    std::unordered_set<Sub, SubHash> subs;
    std::vector<Sub> frontier;
    for (std::uint32_t x = 0; x < n_; ++x) {
        Sub c = close(std::span<const std::uint32_t>(&x, 1));
        if (subs.insert(c).second) frontier.push_back(std::move(c));
    }
    std::vector<Sub> pool(subs.begin(), subs.end());
    while (!frontier.empty()) {
        std::vector<Sub> fresh;
        for (const Sub& a : frontier)
            for (const Sub& b : pool) {
                Sub gens;
                gens.insert(gens.end(), a.begin(), a.end());
                gens.insert(gens.end(), b.begin(), b.end());
                Sub j = close(gens);
                if (!subs.count(j)) {
                    subs.insert(j);
                    fresh.push_back(std::move(j));
                }
            }
        for (Sub& f : fresh) pool.push_back(f);
        frontier = std::move(fresh);
    }
    std::vector<Sub> out(subs.begin(), subs.end());
    std::sort(out.begin(), out.end(), [](const Sub& a, const Sub& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SmallGroup::Sub SmallGroup::class_canonical_rep(const Sub& s) const {
    Sub best = s;
    for (std::uint32_t x = 0; x < n_; ++x) {
        Sub c = conjugate_sub(s, x);
        if (c < best) best = std::move(c);
    }
    return best;
}

std::vector<SmallGroup::Sub> SmallGroup::conjugacy_class_reps(const std::vector<Sub>& subs) const {
    std::unordered_set<Sub, SubHash> reps;
    std::vector<Sub> out;
    for (const Sub& s : subs) {
        Sub r = class_canonical_rep(s);
        if (reps.insert(r).second) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Sub& a, const Sub& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<SmallGroup::Sub> SmallGroup::normal_subgroups() const {
    std::vector<Sub> out;
    for (const Sub& s : all_subgroups())
        if (is_normal(s)) out.push_back(s);
    return out;
}

SmallGroup::Sub SmallGroup::derived_subgroup(const Sub& s) const {
    std::vector<std::uint32_t> comms;
    for (std::uint32_t a : s)
        for (std::uint32_t b : s)
            comms.push_back(mul(mul(mul(inv_[a], inv_[b]), a), b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return close(comms);
}

std::vector<std::uint32_t> SmallGroup::order_histogram(const Sub& s) const {
    std::vector<std::uint32_t> h;
    for (std::uint32_t e : s) h.push_back(order_[e]);
    std::sort(h.begin(), h.end());
    return h;
}

std::vector<std::uint32_t> SmallGroup::minimal_generators(const Sub& s) const {
    if (s.size() == 1) return {};
    std::vector<std::uint32_t> gens;
    Sub cur{id_};
    for (std::uint32_t e : s) {
        if (std::binary_search(cur.begin(), cur.end(), e)) continue;
        gens.push_back(e);
        cur = close(gens);
        if (cur.size() == s.size()) break;
    }
    return gens;
}

bool SmallGroup::isomorphic_certified(const Sub& a, const Sub& b) const {
    if (a.size() != b.size()) return false;
    if (order_histogram(a) != order_histogram(b)) return false;
    std::vector<std::uint32_t> agens = minimal_generators(a);
    if (agens.empty()) return true;  // both trivial

    // map word-images generator by generator; backtrack over candidate image
    // tuples with matching element orders
    std::vector<std::uint32_t> chosen(agens.size());
    auto extends_to_iso = [&]() {
        // simultaneous closure of (a, b) pairs; fails on any inconsistency
        std::unordered_map<std::uint32_t, std::uint32_t> fwd, bwd;
        fwd.emplace(id_, id_);
        bwd.emplace(id_, id_);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> frontier{{id_, id_}};
        while (!frontier.empty()) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
            for (auto [x, y] : frontier)
                for (std::size_t gi = 0; gi < agens.size(); ++gi) {
                    std::uint32_t xn = mul(x, agens[gi]);
                    std::uint32_t yn = mul(y, chosen[gi]);
                    auto it = fwd.find(xn);
                    if (it != fwd.end()) {
                        if (it->second != yn) return false;
                        continue;
                    }
                    if (bwd.count(yn)) return false;
                    fwd.emplace(xn, yn);
                    bwd.emplace(yn, xn);
                    next.emplace_back(xn, yn);
                }
            frontier = std::move(next);
        }
        return fwd.size() == a.size();
    };
    std::vector<std::size_t> pos(agens.size(), 0);
    std::size_t level = 0;
    while (true) {
        if (level == agens.size()) {
            if (extends_to_iso()) return true;
            --level;
            ++pos[level];
        }
        if (pos[level] >= b.size()) {
            if (level == 0) return false;
            pos[level] = 0;
            --level;
            ++pos[level];
            continue;
        }
        std::uint32_t cand = b[pos[level]];
        if (order_[cand] != order_[agens[level]]) {
            ++pos[level];
            continue;
        }
        chosen[level] = cand;
        ++level;
        if (level < agens.size()) pos[level] = 0;
    }
}

PermGroup SmallGroup::to_group(const Sub& s) const {
    std::vector<Permutation> gens;
    for (std::uint32_t g : minimal_generators(s)) gens.push_back(els_[g]);
    return PermGroup::from_generators(degree_, std::move(gens));
}

SmallGroup::Sub SmallGroup::sub_from_group(const PermGroup& h) const {
    Sub out;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (h.contains(els_[i])) out.push_back(i);
    return out;
}

}  // namespace arcfact
