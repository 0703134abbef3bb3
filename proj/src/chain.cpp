#include "arcfact/chain.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace arcfact {

namespace {
constexpr std::size_t kTransversalCacheCap = 8'000'000;  // entries = orbit * degree
constexpr int kRandomConfidence = 16;                    // consecutive clean sifts
}  // namespace

void StabilizerChain::recompute_orbit(std::size_t level) {
    Level& lv = levels_[level];
    lv.pos.assign(degree_, -1);
    lv.orbit.clear();
    lv.parent.clear();
    lv.via.clear();
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    lv.parent.push_back(-1);
    lv.via.push_back(-1);
    // S_level = strong generators fixing the first `level` base points
    std::vector<std::uint32_t> gen_ids;
    for (std::size_t gi = 0; gi < strong_.size(); ++gi)
        if (strong_level_[gi] >= level) gen_ids.push_back(static_cast<std::uint32_t>(gi));
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        std::uint32_t p = lv.orbit[head];
        for (std::uint32_t gi : gen_ids) {
            std::uint32_t q = strong_[gi][p];
            if (lv.pos[q] < 0) {
                lv.pos[q] = static_cast<std::int32_t>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.parent.push_back(static_cast<std::int32_t>(head));
                lv.via.push_back(static_cast<std::int32_t>(gi));
            }
        }
    }
    lv.inv_cache.clear();
    if (lv.orbit.size() * degree_ <= kTransversalCacheCap) {
        lv.inv_cache.resize(lv.orbit.size());
        lv.inv_cache[0] = Permutation(degree_);
        for (std::size_t i = 1; i < lv.orbit.size(); ++i)
            lv.inv_cache[i] =
                strong_[lv.via[i]].inverse() * lv.inv_cache[static_cast<std::size_t>(lv.parent[i])];
    }
}

void StabilizerChain::recompute_all_orbits() {
    for (std::size_t l = 0; l < levels_.size(); ++l) recompute_orbit(l);
}

Permutation StabilizerChain::inv_transversal(std::size_t level, std::size_t pos) const {
    const Level& lv = levels_[level];
    if (!lv.inv_cache.empty()) return lv.inv_cache[pos];
    Permutation e(degree_);
    for (std::size_t i = pos; lv.parent[i] >= 0; i = static_cast<std::size_t>(lv.parent[i]))
        e = e * strong_[lv.via[i]].inverse();
    return e;
}

Permutation StabilizerChain::transversal(std::size_t level, std::size_t pos) const {
    return inv_transversal(level, pos).inverse();
}

Permutation StabilizerChain::transversal_to(std::size_t level, std::uint32_t point) const {
    const Level& lv = levels_.at(level);
    std::int32_t pos = lv.pos[point];
    if (pos < 0) throw std::invalid_argument("point is outside the fundamental orbit");
    return transversal(level, static_cast<std::size_t>(pos));
}

Permutation StabilizerChain::sift(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
    Permutation g = p;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        std::uint32_t img = g[lv.base];
        if (img == lv.base) continue;
        std::int32_t pos = lv.pos[img];
        if (pos < 0) return g;
        g = g * inv_transversal(l, static_cast<std::size_t>(pos));
    }
    return g;
}

bool StabilizerChain::contains(const Permutation& p) const { return sift(p).is_identity(); }

std::size_t StabilizerChain::natural_level(const Permutation& g) const {
    std::size_t l = 0;
    while (l < levels_.size() && g[levels_[l].base] == levels_[l].base) ++l;
    return l;
}

void StabilizerChain::add_strong_generator(const Permutation& g) {
    std::size_t l = natural_level(g);
    if (l == levels_.size()) {
        // g fixes every existing base point: extend the base with the
        // smallest point it moves
        std::uint32_t moved = degree_;
        for (std::uint32_t i = 0; i < degree_; ++i)
            if (g[i] != i) {
                moved = i;
                break;
            }
        if (moved == degree_) return;  // identity
        Level lv;
        lv.base = moved;
        levels_.push_back(std::move(lv));
    }
    strong_.push_back(g);
    strong_level_.push_back(l);
    recompute_all_orbits();
}

void StabilizerChain::verify() {
    if (levels_.empty()) {
        order_ = 1;
        return;
    }
    std::size_t i = levels_.size() - 1;
    for (;;) {
        bool dirty = false;
        for (std::size_t posi = 0; !dirty && posi < levels_[i].orbit.size(); ++posi) {
            Permutation u = transversal(i, posi);
            std::uint32_t point = levels_[i].orbit[posi];
            for (std::size_t gi = 0; !dirty && gi < strong_.size(); ++gi) {
                if (strong_level_[gi] < i) continue;
                std::uint32_t img = strong_[gi][point];
                std::size_t ipos = static_cast<std::size_t>(levels_[i].pos[img]);
                // tree edges give trivial Schreier generators
                if (levels_[i].parent[ipos] == static_cast<std::int32_t>(posi) &&
                    levels_[i].via[ipos] == static_cast<std::int32_t>(gi))
                    continue;
                Permutation g = u * strong_[gi] * inv_transversal(i, ipos);
                // strip through the deeper levels only
                for (std::size_t l = i + 1; l < levels_.size(); ++l) {
                    std::uint32_t im = g[levels_[l].base];
                    if (im == levels_[l].base) continue;
                    std::int32_t pos = levels_[l].pos[im];
                    if (pos < 0) break;
                    g = g * inv_transversal(l, static_cast<std::size_t>(pos));
                }
                if (!g.is_identity()) {
                    add_strong_generator(g);
                    i = std::min(natural_level(g), levels_.size() - 1);
                    dirty = true;
                }
            }
        }
        if (!dirty) {
            if (i == 0) break;
            --i;
        }
    }
    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

StabilizerChain StabilizerChain::build(unsigned degree, const std::vector<Permutation>& gens,
                                       const std::vector<std::uint32_t>& initial_base,
                                       std::uint64_t seed) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    StabilizerChain c;
    c.degree_ = degree;
    for (std::uint32_t b : initial_base) {
        if (b >= degree) throw std::invalid_argument("base point out of range");
        Level lv;
        lv.base = b;
        c.levels_.push_back(std::move(lv));
    }
    c.recompute_all_orbits();
    std::vector<Permutation> clean;
    for (const Permutation& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) clean.push_back(g);
    }
    for (const Permutation& g : clean)
        if (!c.contains(g)) c.add_strong_generator(g);

    if (!clean.empty()) {
        // randomized seeding: sift pseudo-random subproducts and adjoin the
        // non-trivial residues, so the verification pass has little to fix
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<Permutation> pool = clean;
        while (pool.size() < 8) pool.push_back(clean[pool.size() % clean.size()]);
        Permutation accum(degree);
        int consecutive = 0;
        while (consecutive < kRandomConfidence) {
            std::size_t a = rng() % pool.size(), b = rng() % pool.size();
            pool[a] = pool[a] * pool[b];
            accum = accum * pool[a];
            Permutation res = c.sift(accum);
            if (res.is_identity()) {
                ++consecutive;
            } else {
                c.add_strong_generator(res);
                consecutive = 0;
            }
        }
    }
    c.verify();
    if (c.levels_.empty()) c.order_ = 1;
    return c;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const {
    std::vector<Permutation> out;
    for (std::size_t gi = 0; gi < strong_.size(); ++gi)
        if (strong_level_[gi] >= level) out.push_back(strong_[gi]);
    return out;
}

bool StabilizerChain::count_fits_u64() const {
    static const mpz_class u64max("18446744073709551615");
    return order_ <= u64max;
}

std::uint64_t StabilizerChain::count_u64() const {
    if (!count_fits_u64()) throw std::overflow_error("group order exceeds 64-bit range");
    std::uint64_t n = 1;
    for (const Level& lv : levels_) n *= lv.orbit.size();
    return n;
}

Permutation StabilizerChain::element_at(std::uint64_t index) const {
    Permutation e(degree_);
    if (levels_.empty()) return e;
    std::vector<std::uint64_t> suffix(levels_.size() + 1, 1);
    for (std::size_t l = levels_.size(); l-- > 0;)
        suffix[l] = suffix[l + 1] * levels_[l].orbit.size();
    if (index >= suffix[0]) throw std::out_of_range("element index exceeds group order");
    std::vector<std::uint64_t> digit(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l)
        digit[l] = (index / suffix[l + 1]) % levels_[l].orbit.size();
    for (std::size_t l = levels_.size(); l-- > 0;)
        e = e * transversal(l, digit[l]);
    return e;
}

}  // namespace arcfact
