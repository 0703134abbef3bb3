#include "arcfact/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arcfact {

parse_error::parse_error(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}

Permutation::Permutation(unsigned degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("image array is not a bijection of {0..n-1}");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in product");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
    return out;
}

Permutation Permutation::conjugated_by(const Permutation& x) const {
    if (degree() != x.degree()) throw std::invalid_argument("degree mismatch in conjugation");
    // (x^-1 g x)[p] = x[g[x^-1[p]]]; build without forming x^-1 explicitly
    Permutation out;
    out.images_.resize(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) out.images_[x.images_[i]] = x.images_[images_[i]];
    return out;
}

Permutation Permutation::power(long long k) const {
    Permutation base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-(k + 1)) + 1;
    Permutation acc(degree());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        for (std::uint32_t j = i;; j = images_[j]) {
            if (seen[j]) break;
            seen[j] = true;
            if (j != i) out += ',';
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree,
                                      bool one_indexed) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw parse_error("empty permutation", i);
    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw parse_error("expected '('", i);
        ++i;
        std::vector<std::uint32_t> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            std::uint64_t v = 0;
            bool got = false;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) {
                v = v * 10 + (text[i] - '0');
                ++i;
                got = true;
                if (v > 0xFFFFFFFFull) throw parse_error("point out of range", start);
            }
            if (!got) throw parse_error("unclosed cycle", i);
            if (one_indexed) {
                if (v == 0) throw parse_error("points are 1-indexed", start);
                v -= 1;
            }
            if (v >= degree) throw parse_error("point exceeds degree", start);
            cyc.push_back(static_cast<std::uint32_t>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw parse_error("expected ',' or ')'", i);
        }
        any_cycle = true;
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            std::uint32_t from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (img[from] != from) throw parse_error("point repeated across cycles", i);
            img[from] = to;
        }
    }
    if (!any_cycle) throw parse_error("expected cycle", 0);
    // repeated-point check above only catches reuse as a cycle source; validate fully
    return Permutation(std::move(img));
}

std::size_t PermHash::operator()(const Permutation& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.degree();
    for (std::uint32_t v : p.images()) h = (h ^ v) * 0x100000001b3ull;
    return h;
}

std::vector<unsigned> cycle_type(const Permutation& p) {
    std::vector<unsigned> lens;
    std::vector<bool> seen(p.degree(), false);
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::uint32_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace arcfact
