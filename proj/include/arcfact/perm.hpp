#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arcfact {

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position);
    std::size_t position;
};

// A permutation of {0..n-1} stored as its image array. Points act on the
// right: the image of p under g is g[p], and (a*b) means apply a, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(unsigned degree);  // identity
    explicit Permutation(std::vector<std::uint32_t> images);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    std::uint32_t operator[](std::uint32_t p) const { return images_[p]; }
    std::span<const std::uint32_t> images() const { return images_; }

    bool is_identity() const;
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation conjugated_by(const Permutation& x) const;  // x^-1 * this * x
    Permutation power(long long k) const;
    std::uint64_t order() const;

    bool operator==(const Permutation&) const = default;
    std::strong_ordering operator<=>(const Permutation&) const = default;

    // Cycle notation. Printed 1-indexed ("(1,2,3)(4,5)"); parsing accepts
    // either convention via the flag.
    std::string cycle_string() const;
    static Permutation parse_cycles(const std::string& text, unsigned degree,
                                    bool one_indexed = true);

private:
    std::vector<std::uint32_t> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const;
};

// Multiset of cycle lengths (ascending), fixed points included.
std::vector<unsigned> cycle_type(const Permutation& p);

}  // namespace arcfact
