#pragma once

#include <cstdint>
#include <vector>

namespace arcfact {

// F_q for prime powers q <= 81, as full multiplication/addition tables over a
// fixed irreducible polynomial (one canonical choice per q). Construction
// verifies inverses are total, samples associativity, and certifies the
// primitive element has order exactly q-1.
class FiniteField {
public:
    static FiniteField make(unsigned q);
    // coeffs: low-to-high coefficients c of the monic irreducible, meaning
    // x^f = -(c0 + c1 x + ... + c_{f-1} x^{f-1}); rejected with a witness
    // factor if reducible
    static FiniteField make(unsigned q, const std::vector<unsigned>& coeffs);

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned extension_degree() const { return f_; }
    std::uint16_t primitive_element() const { return primitive_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t inv(std::uint16_t a) const;  // a != 0
    std::uint16_t frobenius(std::uint16_t a) const;  // a^p
    std::uint16_t pow(std::uint16_t a, unsigned e) const;

private:
    unsigned q_ = 0, p_ = 0, f_ = 0;
    std::uint16_t primitive_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;

    void build_tables(const std::vector<unsigned>& coeffs);
    void verify_axioms() const;
};

}  // namespace arcfact
