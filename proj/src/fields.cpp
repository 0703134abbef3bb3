#include "arcfact/fields.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace arcfact {

namespace {

// canonical irreducible polynomials, low-to-high coefficients
const std::map<unsigned, std::vector<unsigned>>& builtin_polynomials() {
    static const std::map<unsigned, std::vector<unsigned>> table = {
        {4, {1, 1}},           // x^2 + x + 1
        {8, {1, 1, 0}},        // x^3 + x + 1
        {9, {2, 2}},           // x^2 + 2x + 2
        {16, {1, 1, 0, 0}},    // x^4 + x + 1
        {25, {2, 4}},          // x^2 + 4x + 2
        {27, {1, 2, 0}},       // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
        {49, {3, 6}},          // x^2 + 6x + 3
        {64, {1, 1, 0, 1, 1, 0}},  // x^6 + x^4 + x^3 + x + 1
        {81, {2, 0, 0, 2}},    // x^4 + 2x^3 + 2
    };
    return table;
}

struct PrimePower {
    unsigned p, f;
};

PrimePower split_prime_power(unsigned q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};
    unsigned f = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++f;
    }
    if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, f};
}

// polynomial arithmetic over F_p, low-to-high coefficient vectors
using Poly = std::vector<unsigned>;

Poly poly_mul_mod_p(const Poly& a, const Poly& b, unsigned p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

Poly poly_mod(Poly a, const Poly& monic_mod, unsigned p) {
    std::size_t f = monic_mod.size() - 1;
    while (a.size() > f) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - f;
        if (lead) {
            for (std::size_t i = 0; i <= f; ++i) {
                std::size_t pos = shift + i;
                a[pos] = (a[pos] + p * lead - lead * monic_mod[i] % p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

std::string poly_to_string(const Poly& c) {
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0 && c.size() > 1) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::uint16_t FiniteField::inv(std::uint16_t a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return inv_[a];
}

std::uint16_t FiniteField::frobenius(std::uint16_t a) const { return pow(a, p_); }

std::uint16_t FiniteField::pow(std::uint16_t a, unsigned e) const {
    std::uint16_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void FiniteField::build_tables(const std::vector<unsigned>& coeffs) {
    // elements are integers 0..q-1 read base p as coefficient vectors
    auto to_vec = [&](unsigned x) {
        Poly v(f_, 0);
        for (unsigned i = 0; i < f_; ++i) {
            v[i] = x % p_;
            x /= p_;
        }
        return v;
    };
    auto to_int = [&](const Poly& v) {
        unsigned x = 0;
        for (unsigned i = f_; i-- > 0;) x = x * p_ + (i < v.size() ? v[i] : 0);
        return x;
    };
    Poly monic = coeffs;
    monic.resize(f_, 0);
    monic.push_back(1);
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        Poly va = to_vec(a);
        for (unsigned b = 0; b < q_; ++b) {
            Poly vb = to_vec(b);
            Poly sum(f_);
            for (unsigned i = 0; i < f_; ++i) sum[i] = (va[i] + vb[i]) % p_;
            add_[a * q_ + b] = static_cast<std::uint16_t>(to_int(sum));
            Poly prod = poly_mod(poly_mul_mod_p(va, vb, p_), monic, p_);
            mul_[a * q_ + b] = static_cast<std::uint16_t>(to_int(prod));
        }
    }
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b)
            if (add_[a * q_ + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
    for (unsigned a = 1; a < q_; ++a) {
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
    }
    // least primitive element
    primitive_ = 0;
    for (unsigned g = 1; g < q_ && primitive_ == 0; ++g) {
        unsigned k = 1, x = g;
        while (x != 1) {
            x = mul_[x * q_ + g];
            ++k;
        }
        if (k == q_ - 1) primitive_ = static_cast<std::uint16_t>(g);
    }
}

void FiniteField::verify_axioms() const {
    for (unsigned a = 1; a < q_; ++a) {
        if (inv_[a] == 0 || mul(a, inv_[a]) != 1)
            throw std::logic_error("field inverse missing; polynomial not irreducible?");
    }
    // associativity sample on a fixed lattice of triples
    unsigned step = q_ > 9 ? q_ / 9 + 1 : 1;
    for (unsigned a = 0; a < q_; a += step)
        for (unsigned b = 0; b < q_; b += step)
            for (unsigned c = 0; c < q_; c += step) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("field multiplication is not associative");
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw std::logic_error("field addition is not associative");
            }
    if (primitive_ == 0) throw std::logic_error("no primitive element found");
    // exact order check
    unsigned k = 1;
    std::uint16_t x = primitive_;
    while (x != 1) {
        x = mul(x, primitive_);
        ++k;
    }
    if (k != q_ - 1) throw std::logic_error("primitive element order mismatch");
}

FiniteField FiniteField::make(unsigned q) {
    auto [p, f] = split_prime_power(q);
    if (f == 1) return make(q, {});
    auto it = builtin_polynomials().find(q);
    if (it == builtin_polynomials().end())
        throw std::invalid_argument("no built-in irreducible polynomial for q = " +
                                    std::to_string(q) + " (q <= 81 supported)");
    return make(q, it->second);
}

FiniteField FiniteField::make(unsigned q, const std::vector<unsigned>& coeffs) {
    auto [p, f] = split_prime_power(q);
    FiniteField F;
    F.q_ = q;
    F.p_ = p;
    F.f_ = f;
    if (f == 1) {
        F.build_tables({0});
    } else {
        if (coeffs.size() != f)
            throw std::invalid_argument("polynomial degree must equal the extension degree");
        for (unsigned c : coeffs)
            if (c >= p) throw std::invalid_argument("polynomial coefficient out of range");
        // irreducibility by trial division over F_p
        Poly monic = coeffs;
        monic.push_back(1);
        unsigned half = f / 2;
        for (unsigned deg = 1; deg <= half; ++deg) {
            unsigned count = 1;
            for (unsigned i = 0; i < deg; ++i) count *= p;
            for (unsigned code = 0; code < count; ++code) {
                Poly div(deg + 1, 0);
                unsigned c = code;
                for (unsigned i = 0; i < deg; ++i) {
                    div[i] = c % p;
                    c /= p;
                }
                div[deg] = 1;
                // does div divide monic? long division remainder
                Poly rem = monic;
                while (rem.size() >= div.size()) {
                    unsigned lead = rem.back();
                    if (lead) {
                        std::size_t shift = rem.size() - div.size();
                        for (std::size_t i = 0; i < div.size(); ++i)
                            rem[shift + i] = (rem[shift + i] + p * lead - lead * div[i] % p) % p;
                    }
                    rem.pop_back();
                }
                bool zero = true;
                for (unsigned r : rem)
                    if (r) zero = false;
                if (zero)
                    throw std::invalid_argument("polynomial is reducible; factor " +
                                                poly_to_string(div));
            }
        }
        F.build_tables(coeffs);
    }
    F.verify_axioms();
    return F;
}

}  // namespace arcfact
