#include "arcfact/numtheory.hpp"

#include <stdexcept>

#include "arcfact/config.hpp"

namespace arcfact {

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class p_part(const mpz_class& n, const mpz_class& p) {
    if (n < 1) throw std::invalid_argument("p_part requires n >= 1");
    if (!is_prime(p)) throw std::invalid_argument("p_part requires p prime, got " + p.get_str());
    mpz_class part = 1, rest = n;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        part *= p;
    }
    return part;
}

namespace {

// Pollard rho with Brent cycling; n odd composite, no factors below the
// trial-division bound
mpz_class pollard_rho(const mpz_class& n, unsigned long seed_c) {
    mpz_class x = 2, y = 2, d = 1, c = seed_c;
    auto step = [&](mpz_class v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
        x = step(x);
        y = step(step(y));
        mpz_class diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;  // cycle without factor; retry with new c
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? 0 : d;
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class d = pollard_rho(n, c);
        if (d != 0) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    std::map<mpz_class, unsigned> out;
    mpz_class rest = n;
    const std::uint64_t limit = settings().bounds.trial_division;
    for (mpz_class d = 2; d * d <= rest && d <= static_cast<unsigned long>(limit);
         d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
            out[d] += 1;
            rest /= d;
        }
    }
    if (rest > 1) factor_into(rest, out);
    return out;
}

std::vector<mpz_class> prime_set(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

FactorialPPart factorial_p_part(const mpz_class& n, const mpz_class& p) {
    if (n < 1) throw std::invalid_argument("factorial_p_part requires n >= 1");
    if (!is_prime(p)) throw std::invalid_argument("factorial_p_part requires p prime");
    FactorialPPart out;
    out.exponent = 0;
    mpz_class pk = p;
    while (pk <= n) {
        out.exponent += n / pk;
        pk *= p;
    }
    if (!out.exponent.fits_ulong_p())
        throw std::overflow_error("Legendre exponent too large to materialize");
    mpz_pow_ui(out.value.get_mpz_t(), p.get_mpz_t(), out.exponent.get_ui());
    // ((n!)_p)^(p-1) < p^n, both sides as exact integers
    if (!mpz_class(p - 1).fits_ulong_p() || !n.fits_ulong_p())
        throw std::overflow_error("bound comparison arguments too large");
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), out.value.get_mpz_t(), mpz_class(p - 1).get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), p.get_mpz_t(), n.get_ui());
    out.bound_holds = lhs < rhs;
    return out;
}

unsigned multiplicative_order(const mpz_class& a, const mpz_class& r, unsigned cap) {
    mpz_class x = a % r;
    if (x == 0) throw std::invalid_argument("a divisible by r has no multiplicative order");
    mpz_class acc = x;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc == 1) return k;
        acc = (acc * x) % r;
    }
    return 0;  // order exceeds cap
}

PpdResult ppd(const mpz_class& a, unsigned m) {
    if (a < 2 || m < 2) throw std::invalid_argument("ppd requires a >= 2 and m >= 2");
    PpdResult out;
    out.a = a;
    out.m = m;
    if (a == 2 && m == 6) {
        out.primes = {7};
        out.exceptional = true;
        return out;
    }
    if (m == 2) {
        mpz_class s = a + 1;
        // a+1 a power of two
        if (mpz_popcount(s.get_mpz_t()) == 1) {
            out.exceptional = true;
            return out;
        }
    }
    mpz_class am1;
    mpz_pow_ui(am1.get_mpz_t(), a.get_mpz_t(), m);
    am1 -= 1;
    for (const auto& [r, e] : factorize(am1)) {
        if (multiplicative_order(a, r, m) == m) out.primes.push_back(r);
    }
    return out;
}

}  // namespace arcfact
