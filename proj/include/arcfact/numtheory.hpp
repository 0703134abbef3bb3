#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace arcfact {

bool is_prime(const mpz_class& n);

// largest power of p dividing n (p must be prime, n >= 1)
mpz_class p_part(const mpz_class& n, const mpz_class& p);

// exact prime factorization; trial division up to the configured bound, then
// Pollard rho on the remaining cofactor
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

std::vector<mpz_class> prime_set(const mpz_class& n);

struct FactorialPPart {
    mpz_class value;       // (n!)_p via Legendre's exponent sum
    mpz_class exponent;    // sum of floor(n/p^i)
    bool bound_holds;      // ((n!)_p)^(p-1) < p^n, compared exactly
};
FactorialPPart factorial_p_part(const mpz_class& n, const mpz_class& p);

struct PpdResult {
    mpz_class a;
    unsigned m = 0;
    std::vector<mpz_class> primes;
    // (a,m) = (2,6), or m = 2 with a+1 a power of two
    bool exceptional = false;
};

// primitive prime divisors of (a, m): primes r | a^m - 1 with r not dividing
// a^i - 1 for 0 < i < m; ppd(2,6) = {7} by convention, and the m = 2 cases
// with a+1 a power of two return the empty set
PpdResult ppd(const mpz_class& a, unsigned m);

// multiplicative order of a modulo the prime r
unsigned multiplicative_order(const mpz_class& a, const mpz_class& r, unsigned cap);

}  // namespace arcfact
