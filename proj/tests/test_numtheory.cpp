#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcfact/numtheory.hpp"

using namespace arcfact;

TEST_CASE("p_part") {
    CHECK(p_part(12, 2) == 4);
    CHECK(p_part(1, 7) == 1);
    CHECK(p_part(95040, 3) == 27);
    CHECK_THROWS_AS(p_part(12, 4), std::invalid_argument);
    CHECK_THROWS_AS(p_part(0, 2), std::invalid_argument);
    // cofactor is coprime to p
    for (unsigned long n : {12ul, 95040ul, 360ul, 1ul, 1024ul})
        for (unsigned long p : {2ul, 3ul, 5ul, 11ul}) {
            mpz_class part = p_part(n, p);
            mpz_class cof = mpz_class(n) / part;
            CHECK(part * cof == n);
            CHECK(cof % p != 0);
        }
}

TEST_CASE("prime sets") {
    auto ps = prime_set(360);
    CHECK(ps == std::vector<mpz_class>{2, 3, 5});
    CHECK(prime_set(1).empty());
    CHECK(prime_set(95040) == std::vector<mpz_class>{2, 3, 5, 11});
    // a case that needs the rho fallback: product of two primes above the
    // trial bound
    mpz_class big = mpz_class(1000003) * 1000033;
    CHECK(prime_set(big) == std::vector<mpz_class>{1000003, 1000033});
}

TEST_CASE("factorial p-parts via the exponent formula") {
    auto r = factorial_p_part(6, 2);
    CHECK(r.value == 16);
    CHECK(r.exponent == 4);
    CHECK(r.bound_holds);
    CHECK(factorial_p_part(1, 5).value == 1);
    auto r2 = factorial_p_part(10, 3);
    CHECK(r2.value == 81);
    CHECK(r2.exponent == 4);
    CHECK(r2.bound_holds);

    // oracle: exponent equals the summed multiplicity over 1..n
    for (unsigned n : {1u, 6u, 10u, 30u, 97u})
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            unsigned long mult = 0;
            for (unsigned i = 1; i <= n; ++i) {
                unsigned v = i;
                while (v % p == 0) {
                    v /= p;
                    ++mult;
                }
            }
            CHECK(factorial_p_part(n, p).exponent == mult);
        }
}

TEST_CASE("primitive prime divisors") {
    PpdResult a = ppd(2, 6);
    CHECK(a.primes == std::vector<mpz_class>{7});
    CHECK(a.exceptional);

    PpdResult b = ppd(3, 2);
    CHECK(b.primes.empty());
    CHECK(b.exceptional);

    PpdResult c = ppd(2, 10);
    CHECK(c.primes == std::vector<mpz_class>{11});
    CHECK_FALSE(c.exceptional);

    CHECK(ppd(2, 4).primes == std::vector<mpz_class>{5});
    CHECK(ppd(7, 2).primes == std::vector<mpz_class>{});  // 7+1 = 2^3
    CHECK(ppd(4, 3).primes == std::vector<mpz_class>{7});
    CHECK_THROWS_AS(ppd(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(ppd(5, 1), std::invalid_argument);
}

TEST_CASE("ppd battery satisfies the definition") {
    for (unsigned a = 2; a <= 10; ++a)
        for (unsigned m = 2; m <= 12; ++m) {
            PpdResult r = ppd(a, m);
            mpz_class am1;
            mpz_pow_ui(am1.get_mpz_t(), mpz_class(a).get_mpz_t(), m);
            am1 -= 1;
            for (const mpz_class& p : r.primes) {
                CHECK(is_prime(p));
                CHECK(mpz_divisible_p(am1.get_mpz_t(), p.get_mpz_t()) != 0);
                CHECK(p % m == 1);
                CHECK(p > m);
                if (!(a == 2 && m == 6))
                    for (unsigned i = 1; i < m; ++i) {
                        mpz_class ai1;
                        mpz_pow_ui(ai1.get_mpz_t(), mpz_class(a).get_mpz_t(), i);
                        ai1 -= 1;
                        CHECK(mpz_divisible_p(ai1.get_mpz_t(), p.get_mpz_t()) == 0);
                    }
            }
            if (r.primes.empty())
                CHECK(r.exceptional);
        }
}

TEST_CASE("legendre bound sample") {
    for (unsigned n : {1u, 2u, 17u, 100u, 300u})
        for (unsigned p : {2u, 3u, 53u, 97u})
            CHECK(factorial_p_part(n, p).bound_holds);
}
