#include <doctest.h>

#include <vector>

#include "fqgeom/gf.hpp"

using namespace fqgeom;

namespace {
const uint32_t kOddPrimes31[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
}

TEST_CASE("field construction accepts odd primes only") {
    CHECK(make_field(7).q() == 7);
    CHECK_THROWS_AS(make_field(9), NotPrimeError);
    CHECK_THROWS_AS(make_field(1), NotPrimeError);
    CHECK_THROWS_AS(make_field(0), NotPrimeError);
    CHECK_THROWS_AS(make_field(2), EvenCharacteristicError);
    CHECK(make_field(10007).q() == 10007);
}

TEST_CASE("legendre symbol against exhaustive squares") {
    PrimeField f(7);
    // squares mod 7: {1, 2, 4}
    CHECK(f.legendre(2) == 1);
    CHECK(f.legendre(3) == -1);
    CHECK(f.legendre(0) == 0);
    for (uint32_t q : kOddPrimes31) {
        PrimeField g(q);
        std::vector<bool> is_sq(q, false);
        for (uint32_t r = 1; r < q; ++r) is_sq[g.mul(r, r)] = true;
        for (uint32_t a = 1; a < q; ++a) CHECK(g.legendre(a) == (is_sq[a] ? 1 : -1));
    }
}

TEST_CASE("legendre multiplicativity, exhaustive for q <= 31") {
    for (uint32_t q : kOddPrimes31) {
        PrimeField f(q);
        for (uint32_t a = 1; a < q; ++a)
            for (uint32_t b = 1; b < q; ++b)
                CHECK(f.legendre(a) * f.legendre(b) == f.legendre(f.mul(a, b)));
    }
}

TEST_CASE("square roots") {
    PrimeField f5(5), f7(7);
    CHECK(f5.sqrt(f5.q() - 1) == 2);  // roots of -1 are {2, 3}; smaller one returned
    CHECK_FALSE(f7.sqrt(f7.q() - 1).has_value());
    CHECK(f5.sqrt(0) == 0u);
    for (uint32_t q : kOddPrimes31) {
        PrimeField f(q);
        for (uint32_t a = 0; a < q; ++a) {
            auto r = f.sqrt(a);
            CHECK(r.has_value() == (f.legendre(a) >= 0));
            if (r) {
                CHECK(f.mul(*r, *r) == a);
                CHECK(*r <= f.neg(*r));  // canonical: the smaller root
            }
        }
    }
}

TEST_CASE("sqrt(-1) exists exactly when q = 1 mod 4") {
    for (uint32_t q = 3; q <= 100; ++q) {
        if (!is_prime_u64(q)) continue;
        PrimeField f(q);
        CHECK(f.sqrt_minus_one().has_value() == (q % 4 == 1));
    }
}

TEST_CASE("field element arithmetic") {
    PrimeField f(11);
    FieldElement a(f, 7), b(f, 9);
    CHECK((a + b).value() == 5);
    CHECK((a - b).value() == 9);
    CHECK((a * b).value() == 8);  // 63 mod 11
    CHECK((a / b).value() == 2);  // 7 * 9^{-1} = 7 * 5 = 35 = 2
    CHECK((-a).value() == 4);
    CHECK(FieldElement(f, -4) == FieldElement(f, 7));
    CHECK_THROWS_AS(a / FieldElement(f, 0), Error);
    PrimeField g(7);
    CHECK_THROWS_AS(a + FieldElement(g, 1), Error);
}

TEST_CASE("inverse and power") {
    for (uint32_t q : {5u, 13u, 31u}) {
        PrimeField f(q);
        for (uint32_t a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.mul(2, f.half()) == 1);
    }
}
