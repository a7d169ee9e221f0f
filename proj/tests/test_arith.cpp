#include "doctest.h"
#include "hilbq/arith.hpp"

using namespace hilbq;

TEST_CASE("divisors, phi, mobius on small values") {
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(divisors(3) == std::vector<long>{1, 3});
    CHECK(divisors(6) == std::vector<long>{1, 2, 3, 6});
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});

    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);

    CHECK(mobius(1) == 1);
    CHECK(mobius(3) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("phi is multiplicative via divisor sum identity") {
    // sum_{d|m} phi(d) = m
    for (long m = 1; m <= 60; ++m) {
        long total = 0;
        for (long d : divisors(m)) total += euler_phi(d);
        CHECK(total == m);
    }
}

TEST_CASE("ramanujan sums") {
    // c_m(0) = phi(m)
    for (long m = 1; m <= 12; ++m) CHECK(ramanujan_sum(m, 0) == euler_phi(m));
    // gcd(r, m) = 1 gives mu(m)
    CHECK(ramanujan_sum(5, 2) == mobius(5));
    CHECK(ramanujan_sum(9, 2) == mobius(9));
    CHECK(ramanujan_sum(12, 5) == mobius(12));
    // direct values
    CHECK(ramanujan_sum(3, 1) == -1);
    CHECK(ramanujan_sum(4, 2) == -2);
    CHECK(ramanujan_sum(6, 3) == -2);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // degree is phi(m)
    for (long m = 1; m <= 24; ++m)
        CHECK(static_cast<long>(cyclotomic_poly(m).size()) - 1 == euler_phi(m));
}
