#include <random>

#include "doctest.h"
#include "hilbq/qseries.hpp"
#include "hilbq/young.hpp"

using namespace hilbq;

namespace {

QSeries geometric(int order) {
    QSeries s(order);
    for (int i = 0; i <= order; ++i) s.at(i) = 1;
    return s;
}

QSeries one_minus_q(int order) {
    QSeries s = QSeries::one(order);
    s.at(1) = -1;
    return s;
}

QSeries finite_euler_product(int order) {
    QSeries p = QSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        QSeries f = QSeries::one(order);
        f.at(m) = -1;
        p = p * f;
    }
    return p;
}

QSeries random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    QSeries s(order);
    for (int i = 0; i <= order; ++i) {
        Rat c(num(rng), den(rng));
        c.canonicalize();
        s.at(i) = c;
    }
    if (unit && s[0] == 0) s.at(0) = 1;
    return s;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, offset rules") {
    QSeries a = QSeries::one(4);
    a.at(1) = 1;  // 1 + q
    QSeries b = QSeries::one(4);
    b.at(1) = -1;  // 1 - q
    QSeries sum = a + b;
    CHECK(sum[0] == 2);
    for (int i = 1; i <= 4; ++i) CHECK(sum[i] == 0);

    CHECK(a + QSeries(4) == a);

    QSeries off(3, Rat(1, 24));
    off.at(0) = 1;
    QSeries zero = off + (-off);
    CHECK(zero.is_zero());
    CHECK(zero.offset() == Rat(1, 24));

    QSeries other(3, Rat(1, 12));
    CHECK_THROWS_AS(off + other, std::invalid_argument);
}

TEST_CASE("multiplication: geometric inverse, offsets add") {
    QSeries prod = one_minus_q(6) * geometric(6);
    CHECK(prod == QSeries::one(6));

    QSeries a(3, Rat(1, 24));
    a.at(0) = 1;
    QSeries b(3, Rat(-1, 24));
    b.at(0) = 1;
    CHECK((a * b).offset() == 0);
}

TEST_CASE("product of (1-q^m)^{-2} counts pairs of partitions") {
    // Independent oracle: number of pairs of partitions (P1, P2) with
    // |P1| + |P2| = i.
    const int M = 5;
    std::vector<long> expected(M + 1, 0);
    for (int i = 0; i <= M; ++i)
        for (int a = 0; a <= i; ++a) expected[i] += partition_count(a) * partition_count(i - a);
    CHECK(expected == std::vector<long>{1, 2, 5, 10, 20, 36});

    QSeries s = finite_euler_product(M).pow(-2);
    for (int i = 0; i <= M; ++i) CHECK(s[i] == expected[i]);
}

TEST_CASE("inverse: examples and partition oracle") {
    CHECK(one_minus_q(8).inverse() == geometric(8));
    CHECK(QSeries::one(5).inverse() == QSeries::one(5));

    QSeries s = finite_euler_product(5).inverse();
    for (int i = 0; i <= 5; ++i) CHECK(s[i] == partition_count(i));

    CHECK_THROWS_AS(QSeries(3).inverse(), std::domain_error);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        QSeries a = random_series(rng, 8, false);
        QSeries b = random_series(rng, 8, false);
        QSeries c = random_series(rng, 8, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("mul by inverse is one for unit constant term") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        QSeries a = random_series(rng, 10, true);
        QSeries prod = a * a.inverse();
        CHECK(prod == QSeries::one(10));
    }
}

TEST_CASE("truncation takes the min order") {
    QSeries a = geometric(8);
    QSeries b = QSeries::one(5);
    CHECK((a * b).order() == 5);
    CHECK((a + b.with_offset(a.offset())).order() == 5);
    CHECK(a.truncated(3).order() == 3);
}
