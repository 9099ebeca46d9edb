#include <doctest.h>

#include <vector>

#include "errors.hpp"
#include "exact_core.hpp"

using namespace cauchy2;

namespace {

ExactRational q(long p, long d = 1) { return ExactRational(BigInt(p), BigInt(d)); }

// Coefficients of x(x+1)...(x+n-1), multiplied out one factor at a time.
std::vector<BigInt> expand_rising(std::size_t n) {
    std::vector<BigInt> poly{1};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] += poly[i] * static_cast<unsigned long>(j);
        }
        poly = std::move(next);
    }
    return poly;
}

// Integral over [0,1] of the expanded polynomial.
ExactRational brute_cauchy(std::size_t n) {
    const auto poly = expand_rising(n);
    ExactRational sum(0);
    for (std::size_t k = 0; k < poly.size(); ++k) sum += ExactRational(poly[k], BigInt(k + 1));
    return sum;
}

} // namespace

TEST_CASE("stirling triangle rows") {
    const auto t0 = build_stirling(0);
    CHECK(t0.n_max() == 0);
    CHECK(t0.at(0, 0) == 1);

    const auto t = build_stirling(12);
    const std::vector<BigInt> row3{0, 2, 3, 1};
    for (std::size_t k = 0; k <= 3; ++k) CHECK(t.at(3, k) == row3[k]);
    for (std::size_t n = 0; n <= 12; ++n) {
        BigInt sum = 0;
        for (const auto& v : t.row(n)) sum += v;
        CHECK(sum == factorial(static_cast<unsigned>(n)));
        const auto brute = expand_rising(n);
        for (std::size_t k = 0; k <= n; ++k) CHECK(t.at(n, k) == brute[k]);
    }
}

TEST_CASE("stirling capacity") {
    CHECK_THROWS_AS(build_stirling(300), CapacityError);
    CHECK(build_stirling(300, 300).n_max() == 300);
}

TEST_CASE("known values by both routes") {
    const std::vector<ExactRational> known{q(1), q(1, 2), q(5, 6), q(9, 4), q(251, 30), q(475, 12), q(19087, 84)};
    const auto tri = build_stirling(6);
    const auto series = cauchy_via_series(6);
    for (std::size_t n = 0; n < known.size(); ++n) {
        CHECK(cauchy_via_stirling(n, tri) == known[n]);
        CHECK(series.c(n) == known[n]);
    }
    CHECK(series.mu(2) == q(5, 12));
    CHECK(cauchy_via_series(0).c(0) == q(1));
}

TEST_CASE("series coefficients") {
    const auto a = series_coefficients(5);
    CHECK(a[0] == q(1));
    CHECK(a[1] == q(1, 2));
    CHECK(a[2] == q(-1, 6));
    CHECK(a[3] == q(1, 12));
    // b_2 by hand: -(a_1 b_1 + a_2 b_0) with b_1 = -1/2
    const ExactRational b1 = -a[1];
    CHECK(-(a[1] * b1 + a[2]) == q(5, 12));
}

TEST_CASE("routes agree with brute-force expansion") {
    const auto tri = build_stirling(40);
    const auto series = cauchy_via_series(40);
    for (std::size_t n = 0; n <= 40; ++n) {
        const auto b = brute_cauchy(n);
        CHECK(cauchy_via_stirling(n, tri) == b);
        CHECK(series.c(n) == b);
    }
}

TEST_CASE("cross-checked table to 200") {
    const auto table = cross_checked_table(200);
    CHECK(table.n_max() == 200);
    const auto tri = build_stirling(200);
    for (std::size_t n : {0u, 1u, 57u, 123u, 199u, 200u}) CHECK(cauchy_via_stirling(n, tri) == table.c(n));
    for (std::size_t n = 0; n <= 200; ++n) {
        CHECK(table.c(n).sign() > 0);
        CHECK(table.mu(n) * ExactRational(factorial(static_cast<unsigned>(n))) == table.c(n));
    }
    // monotone growth from n = 1 on
    for (std::size_t n = 1; n < 200; ++n) CHECK(table.c(n + 1) > table.c(n));
    CHECK_THROWS_AS(static_cast<void>(table.c(201)), CapacityError);
    CHECK_THROWS_AS(cross_checked_table(257), CapacityError);
}

TEST_CASE("from_values rejects non-positive entries") {
    CHECK_THROWS_AS(CauchyTable::from_values({q(1), q(0)}), DomainError);
    CHECK_THROWS_AS(CauchyTable::from_values({q(1), q(-1, 2)}), DomainError);
    CHECK(CauchyTable::from_values({q(1), q(1, 2)}).mu(1) == q(1, 2));
}

TEST_CASE("rising and falling factorials") {
    CHECK(rising_factorial(q(1, 2), 0) == q(1));
    CHECK(rising_factorial(q(1), 4) == q(24));
    CHECK(rising_factorial(q(1, 2), 2) == q(3, 4));
    CHECK(falling_factorial(q(3), 3) == q(6));
    CHECK(falling_factorial(q(1, 2), 2) == q(-1, 4));
    CHECK(falling_factorial(q(0), 0) == q(1));
    // (x)_{n+1} = (x)_n (x+n) and <x>_n = (-1)^n (-x)_n
    for (long p = -5; p <= 5; ++p) {
        const ExactRational x = q(p, 3);
        for (std::size_t n = 0; n < 8; ++n) {
            CHECK(rising_factorial(x, n + 1) == rising_factorial(x, n) * (x + q(static_cast<long>(n))));
            const ExactRational sign = n % 2 == 0 ? q(1) : q(-1);
            CHECK(falling_factorial(x, n) == sign * rising_factorial(-x, n));
        }
    }
}
