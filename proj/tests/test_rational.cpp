#include <doctest.h>

#include "errors.hpp"
#include "rational.hpp"

using namespace cauchy2;

namespace {
ExactRational q(long p, long d = 1) { return ExactRational(BigInt(p), BigInt(d)); }
}

TEST_CASE("parsing") {
    CHECK(ExactRational::parse("3") == q(3));
    CHECK(ExactRational::parse("-6/8") == q(-3, 4));
    CHECK(ExactRational::parse("0.5") == q(1, 2));
    CHECK(ExactRational::parse("-0.125") == q(-1, 8));
    CHECK(ExactRational::parse("1e-3") == q(1, 1000));
    CHECK(ExactRational::parse("2.5E2") == q(250));
    CHECK(ExactRational::parse("1e-20") == ExactRational(BigInt(1), BigInt("100000000000000000000")));
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "0x10"})
        CHECK_THROWS_AS(ExactRational::parse(bad), ParseError);
    CHECK(ExactRational::parse(" 7 ") == q(7));
}

TEST_CASE("rendering") {
    CHECK(q(6, 8).to_string() == "3/4");
    CHECK(q(-4, 2).to_string() == "-2");
    CHECK(q(1, 3).to_decimal(5) == "3.3333e-1");
    CHECK(q(0).to_decimal(5) == "0");
}

TEST_CASE("arithmetic") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(abs(q(-2, 3)) == q(2, 3));
    CHECK(q(1, 3) < q(1, 2));
    CHECK_THROWS_AS(q(1) / q(0), DomainError);
    CHECK(factorial(10) == 3628800);
}
