#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riocirc/errors.hpp"
#include "riocirc/riordan.hpp"
#include "support.hpp"

using namespace riocirc;
using namespace riocirc::testing;

namespace {

RiordanArray golden_15() {
    return build(parse_poly("1,5"), 7, 7);
}

void check_rows(const RiordanArray& arr, const std::vector<std::vector<std::string>>& expected) {
    REQUIRE(arr.rows >= expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(arr.cols >= expected[i].size());
        for (std::size_t k = 0; k < expected[i].size(); ++k) {
            INFO("entry (", i, ",", k, ")");
            CHECK(arr.at(i, k) == Rational::parse(expected[i][k]));
        }
    }
}

}  // namespace

TEST_CASE("7x7 window for p = 1+5t") {
    check_rows(golden_15(), {
        {"1", "0", "0", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0", "0", "0"},
        {"1", "5", "1", "0", "0", "0", "0"},
        {"0", "1", "10", "1", "0", "0", "0"},
        {"1", "5", "26", "15", "1", "0", "0"},
        {"0", "1", "10", "76", "20", "1", "0"},
        {"1", "5", "26", "140", "151", "25", "1"},
    });
}

TEST_CASE("7x7 window for p = 1/2 - t/2") {
    check_rows(build(parse_poly("1/2,-1/2"), 7, 7), {
        {"1", "0", "0", "0", "0", "0", "0"},
        {"0", "1/2", "0", "0", "0", "0", "0"},
        {"1", "-1/2", "1/4", "0", "0", "0", "0"},
        {"0", "1/2", "-1/2", "1/8", "0", "0", "0"},
        {"1", "-1/2", "1/2", "-3/8", "1/16", "0", "0"},
        {"0", "1/2", "-1/2", "1/2", "-1/4", "1/32", "0"},
        {"1", "-1/2", "1/2", "-1/2", "7/16", "-5/32", "1/64"},
    });
}

TEST_CASE("10x6 window for p = (-1+2t+2t^2)/3") {
    check_rows(build(parse_poly("-1/3,2/3,2/3"), 10, 6), {
        {"1", "0", "0", "0", "0", "0"},
        {"0", "-1/3", "0", "0", "0", "0"},
        {"0", "2/3", "1/9", "0", "0", "0"},
        {"1", "2/3", "-4/9", "-1/27", "0", "0"},
        {"0", "-1/3", "0", "2/9", "1/81", "0"},
        {"0", "2/3", "1", "-2/9", "-8/81", "-1/243"},
        {"1", "2/3", "0", "-17/27", "16/81", "10/243"},
        {"0", "-1/3", "0", "2/3", "17/81", "-10/81"},
        {"0", "2/3", "1", "2/3", "-64/81", "-1/243"},
        {"1", "2/3", "0", "-1/3", "-16/81", "130/243"},
    });
}

TEST_CASE("column generating functions") {
    const auto col3 = column_gf(parse_poly("1,5"), 3, 10);
    const std::vector<long> expected = {0, 0, 0, 1, 15, 76, 140, 76, 140, 76};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(col3.coeff(i) == Rational(expected[i]));

    const auto col2 = column_gf(parse_poly("7"), 2, 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(col2.coeff(i) == (i >= 2 ? Rational(49) : Rational(0)));

    const auto col0 = column_gf(parse_poly("-2,0,0,1"), 0, 9);
    CHECK(col0 == geometric(3, 9));

    CHECK_THROWS_AS(column_gf(parse_poly("0,1"), 1, 5), ImproperArrayError);
}

TEST_CASE("periodic blocks") {
    const auto arr = build(parse_poly("1,5"), 12, 6);
    CHECK(periodic_block(arr, 1) == std::vector<Rational>{Rational(1), Rational(5)});
    CHECK(periodic_block(arr, 3) == std::vector<Rational>{Rational(76), Rational(140)});

    const auto vper = build(parse_poly("1/2,-1/2"), 8, 5);
    CHECK(periodic_block(vper, 2) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});

    CHECK_THROWS_AS(periodic_block(arr, 0), DomainError);
    CHECK_THROWS_AS(periodic_block(build(parse_poly("1,5"), 4, 4), 3), TruncationError);
}

TEST_CASE("eventual periodicity: examples") {
    const PeriodReport r = verify_theorem1(parse_poly("1,5"), 3, 3);
    CHECK(r.start == 5);
    CHECK(r.period == 2);
    CHECK(r.block == std::vector<Rational>{Rational(76), Rational(140)});
    CHECK(r.prime_period == 2);

    // Constant p: period 1 blocks (a^k).
    const PeriodReport rc = verify_theorem1(parse_poly("3"), 4, 3);
    CHECK(rc.period == 1);
    CHECK(rc.prime_period == 1);
    CHECK(rc.block == std::vector<Rational>{Rational(81)});

    CHECK_THROWS_AS(verify_theorem1(parse_poly("1,5"), 3, 1), DomainError);
    CHECK_THROWS_AS(verify_theorem1(parse_poly("0,1"), 1, 2), ImproperArrayError);
}

TEST_CASE("eventual periodicity holds for 100 random polynomials") {
    auto rng = make_rng(2024);
    for (int i = 0; i < 100; ++i) {
        const RationalPoly p = random_proper_poly(rng, 1, 4, -3, 3);
        const std::size_t k = uniform_size(rng, 1, 8);
        const PeriodReport r = verify_theorem1(p, k, 3);
        CHECK(r.period == p.degree() + 1);
        CHECK(r.period % r.prime_period == 0);
    }
}

TEST_CASE("diagonal and sub-diagonal laws") {
    auto rng = make_rng(7);
    for (int i = 0; i < 10; ++i) {
        const RationalPoly p = random_proper_poly(rng, 1, 4, -3, 3);
        const auto arr = build(p, 9, 9);
        for (std::size_t k = 0; k < 9; ++k) {
            CHECK(arr.at(k, k) == p.coeff(0).pow(static_cast<long>(k)));
            for (std::size_t i2 = 0; i2 < k; ++i2) CHECK(arr.at(i2, k).is_zero());
        }
    }
}

TEST_CASE("column recurrence: column k+1 = column k times t p(t)") {
    auto rng = make_rng(31);
    for (int i = 0; i < 10; ++i) {
        const RationalPoly p = random_proper_poly(rng, 1, 3, -3, 3);
        const std::size_t rows = 14;
        const auto tp = tp_series(p, rows);
        for (std::size_t k = 0; k + 1 < 6; ++k) {
            const auto lhs = column_gf(p, k + 1, rows);
            const auto rhs = column_gf(p, k, rows) * tp;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("head sums match the worked tables") {
    const auto sums_half = head_sums(parse_poly("1/2,-1/2"), 7);
    const std::vector<std::string> expected_half = {"0", "1/4", "-1/4", "1/4", "-1/4", "1/4",
                                                    "-1/4"};
    for (std::size_t k = 1; k <= 7; ++k) CHECK(sums_half[k - 1] == Rational::parse(expected_half[k - 1]));

    const auto sums_neg = head_sums(parse_poly("-1/2,-1/2"), 7);
    const std::vector<std::string> expected_neg = {"0", "1/4", "-1/2", "3/4", "-1", "5/4", "-3/2"};
    for (std::size_t k = 1; k <= 7; ++k) CHECK(sums_neg[k - 1] == Rational::parse(expected_neg[k - 1]));

    const auto sums_q = head_sums(parse_poly("-1/3,2/3,2/3"), 4);
    CHECK(sums_q[1] == Rational(-1, 3));
    CHECK(sums_q[2] == Rational(-2, 3));
    CHECK(sums_q[3] == Rational(-2, 3));
}

TEST_CASE("head sums of p = 1/2 - t/2 alternate as (-1)^k/4") {
    const auto sums = head_sums(parse_poly("1/2,-1/2"), 12);
    for (std::size_t k = 2; k <= 12; ++k) {
        const Rational expected = k % 2 == 0 ? Rational(1, 4) : Rational(-1, 4);
        CHECK(sums[k - 1] == expected);
    }
}

TEST_CASE("window bounds are enforced") {
    const auto arr = golden_15();
    CHECK_THROWS_AS(arr.at(7, 0), TruncationError);
    CHECK_THROWS_AS(head_sum(arr, 0), DomainError);
    CHECK_THROWS_AS(head_sum(arr, 7), TruncationError);
    CHECK_THROWS_AS(build(parse_poly("1,5"), 0, 3), DomainError);
}
