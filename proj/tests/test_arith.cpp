#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "csurg/ncf.hpp"
#include "csurg/rational.hpp"

using namespace csurg;

TEST_CASE("rational normalisation and parsing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(3, -2) == Rational(-3, 2));
    CHECK(Rational::parse("7/2").str() == "7/2");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("inf").is_infinite());
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("infinity sits above every finite rational") {
    Rational inf = Rational::infinity();
    CHECK(Rational(1000000) < inf);
    CHECK(!(inf < inf));
    CHECK_THROWS_AS(inf + Rational(1), DomainError);
    CHECK_THROWS_AS(inf.floor(), DomainError);
}

TEST_CASE("floor and ceil on both signs") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("ncf_expand examples") {
    CHECK(ncf_expand(Rational(2)).entries == std::vector<std::int64_t>{2});
    CHECK(ncf_expand(Rational(5)).entries == std::vector<std::int64_t>{5});
    CHECK(ncf_expand(Rational(12, 5)).entries == std::vector<std::int64_t>{3, 2, 3});
    CHECK_THROWS_AS(ncf_expand(Rational(3, 2)), DomainError);
    CHECK_THROWS_AS(ncf_expand(Rational::infinity()), DomainError);
}

TEST_CASE("ncf_eval examples") {
    CHECK(ncf_eval(NcfExpansion({2})) == Rational(2));
    CHECK(ncf_eval(NcfExpansion({3, 2, 3})) == Rational(12, 5));
    CHECK(ncf_eval(NcfExpansion({3, 2, 2, 2})) == Rational(9, 4));
    CHECK_THROWS_AS(ncf_eval(NcfExpansion{}), DomainError);
    CHECK_THROWS_AS(NcfExpansion({3, 1}), DomainError);
}

TEST_CASE("ncf prefix") {
    CHECK(ncf_is_prefix(NcfExpansion({3}), NcfExpansion({3, 2, 3})));
    CHECK(!ncf_is_prefix(NcfExpansion({3, 2, 3}), NcfExpansion({3, 2})));
    CHECK(ncf_is_prefix(NcfExpansion{}, NcfExpansion({5})));
}

TEST_CASE("round trip, entry and length bounds on a modest grid") {
    for (std::int64_t q = 1; q <= 60; ++q) {
        for (std::int64_t p = 2 * q; p <= 20 * q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            Rational r(p, q);
            NcfExpansion e = ncf_expand(r);
            CHECK(ncf_eval(e) == r);
            CHECK(e.entries.front() == r.ceil());
            CHECK(static_cast<std::int64_t>(e.size()) <= q);
            for (std::int64_t a : e.entries)
                CHECK(a >= 2);
        }
    }
}
