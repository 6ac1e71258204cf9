#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "csurg/ding_geiges.hpp"

using namespace csurg;

TEST_CASE("expansion of integers") {
    auto d = dg_expand(Rational(5));
    CHECK(d.k == 1);
    CHECK(d.chain == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(dg_total_stabilizations(d) == 1);
    for (std::int64_t n = 2; n <= 12; ++n) {
        auto e = dg_expand(Rational(n));
        CHECK(e.k == 1);
        std::vector<std::int64_t> want{1};
        for (std::int64_t i = 0; i < n - 2; ++i)
            want.push_back(0);
        CHECK(e.chain == want);
        CHECK(dg_total_stabilizations(e) == 1);
    }
}

TEST_CASE("expansion of 1/m: only push-offs") {
    for (std::int64_t m = 1; m <= 12; ++m) {
        auto d = dg_expand(Rational(1, m));
        CHECK(d.k == m);
        CHECK(d.chain.empty());
        CHECK(dg_total_stabilizations(d) == 0);
    }
}

TEST_CASE("expansion of n + 1/m") {
    auto d = dg_expand(Rational(7, 2));
    CHECK(d.k == 1);
    CHECK(d.chain == std::vector<std::int64_t>{1, 0, 1});
    CHECK(dg_total_stabilizations(d) == 2);

    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t m = 2; m <= 8; ++m) {
            auto e = dg_expand(Rational(n) + Rational(1, m));
            CHECK(e.k == 1);
            std::vector<std::int64_t> want;
            if (n == 1) {
                want = {m};
            } else {
                want.push_back(1);
                for (std::int64_t i = 0; i < n - 2; ++i)
                    want.push_back(0);
                want.push_back(m - 1);
            }
            CHECK(e.chain == want);
            CHECK(dg_total_stabilizations(e) == m);
        }
}

TEST_CASE("domain errors and sign plans") {
    CHECK_THROWS_AS(dg_expand(Rational(-1)), DomainError);
    CHECK_THROWS_AS(dg_expand(Rational(0)), DomainError);
    CHECK_THROWS_AS(dg_expand(Rational::infinity()), DomainError);

    auto d = dg_expand(Rational(7, 2));
    for (const auto& signs : d.signs)
        for (int s : signs)
            CHECK(s == -1);

    auto e = dg_expand(Rational(7, 2), SignPlan::explicit_signs({{+1}, {}, {-1}}));
    CHECK(e.signs[0][0] == +1);
    CHECK_THROWS_AS(dg_expand(Rational(7, 2), SignPlan::explicit_signs({{+1}})), DomainError);
}

TEST_CASE("chain reconstruction identity") {
    for (std::int64_t q = 1; q <= 40; ++q)
        for (std::int64_t p = 1; p <= 120; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            auto d = dg_expand(Rational(p, q));
            if (d.chain.empty()) {
                CHECK(d.k * p == q);
                continue;
            }
            NcfExpansion e;
            for (std::int64_t c : d.chain)
                e.entries.push_back(c + 2);
            CHECK(ncf_eval(e) == Rational(1) + Rational(p, d.k * p - q));
        }
}

TEST_CASE("prefix check examples") {
    CHECK(dg_prefix_check(3, 2, Rational(7, 2)));
    CHECK(dg_prefix_check(1, 3, Rational(29, 21)));
    CHECK(dg_prefix_check(0, 2, Rational(5, 9)));
    CHECK_THROWS_AS(dg_prefix_check(1, 3, Rational(3, 2)), DomainError);
}

TEST_CASE("bracket decomposition") {
    auto b = bracket_of(Rational(7, 2));
    CHECK(b.n == 3);
    CHECK(b.m == 2);
    CHECK(b.exact);
    auto c = bracket_of(Rational(29, 21));
    CHECK(c.n == 1);
    CHECK(c.m == 3);
    CHECK(!c.exact);
    auto i = bracket_of(Rational(4));
    CHECK(i.n == 3);
    CHECK(i.m == 1);
    CHECK(i.exact);
    auto s = bracket_of(Rational(5, 9));
    CHECK(s.n == 0);
    CHECK(s.m == 2);
    CHECK(!s.exact);
}

TEST_CASE("prefix property sweep on a modest grid") {
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t m = 1; m <= 5; ++m) {
            Rational lo = Rational(n) + Rational(1, m);
            Rational hi = (m == 1) ? Rational(n) + Rational(2) : Rational(n) + Rational(1, m - 1);
            for (std::int64_t q = 1; q <= 40; ++q)
                for (std::int64_t p = lo.num() * q / lo.den(); Rational(p, q) < hi; ++p) {
                    if (Rational(p, q) < lo || std::gcd(p, q) != 1)
                        continue;
                    CHECK(dg_prefix_check(n, m, Rational(p, q)));
                }
        }
}
