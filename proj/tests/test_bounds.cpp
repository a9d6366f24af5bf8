#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "c4book/bounds.hpp"

using namespace c4book;

TEST_CASE("integer square root") {
    for (long long n = 0; n <= 100000; ++n) {
        long long r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(999999999999999999LL) == 999999999);
}

TEST_CASE("two-star upper bound values") {
    CHECK(frs_upper(1) == 6);
    CHECK(frs_upper(7) == 16);
    CHECK(frs_upper(13) == 24);
    CHECK(frs_g(13) == 18);
    // simplified closed form never under-cuts the iterated one
    for (long long n = 1; n <= 5000; ++n) {
        CHECK(frs_upper(n) <= frs_upper_simplified(n));
        CHECK(frs_upper_simplified(n) - frs_upper(n) <= 2);
    }
}

TEST_CASE("quadratic-family upper bound values") {
    CHECK(theorem2_upper(7) == 16);
    CHECK(theorem2_upper(10) == 19);
    CHECK(theorem2_upper(16) == 27);
    // brute-force oracle over the full (m, t) grid
    for (long long n = 1; n <= 3000; ++n) {
        long long best = -1;
        for (long long m = 4; m * m <= n + 200; ++m)
            for (long long t = 0; t <= m - 1; ++t)
                if ((m - 1) * (m - 1) + (t - 2) >= n && (best < 0 || m * m + t < best))
                    best = m * m + t;
        auto got = theorem2_upper(n);
        if (best >= 0 && best <= frs_upper(n)) {
            REQUIRE(got.has_value());
            CHECK(*got == best);
        } else {
            CHECK(!got.has_value());
        }
    }
}

TEST_CASE("star bound values") {
    CHECK(parsons_star_upper(10) == 14);
    CHECK(parsons_star_upper(9) == 13);
    CHECK(parsons_star_upper(2) == 4);  // 2 = 1^2+1, discounted case
    CHECK(parsons_star_upper(5) == 8);  // 5 = 2^2+1, discounted case
    CHECK(parsons_star_upper(17) == 22);
    for (long long n = 2; n <= 10000; ++n) {
        long long base = n + isqrt(n - 1) + 2;
        long long r = isqrt(n - 1);
        bool square_plus_one = r * r == n - 1;
        CHECK(parsons_star_upper(n) == base - (square_plus_one ? 1 : 0));
    }
}

TEST_CASE("probabilistic lower bound values") {
    CHECK(lemma1_m(1000000) == 774);
    CHECK(lemma1_lower(1000000) == 1001548);
    CHECK(lemma1_m(10000) == 32);
    CHECK(lemma1_lower(10000) == 10064);
    CHECK(!lemma1_m(100).has_value());
    CHECK(!lemma1_lower(100).has_value());
    // against a direct floating-point evaluation, allowing the one-off the
    // sound-side rounding may introduce near ties
    for (long long n = 2000; n <= 200000; n += 997) {
        double v = std::sqrt(static_cast<double>(n)) - 6 * std::pow(static_cast<double>(n), 0.2625);
        auto m = lemma1_m(n);
        if (v >= 1) {
            REQUIRE(m.has_value());
            CHECK(*m <= static_cast<long long>(std::floor(v)));
            CHECK(*m >= static_cast<long long>(std::floor(v)) - 1);
            CHECK(lemma1_lower(n) == n + 2 * *m);
        }
    }
}

TEST_CASE("small-case table sits inside every formula bound") {
    const long long table[15] = {0, 7, 7, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 22, 24};
    for (long long n = 1; n <= 14; ++n) {
        BoundsRecord b = best_known(n);
        CHECK(b.n == n);
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == table[n]);
        CHECK(b.lower == table[n]);
        CHECK(b.upper == table[n]);
        // the iterated-star formula is only a valid bound from n = 2 on
        // (at n = 1 it evaluates to 6 while the true value is 7)
        if (n >= 2) CHECK(table[n] <= frs_upper(n));
        if (auto t2 = theorem2_upper(n)) CHECK(table[n] <= *t2);
    }
}

TEST_CASE("best_known invariants over a wide range") {
    for (long long n = 1; n <= 4000; ++n) {
        BoundsRecord b = best_known(n);
        CHECK(b.lower <= b.upper);
        CHECK(b.lower >= n + 2);  // trivial witness: empty graph on n+1 vertices
        long long u = frs_upper(n);
        if (auto t2 = theorem2_upper(n)) u = std::min(u, *t2);
        if (b.exact) {
            CHECK(b.lower == *b.exact);
            CHECK(b.upper == *b.exact);
            if (n >= 2) CHECK(*b.exact <= u);
        } else {
            CHECK(b.upper == u);
        }
        CHECK(!b.to_text().empty());
        CHECK(!b.to_machine_line().empty());
    }
}

TEST_CASE("construction-certified exact values appear") {
    // q = 4, t = 3: n = 10, value 19
    BoundsRecord b = best_known(10);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == 19);
    // q = 13, t = 12: n = 154, value 181
    BoundsRecord big = best_known(154);
    REQUIRE(big.exact.has_value());
    CHECK(*big.exact == 181);
    // n = 149 would need t = 7 for q = 13, which the odd family excludes
    CHECK(!best_known(149).exact.has_value());
}

TEST_CASE("machine line is stable") {
    CHECK(best_known(7).to_machine_line() == best_known(7).to_machine_line());
}
