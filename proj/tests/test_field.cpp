#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "c4book/field.hpp"

using c4book::Field;

namespace {

// Oracle: polynomial irreducibility over GF(p) by exhaustive root /
// divisor search, written without reference to the Field internals.
bool irreducible_oracle(int p, const std::vector<int>& poly) {
    int k = static_cast<int>(poly.size()) - 1;
    if (k < 1) return false;
    // try all monic divisors of degree 1..k/2
    auto eval_division = [&](const std::vector<int>& div) {
        // returns true if div divides poly over GF(p)
        std::vector<int> rem = poly;
        int dk = static_cast<int>(div.size()) - 1;
        for (int i = static_cast<int>(rem.size()) - 1; i >= dk; --i) {
            int c = rem[i] % p;
            if (c == 0) continue;
            for (int j = 0; j <= dk; ++j)
                rem[i - dk + j] = ((rem[i - dk + j] - c * div[j]) % p + p * p) % p;
        }
        for (int j = 0; j < dk; ++j)
            if (rem[j] % p != 0) return false;
        return true;
    };
    for (int d = 1; d <= k / 2; ++d) {
        // all monic polynomials of degree d
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> div(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (eval_division(div)) return false;
        }
    }
    return true;
}

bool poly_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

TEST_CASE("primality") {
    // oracle: trial division
    auto slow = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(c4book::is_prime(n) == slow(n));
    CHECK(c4book::is_prime(65521));
    CHECK(!c4book::is_prime(65535));
    CHECK(c4book::is_prime(2147483647ull));
    CHECK(!c4book::is_prime(2147483647ull * 2147483647ull));
}

TEST_CASE("prime power factorization") {
    CHECK(c4book::factor_prime_power(2) == std::pair(2, 1));
    CHECK(c4book::factor_prime_power(8) == std::pair(2, 3));
    CHECK(c4book::factor_prime_power(9) == std::pair(3, 2));
    CHECK(c4book::factor_prime_power(101) == std::pair(101, 1));
    CHECK(c4book::factor_prime_power(16384) == std::pair(2, 14));
    CHECK_THROWS_AS(c4book::factor_prime_power(1), std::invalid_argument);
    CHECK_THROWS_AS(c4book::factor_prime_power(6), std::invalid_argument);
    CHECK_THROWS_AS(c4book::factor_prime_power(100), std::invalid_argument);
    CHECK_THROWS_AS(c4book::factor_prime_power(0), std::invalid_argument);
}

TEST_CASE("modulus is the smallest monic irreducible") {
    // frozen small cases (low-degree-first coefficient lists)
    CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field::make(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});
    CHECK(Field::make(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1});
    CHECK(Field::make(5, 1).modulus() == std::vector<int>{0, 1});

    // property against the oracle: irreducible, and nothing smaller is
    for (auto [p, k] : {std::pair(2, 4), std::pair(3, 3), std::pair(5, 2), std::pair(7, 2)}) {
        Field f = Field::make(p, k);
        const auto& mod = f.modulus();
        REQUIRE(static_cast<int>(mod.size()) == k + 1);
        CHECK(mod[k] == 1);
        CHECK(irreducible_oracle(p, mod));
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> cand(k + 1, 0);
            long long c = code;
            for (int i = 0; i < k; ++i) {
                cand[i] = static_cast<int>(c % p);
                c /= p;
            }
            cand[k] = 1;
            if (poly_less(cand, mod)) CHECK(!irreducible_oracle(p, cand));
        }
    }
}

TEST_CASE("field axioms by exhaustive check on small fields") {
    for (auto [p, k] : {std::pair(2, 1), std::pair(2, 2), std::pair(3, 1), std::pair(2, 3),
                        std::pair(3, 2), std::pair(2, 4), std::pair(13, 1)}) {
        Field f = Field::make(p, k);
        std::uint32_t q = f.order();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.pow(a, q - 1) == f.one());
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms by random sampling on larger fields") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair(2, 8), std::pair(3, 5), std::pair(251, 1), std::pair(2, 13),
                        std::pair(5, 4)}) {
        Field f = Field::make(p, k);
        std::uint32_t q = f.order();
        for (int trial = 0; trial < 2000; ++trial) {
            auto a = static_cast<Field::Elem>(rng() % q);
            auto b = static_cast<Field::Elem>(rng() % q);
            auto c = static_cast<Field::Elem>(rng() % q);
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.sub(f.add(a, b), b) == a);
            if (a != 0) CHECK(f.mul(f.inv(a), f.mul(a, b)) == b);
        }
        if (q > 1) CHECK(f.pow(static_cast<Field::Elem>(1 + rng() % (q - 1)), q - 1) == f.one());
    }
}

TEST_CASE("both inversion routes agree") {
    for (auto [p, k] : {std::pair(11, 2), std::pair(2, 7), std::pair(2, 9), std::pair(257, 1)}) {
        Field f = Field::make(p, k);
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            auto s = f.inv_by_scan(a);
            CHECK(s == f.inv_by_euclid(a));
            CHECK(f.mul(a, s) == f.one());
        }
    }
}

TEST_CASE("coefficient round-trip and element order") {
    Field f = Field::make(3, 3);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
        auto c = f.coeffs(a);
        REQUIRE(c.size() == 3);
        CHECK(f.from_coeffs(c) == a);
    }
    // elem_less is a strict total order
    int less_count = 0;
    for (std::uint32_t a = 0; a < f.order(); ++a)
        for (std::uint32_t b = 0; b < f.order(); ++b) {
            if (a == b) CHECK(!f.elem_less(a, b));
            if (f.elem_less(a, b)) {
                CHECK(!f.elem_less(b, a));
                ++less_count;
            }
        }
    CHECK(less_count == 27 * 26 / 2);
}

TEST_CASE("make rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);  // 2^17 > 2^16
    CHECK_THROWS_AS(Field::make(257, 2), std::invalid_argument);
}
