#include "c4book/field.hpp"

#include <algorithm>

namespace c4book {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin, valid for all 64-bit n with these bases.
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& f, const Poly& g, int p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    trim(r);
    return r;
}

int inv_mod_p(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::logic_error("inv_mod_p: not invertible");
}

// f mod g, g nonzero.
Poly poly_mod(Poly f, const Poly& g, int p) {
    trim(f);
    int gi = inv_mod_p(g.back(), p);
    while (deg(f) >= deg(g)) {
        int shift = deg(f) - deg(g);
        int c = f.back() * gi % p;
        for (std::size_t i = 0; i < g.size(); ++i) {
            int& t = f[i + shift];
            t = ((t - c * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, int p) {
    return poly_mod(f, g, p).empty();
}

// No monic divisor of degree 1..k/2 means irreducible (degree >= 1).
bool is_irreducible(const Poly& f, int p) {
    int k = deg(f);
    for (int dd = 1; dd <= k / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(dd + 1, 0);
            std::uint64_t t = v;
            for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
            g[dd] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::make(int p, int k) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("Field::make: p must be prime");
    if (k < 1) throw std::invalid_argument("Field::make: k must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > (1ull << 16)) throw std::invalid_argument("Field::make: p^k exceeds 2^16");
    }
    // Lexicographically smallest monic irreducible of degree k, coefficient
    // sequences (c0, ..., c_{k-1}) compared low-degree-first.
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f(k + 1, 0);
        std::uint64_t t = v;
        for (int i = k - 1; i >= 0; --i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[k] = 1;
        if (is_irreducible(f, p))
            return Field(p, k, static_cast<std::uint32_t>(q), f);
    }
    throw std::logic_error("Field::make: no irreducible polynomial found");
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (k_ == 1) return (a + b) % static_cast<std::uint32_t>(p_);
    Elem r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += (da + db) % p_ * scale;
        scale *= p_;
    }
    return r;
}

Field::Elem Field::neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_) - a;
    Elem r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_;
        a /= p_;
        r += (da == 0 ? 0 : p_ - da) * scale;
        scale *= p_;
    }
    return r;
}

Field::Elem Field::mul(Elem a, Elem b) const {
    if (k_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    int da[17] = {0}, db[17] = {0}, prod[33] = {0};
    for (int i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; }
    for (int i = 0; i < k_; ++i) { db[i] = b % p_; b /= p_; }
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // Reduce modulo the monic field modulus.
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) {
            int& t = prod[d - k_ + i];
            t = ((t - c * modulus_[i]) % p_ + p_) % p_;
        }
    }
    Elem r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) { r += prod[i] * scale; scale *= p_; }
    return r;
}

Field::Elem Field::inv_by_scan(Elem a) const {
    if (a == 0) throw std::domain_error("Field::inv: division by zero");
    for (Elem x = 1; x < q_; ++x)
        if (mul(a, x) == 1) return x;
    throw std::logic_error("Field::inv_by_scan: no inverse found");
}

Field::Elem Field::inv_by_euclid(Elem a) const {
    if (a == 0) throw std::domain_error("Field::inv: division by zero");
    if (k_ == 1) {
        // Integer extended Euclid mod p.
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t qq = r / nr;
            std::int64_t tmp = t - qq * nt; t = nt; nt = tmp;
            tmp = r - qq * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    // Extended Euclid on polynomials over GF(p).
    Poly r0 = modulus_, r1 = coeffs(a);
    trim(r1);
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // Divide r0 by r1: quotient q, remainder r0 - q*r1.
        Poly quo(std::max<int>(deg(r0) - deg(r1) + 1, 0), 0);
        Poly rem = r0;
        int li = inv_mod_p(r1.back(), p_);
        while (deg(rem) >= deg(r1)) {
            int shift = deg(rem) - deg(r1);
            int c = rem.back() * li % p_;
            quo[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                int& v = rem[i + shift];
                v = ((v - c * r1[i]) % p_ + p_) % p_;
            }
            trim(rem);
        }
        Poly qt = poly_mul(quo, t1, p_);
        Poly nt(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            int v = (i < t0.size() ? t0[i] : 0) - (i < qt.size() ? qt[i] : 0);
            nt[i] = (v % p_ + p_) % p_;
        }
        trim(nt);
        r0 = r1; r1 = rem;
        t0 = t1; t1 = nt;
    }
    // r0 is the gcd, a nonzero constant; scale t0 by its inverse.
    int c = inv_mod_p(r0[0], p_);
    Poly res(k_, 0);
    for (std::size_t i = 0; i < t0.size(); ++i) res[i] = t0[i] * c % p_;
    return from_coeffs(res);
}

Field::Elem Field::inv(Elem a) const {
    return q_ <= 256 ? inv_by_scan(a) : inv_by_euclid(a);
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) { c[i] = static_cast<int>(a % p_); a /= p_; }
    return c;
}

Field::Elem Field::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != k_)
        throw std::invalid_argument("Field::from_coeffs: wrong coefficient count");
    Elem r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        if (c[i] < 0 || c[i] >= p_)
            throw std::invalid_argument("Field::from_coeffs: coefficient out of range");
        r += static_cast<Elem>(c[i]) * scale;
        scale *= p_;
    }
    return r;
}

bool Field::elem_less(Elem a, Elem b) const {
    if (k_ == 1) return a < b;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

std::pair<int, int> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power");
    for (int p = 2; static_cast<std::uint32_t>(p) <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("not a prime power");
        std::uint32_t r = q;
        int k = 0;
        while (r % p == 0) { r /= p; ++k; }
        if (r != 1) throw std::invalid_argument("not a prime power");
        return {p, k};
    }
    throw std::invalid_argument("not a prime power");
}

}  // namespace c4book
