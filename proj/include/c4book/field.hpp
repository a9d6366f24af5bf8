#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace c4book {

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p^k), p prime, k >= 1, p^k <= 2^16.
///
/// Elements are encoded as unsigned integers whose base-p digits are the
/// coefficients of the residue polynomial, digit i = coefficient of x^i.
/// For k = 1 this is plain arithmetic mod p. The modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k
/// (coefficient sequences compared low-degree-first), so a (p, k) pair
/// always names the same field.
class Field {
public:
    using Elem = std::uint32_t;

    static Field make(int p, int k);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint32_t order() const { return q_; }

    /// k+1 coefficients, low degree first, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    bool is_valid(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const int> c) const;

    /// Order on elements: coefficient sequences compared low-degree-first.
    bool elem_less(Elem a, Elem b) const;

    /// Inversion routes, exposed so they can be cross-checked; inv() scans
    /// the field for q <= 256 and uses the extended Euclidean algorithm on
    /// polynomials above that.
    Elem inv_by_scan(Elem a) const;
    Elem inv_by_euclid(Elem a) const;

private:
    Field(int p, int k, std::uint32_t q, std::vector<int> modulus)
        : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {}

    int p_;
    int k_;
    std::uint32_t q_;
    std::vector<int> modulus_;
};

/// Factors a prime power q = p^k; throws std::invalid_argument otherwise.
std::pair<int, int> factor_prime_power(std::uint32_t q);

}  // namespace c4book
