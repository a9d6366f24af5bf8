#pragma once

#include <optional>
#include <string>

namespace c4book {

long long isqrt(long long n);

/// g(n) = n + floor(sqrt(n-1)) + 2 and the FRS upper bound g(g(n)).
long long frs_g(long long n);
long long frs_upper(long long n);
/// The simplified form n + 2*floor(sqrt(n)) + 5, kept for cross-checking.
long long frs_upper_simplified(long long n);

/// min over m >= 4, 0 <= t <= m-1, (m-1)^2+(t-2) >= n of m^2+t, when that
/// minimum does not exceed frs_upper(n); nullopt otherwise (not applicable).
std::optional<long long> theorem2_upper(long long n);

/// Parsons: r(C4,K_{1,n}) <= n + floor(sqrt(n-1)) + 2, minus one more when
/// n = k^2+1. Requires n >= 2.
long long parsons_star_upper(long long n);

/// floor(sqrt(n) - 6*n^0.2625), computed from an interval that errs to the
/// smaller (sound) side; nullopt when the floor is <= 0.
std::optional<long long> lemma1_m(long long n);
/// n + 2*lemma1_m(n); nullopt when vacuous.
std::optional<long long> lemma1_lower(long long n);

struct BoundsRecord {
    long long n = 0;
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    std::string lower_provenance;
    std::string upper_provenance;
    std::string exact_provenance;

    std::string to_text() const;
    std::string to_machine_line() const;
};

/// Known exact values (small-case table, theorem-certified construction
/// cases for prime powers q <= 16) plus formula bounds elsewhere.
BoundsRecord best_known(long long n);

}  // namespace c4book
