#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "c4book/projective.hpp"
#include "c4book/witness.hpp"

namespace c4book {

long long smallest_prime_at_least(long long lo);

/// Parameters of the deletion construction for a target book size n:
/// p is the smallest prime with p >= sqrt(n) + 1/2, the host graph is ER_p
/// on N = p^2+p+1 vertices, and d = N - (n + 2m) vertices are deleted to
/// leave a graph of order n + 2m with m = floor(sqrt(n) - 6 n^0.2625).
struct TrialParams {
    long long n = 0;
    long long m = 0;
    long long p = 0;
    long long N = 0;
    long long target_order = 0;  // n + 2m
    long long d = 0;             // N - target_order

    std::string to_text() const;
};

/// Throws std::invalid_argument when the construction is vacuous for n
/// (m <= 0) or when p exceeds the sqrt(n) + n^0.2625 + 1 ceiling the
/// analysis requires.
TrialParams trial_params(long long n);

struct TrialResult {
    TrialParams params;
    std::uint64_t seed = 0;
    int min_degree = 0;
    bool min_degree_ok = false;  // min degree >= m, the property the trial needs
    bool fully_verified = false;
    std::optional<WitnessReport> report;  // present iff fully verified
    std::string witness_g6;               // present iff fully verified and valid

    bool success() const;
    std::string to_text() const;
};

/// Runs deletion trials for one n, reusing the host polarity graph across
/// seeds. A trial deletes d uniformly random vertices (Fisher-Yates with a
/// seeded mt19937_64) and checks min degree >= m; with full_verify it also
/// recomputes C4-freeness and the complement book ceiling of the survivor.
class DeletionTrialRunner {
public:
    explicit DeletionTrialRunner(long long n);

    const TrialParams& params() const { return params_; }

    TrialResult run_trial(std::uint64_t seed, bool full_verify = true);

    /// Tries seeds seed0, seed0+1, ... until a trial succeeds or max_trials
    /// are spent; nullopt on exhaustion.
    std::optional<TrialResult> retry_until_witness(std::uint64_t seed0, int max_trials,
                                                   bool full_verify = true);

private:
    TrialParams params_;
    PolarityGraph host_;
};

}  // namespace c4book
