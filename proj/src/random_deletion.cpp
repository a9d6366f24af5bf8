#include "c4book/random_deletion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "c4book/bounds.hpp"
#include "c4book/field.hpp"

namespace c4book {

long long smallest_prime_at_least(long long lo) {
    if (lo <= 2) return 2;
    long long p = lo;
    while (!is_prime(static_cast<std::uint64_t>(p))) ++p;
    return p;
}

std::string TrialParams::to_text() const {
    std::ostringstream os;
    os << "n=" << n << " m=" << m << " p=" << p << " N=" << N
       << " order=" << target_order << " deletions=" << d;
    return os.str();
}

TrialParams trial_params(long long n) {
    auto m = lemma1_m(n);
    if (!m)
        throw std::invalid_argument("trial_params: m = floor(sqrt(n) - 6 n^0.2625) <= 0, vacuous");
    TrialParams tp;
    tp.n = n;
    tp.m = *m;
    // Smallest prime p with p >= sqrt(n) + 1/2, i.e. (2p-1)^2 >= 4n.
    long long p = isqrt(n);
    while ((2 * p - 1) * (2 * p - 1) < 4 * n) ++p;
    tp.p = smallest_prime_at_least(p);
    // Ceiling the analysis depends on: p <= sqrt(n) + n^0.2625 + 1.
    {
        long double rn = sqrtl(static_cast<long double>(n));
        long double ceil_p = rn + powl(static_cast<long double>(n), 0.2625L) + 1.0L;
        if (static_cast<long double>(tp.p) > ceil_p + 1e-9L)
            throw std::invalid_argument("trial_params: no prime close enough above sqrt(n)");
    }
    tp.N = tp.p * tp.p + tp.p + 1;
    tp.target_order = n + 2 * tp.m;
    tp.d = tp.N - tp.target_order;
    if (tp.d < 0) throw std::invalid_argument("trial_params: host graph smaller than target order");
    return tp;
}

bool TrialResult::success() const {
    if (!min_degree_ok) return false;
    if (fully_verified) return report && report->valid;
    return true;
}

std::string TrialResult::to_text() const {
    std::ostringstream os;
    os << params.to_text() << " seed=" << seed << " min_degree=" << min_degree
       << (min_degree_ok ? " >= m: ok" : " >= m: FAIL");
    if (fully_verified && report) {
        os << (report->valid ? " | certificate valid, " : " | certificate INVALID, ")
           << report->detail;
    } else {
        os << " | degree check only";
    }
    return os.str();
}

DeletionTrialRunner::DeletionTrialRunner(long long n)
    : params_(trial_params(n)), host_(build_er_graph(static_cast<int>(params_.p))) {}

TrialResult DeletionTrialRunner::run_trial(std::uint64_t seed, bool full_verify) {
    TrialResult r;
    r.params = params_;
    r.seed = seed;

    // Seeded Fisher-Yates shuffle; indices are drawn by explicit modulo so
    // the sequence is pinned to mt19937_64 output and stable across
    // standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<int> order(host_.graph.order());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(order[i], order[j]);
    }
    std::vector<int> keep(order.begin() + params_.d, order.end());
    std::sort(keep.begin(), keep.end());

    Graph g = host_.graph.induced(keep);
    r.min_degree = g.min_degree();
    r.min_degree_ok = r.min_degree >= params_.m;
    if (full_verify) {
        r.fully_verified = true;
        r.report = verify_witness(g, static_cast<int>(params_.n));
        if (r.report->valid) r.witness_g6 = encode_graph6(g);
    }
    return r;
}

std::optional<TrialResult> DeletionTrialRunner::retry_until_witness(std::uint64_t seed0,
                                                                    int max_trials,
                                                                    bool full_verify) {
    for (int i = 0; i < max_trials; ++i) {
        TrialResult r = run_trial(seed0 + static_cast<std::uint64_t>(i), full_verify);
        if (r.success()) return r;
    }
    return std::nullopt;
}

}  // namespace c4book
