#include "c4book/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "c4book/field.hpp"

namespace c4book {

long long isqrt(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long long frs_g(long long n) {
    if (n < 1) throw std::invalid_argument("frs_g: n must be >= 1");
    return n + isqrt(n - 1) + 2;
}

long long frs_upper(long long n) { return frs_g(frs_g(n)); }

long long frs_upper_simplified(long long n) { return n + 2 * isqrt(n) + 5; }

namespace {

struct Theorem2Choice {
    long long m, t, value;
};

std::optional<Theorem2Choice> theorem2_argmin(long long n) {
    if (n < 1) throw std::invalid_argument("theorem2_upper: n must be >= 1");
    std::optional<Theorem2Choice> best;
    long long m_max = isqrt(n + 2) + 3;
    for (long long m = 4; m <= m_max; ++m) {
        for (long long t = 0; t <= m - 1; ++t) {
            if ((m - 1) * (m - 1) + (t - 2) < n) continue;
            long long v = m * m + t;
            if (!best || v < best->value) best = Theorem2Choice{m, t, v};
            break;  // larger t only increases m^2+t
        }
    }
    return best;
}

}  // namespace

std::optional<long long> theorem2_upper(long long n) {
    auto best = theorem2_argmin(n);
    if (!best || best->value > frs_upper(n)) return std::nullopt;
    return best->value;
}

long long parsons_star_upper(long long n) {
    if (n < 2) throw std::invalid_argument("parsons_star_upper: n must be >= 2");
    long long k = isqrt(n - 1);
    long long bound = n + k + 2;
    if (k >= 1 && k * k == n - 1) --bound;  // n = k^2 + 1
    return bound;
}

std::optional<long long> lemma1_m(long long n) {
    if (n < 1) throw std::invalid_argument("lemma1_m: n must be >= 1");
    long double nn = static_cast<long double>(n);
    long double root = sqrtl(nn);
    long double term = 6.0L * powl(nn, 0.2625L);
    // Interval around the true value covering libm rounding; the floor is
    // taken on the low end, so the bound is never overestimated.
    long double eps = 1e-15L;
    long double lo = root * (1 - eps) - term * (1 + eps);
    long long m = static_cast<long long>(floorl(lo));
    if (m <= 0) return std::nullopt;
    return m;
}

std::optional<long long> lemma1_lower(long long n) {
    auto m = lemma1_m(n);
    if (!m) return std::nullopt;
    return n + 2 * *m;
}

namespace {

// Exact values r(C4,B_n) for 1 <= n <= 14 (small-case table).
constexpr long long kTableExact[15] = {0, 7, 7, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 22, 24};

bool is_prime_power(long long q) {
    if (q < 2 || q > 65536) return false;
    try {
        factor_prime_power(static_cast<std::uint32_t>(q));
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// n -> (exact value, provenance) certified by the Theorem 3 / Theorem 4
// construction families with q <= 16.
const std::map<long long, std::pair<long long, std::string>>& construction_exacts() {
    static const auto table = [] {
        std::map<long long, std::pair<long long, std::string>> m;
        auto put = [&m](long long n, long long v, const std::string& prov) {
            auto it = m.find(n);
            if (it == m.end() || v < it->second.first) m[n] = {v, prov};
        };
        for (long long q = 4; q <= 16; ++q) {
            if (!is_prime_power(q)) continue;
            if (q % 2 == 0) {
                for (long long t = 0; t <= q - 1; ++t) {
                    if (t == 1) continue;
                    std::ostringstream os;
                    os << "Theorem 3 (q=" << q << ", t=" << t << ")";
                    put((q - 1) * (q - 1) + t - 2, q * q + t, os.str());
                }
            } else if (q >= 5) {
                long long t_lo = (q % 4 == 3) ? (q + 1) / 2 : (q - 1) / 2;
                long long t_skip = (q % 4 == 3) ? (q + 3) / 2 : (q + 1) / 2;
                for (long long t = t_lo; t <= q - 1; ++t) {
                    if (t == t_skip) continue;
                    std::ostringstream os;
                    os << "Theorem 4 (q=" << q << ", t=" << t << ")";
                    put((q - 1) * (q - 1) + t - 2, q * q + t, os.str());
                }
            }
        }
        return m;
    }();
    return table;
}

}  // namespace

BoundsRecord best_known(long long n) {
    if (n < 1) throw std::invalid_argument("best_known: n must be >= 1");
    BoundsRecord r;
    r.n = n;

    std::optional<long long> exact;
    std::string exact_prov;
    if (n <= 14) {
        exact = kTableExact[n];
        exact_prov = "small-case table (1 <= n <= 14)";
    } else if (auto it = construction_exacts().find(n); it != construction_exacts().end()) {
        exact = it->second.first;
        exact_prov = it->second.second + " with matching Theorem 2 upper bound";
    }

    if (exact) {
        r.lower = r.upper = *exact;
        r.exact = exact;
        r.lower_provenance = r.upper_provenance = r.exact_provenance = exact_prov;
        return r;
    }

    r.lower = n + 2;
    r.lower_provenance = "trivial (empty graph on n+1 vertices)";
    if (auto l1 = lemma1_lower(n); l1 && *l1 > r.lower) {
        r.lower = *l1;
        r.lower_provenance = "Lemma 1 probabilistic deletion bound";
    }

    r.upper = frs_upper(n);
    r.upper_provenance = "FRS g(g(n))";
    if (auto best = theorem2_argmin(n); best && best->value <= r.upper) {
        r.upper = best->value;
        std::ostringstream os;
        os << "Theorem 2 via (m,t)=(" << best->m << "," << best->t << ")";
        if ((best->m - 1) * (best->m - 1) + (best->t - 2) > n) os << " [monotonicity-extended]";
        r.upper_provenance = os.str();
    }
    return r;
}

std::string BoundsRecord::to_text() const {
    std::ostringstream os;
    os << "n " << n << '\n';
    if (exact) {
        os << "exact " << *exact << "  (" << exact_provenance << ")\n";
    }
    os << "lower " << lower << "  (" << lower_provenance << ")\n"
       << "upper " << upper << "  (" << upper_provenance << ")\n";
    return os.str();
}

std::string BoundsRecord::to_machine_line() const {
    std::ostringstream os;
    os << "n=" << n << " lower=" << lower << " upper=" << upper << " exact="
       << (exact ? std::to_string(*exact) : std::string("none"))
       << " lower_prov=\"" << lower_provenance << "\" upper_prov=\"" << upper_provenance
       << "\" exact_prov=\"" << exact_provenance << "\"";
    return os.str();
}

}  // namespace c4book
