#include "c4book/witness.hpp"

#include <sstream>
#include <stdexcept>

#include "c4book/field.hpp"

namespace c4book {

WitnessReport verify_witness(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("verify_witness: n must be >= 1");
    WitnessReport r;
    r.order = g.order();
    r.claimed_n = n;
    r.c4_free = !contains_c4(g);
    r.min_degree = g.min_degree();
    r.book_max = max_book_in_complement(g);
    if (!r.c4_free) {
        r.valid = false;
        r.detail = "contains C4: some vertex pair has >= 2 common neighbors";
        return r;
    }
    if (r.book_max.has_value() && *r.book_max >= n) {
        r.valid = false;
        std::ostringstream os;
        os << "complement contains B_" << n << ": a non-adjacent pair has "
           << *r.book_max << " common non-neighbors";
        r.detail = os.str();
        return r;
    }
    r.valid = true;
    std::ostringstream os;
    os << "certifies r(C4,B" << n << ") >= " << r.order + 1;
    r.detail = os.str();
    return r;
}

std::string WitnessReport::to_text() const {
    std::ostringstream os;
    os << "order " << order << '\n'
       << "c4_free " << (c4_free ? "true" : "false") << '\n'
       << "min_degree " << min_degree << '\n'
       << "book_max " << (book_max ? std::to_string(*book_max) : std::string("none")) << '\n'
       << "claimed_n " << claimed_n << '\n'
       << "verdict " << (valid ? "valid" : "invalid") << '\n'
       << "detail " << detail << '\n';
    return os.str();
}

GqMembership check_gq_membership(const Graph& g, int q) {
    if (q < 3) throw std::invalid_argument("check_gq_membership: q must be >= 3");
    factor_prime_power(static_cast<std::uint32_t>(q));  // throws if q is not a prime power
    long long expected = static_cast<long long>(q) * q + q + 3;
    if (g.order() != expected) return GqMembership::wrong_order;
    if (contains_c4(g)) return GqMembership::not_member;
    auto bm = max_book_in_complement(g);
    long long level = static_cast<long long>(q) * q - q + 1;
    if (bm.has_value() && *bm >= level) return GqMembership::not_member;
    return GqMembership::member;
}

}  // namespace c4book
