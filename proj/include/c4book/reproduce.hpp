#pragma once

#include <string>
#include <vector>

namespace c4book {

struct ReproduceOptions {
    bool quick = false;             // skip the randomized-deletion row
    bool include_search_n3 = false; // opt-in exhaustive r(C4,B3) = 9 row
    double n3_budget_seconds = 3600;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    bool inconclusive = false;  // budget ran out; only the opt-in row may report this
    double seconds = 0;
    std::string detail;  // one-line summary, or the first failure with evidence

    std::string to_line() const;
};

/// Runs the full acceptance suite and returns one result per criterion.
/// Every check recomputes its claim from scratch; nothing is read from disk.
std::vector<CriterionResult> run_acceptance(const ReproduceOptions& opt);

/// True iff every non-skipped row passed (inconclusive counts as failure
/// except on the opt-in search row, where it is reported but tolerated).
bool acceptance_ok(const std::vector<CriterionResult>& rows);

}  // namespace c4book
