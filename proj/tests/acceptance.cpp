// Acceptance gate: runs every criterion of the reproduction suite and
// prints one pass/fail line per criterion. Exit 0 iff all pass.

#include <cstring>
#include <iostream>

#include "c4book/reproduce.hpp"

int main(int argc, char** argv) {
    c4book::ReproduceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
        else if (std::strcmp(argv[i], "--include-search-n3") == 0) opt.include_search_n3 = true;
        else {
            std::cerr << "usage: acceptance [--quick] [--include-search-n3]\n";
            return 2;
        }
    }
    auto rows = c4book::run_acceptance(opt);
    for (const auto& r : rows) std::cout << r.to_line() << "\n";
    bool ok = c4book::acceptance_ok(rows);
    std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURE") << "\n";
    return ok ? 0 : 1;
}
