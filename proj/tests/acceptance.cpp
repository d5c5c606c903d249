// Runs the acceptance criteria and prints one PASS/FAIL line each.
// With arguments, runs just the named criteria. Exit code is the failure count.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "spincat/verify.hpp"

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            int n = std::atoi(argv[i]);
            if (n < 1 || n > 8) {
                std::cerr << "usage: acceptance [criterion 1..8]...\n";
                return 64;
            }
            which.push_back(n);
        }
    } else {
        which = spincat::all_criteria();
    }
    int failures = 0;
    for (int n : which) {
        spincat::VerifyResult r = spincat::run_criterion(n);
        std::cout << spincat::format_result_line(r) << std::endl;
        if (!r.pass) ++failures;
    }
    return failures;
}
