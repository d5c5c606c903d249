#pragma once

#include <string>
#include <vector>

#include "spincat/multipartite.hpp"

namespace spincat {

// Outcome of one acceptance criterion. `residual` is the worst observed
// deviation in the units of `tolerance`; criteria with extra structural
// clauses (sign changes, orderings) fold those into `pass` and `detail`.
struct VerifyResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;
};

VerifyResult run_criterion(int number);  // 1..8

// The dual-route residual sweeps re-run by the `verify` subcommand.
std::vector<int> cross_check_criteria();
// Everything, in acceptance order.
std::vector<int> all_criteria();

// "criterion N: PASS (...)" on a single line.
std::string format_result_line(const VerifyResult& result);

}  // namespace spincat
