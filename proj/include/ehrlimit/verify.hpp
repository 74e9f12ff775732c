#pragma once

#include <string>
#include <vector>

namespace ehrlimit::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteParams {
    long max = -1;    // range bound (recursion, lemma-powers, m2-closedform, jacobsthal)
    long d = -1;      // dimension (fkh-census)
    long t_max = -1;  // dilate bound (eq1-consistency)
};

const std::vector<std::string>& suite_names();

/// Run one named desk-scale suite. Throws std::invalid_argument on an
/// unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteParams& params);

}  // namespace ehrlimit::verify
