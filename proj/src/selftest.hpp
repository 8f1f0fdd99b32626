#pragma once

#include <string>
#include <vector>

namespace rz {

struct SelftestResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Property suite over embedded fixture curves: DP vs brute-force equality
// (n <= 12, the full weight grid), rank-1 naturality, functional equation and
// residue identities (n <= 20), beta-hat periodicity (n <= 10), RH verdicts
// backed by the genus-1 and rank-2/3 theorems, and the rank-1-decomposition
// crosscheck (n <= 4).
std::vector<SelftestResult> run_selftest();

std::string selftest_report_json(const std::vector<SelftestResult>& results);
bool selftest_all_pass(const std::vector<SelftestResult>& results);

} // namespace rz
