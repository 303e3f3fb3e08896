#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace staralg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

} // namespace staralg
