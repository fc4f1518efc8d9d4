#ifndef QADJ_REPORT_HPP
#define QADJ_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace qadj {

/// Result of one named property check over some scope.
struct CheckResult {
    std::string name;
    std::string scope;            // e.g. "G2", "B3"
    std::size_t instances_checked = 0;
    std::vector<std::string> failures;  // each entry is a concrete witness

    bool passed() const { return failures.empty(); }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed(); });
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.failures.size();
        return n;
    }
    void append(VerificationReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
    /// Fixed report order regardless of construction schedule.
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return std::tie(a.name, a.scope) < std::tie(b.name, b.scope);
                         });
    }
};

} // namespace qadj

#endif
