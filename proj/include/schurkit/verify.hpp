#ifndef SCHURKIT_VERIFY_HPP
#define SCHURKIT_VERIFY_HPP

#include <string>
#include <vector>

namespace schurkit {

/// One checked (family of) assertion(s) inside a suite.  Large sweeps are
/// aggregated into a single case whose `actual` records either a summary
/// ("ok, 512 instances") or the first mismatch found.
struct SuiteCase {
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;
    long long elapsed_ms = 0;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    std::string to_text() const;
};

/// Names of all verification suites, in the order `verify all` runs them.
std::vector<std::string> suite_names();

/// Run one suite by name; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name);

}  // namespace schurkit

#endif
