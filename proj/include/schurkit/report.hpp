#ifndef SCHURKIT_REPORT_HPP
#define SCHURKIT_REPORT_HPP

#include <string>
#include <vector>

namespace schurkit {

/// Accumulating pass/fail report for verification routines.
struct Report {
    bool pass = true;
    std::vector<std::string> lines;

    void note(std::string msg) { lines.push_back(std::move(msg)); }
    void fail(std::string msg) {
        pass = false;
        lines.push_back("FAIL: " + std::move(msg));
    }
    void check(bool ok, const std::string& msg) {
        if (ok)
            note(msg);
        else
            fail(msg);
    }
    std::string to_text() const {
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }
};

}  // namespace schurkit

#endif
