// Acceptance gate: runs the thirteen acceptance criteria end to end and
// prints one pass/fail line per criterion.
//
// Criterion 8 contains a sub-clause (unimodularity of the divided-power
// pairing for d <= 6) that is mathematically false for d >= 2: the Gram
// matrix is anti-diagonal with entries (-1)^{d-h} C(d,h), so |det| =
// prod_h C(d,h) > 1.  That criterion is reported honestly as FAIL with the
// computed determinants; the gate's exit code counts only unexpected
// failures.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "schurkit/verify.hpp"

using namespace schurkit;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> suites;
    bool expected_fail = false;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "box-map cokernels free of ssyt rank, |lambda| <= 8, r <= 4", {"schur-ranks"}},
        {2, "Cauchy binomial identities, n <= 6, a,b <= 3", {"cauchy"}},
        {3, "direct-sum and skew decomposition rank identities", {"direct-sum", "skew"}},
        {4, "Littlewood-Richardson product rule and symmetries", {"lr"}},
        {5, "Schur complex d.d = 0 and component-rank formulas", {"complexes"}},
        {6, "torsion homology, decalage, classical truncation", {"truncation"}},
        {7, "split acyclicity for 20 random split-injective rho", {"acyclicity"}},
        {8, "divided-power d! identities and pairing unimodularity", {"divided-powers"}, true},
        {9, "Bott algorithm exhaustive sweep invariants", {"bott"}},
        {10, "Bott vs Cech oracle on the projective line, range 8", {"bott-p1"}},
        {11, "Plucker coordinate-ring graded dimensions", {"plucker"}},
        {12, "LR symmetry and Koszul component ranks", {"koszul"}},
        {13, "skew exact sequence: iso / injective with free cokernel", {"skew-ses"}},
    };

    int unexpected = 0;
    for (const auto& crit : criteria) {
        bool pass = true;
        bool only_known = true;
        long long ms = 0;
        std::vector<std::string> details;
        for (const auto& name : crit.suites) {
            SuiteReport rep = run_suite(name);
            ms += rep.elapsed_ms;
            if (!rep.pass()) {
                pass = false;
                for (const auto& c : rep.cases)
                    if (!c.pass) {
                        details.push_back("    " + c.inputs + ": " + c.actual);
                        // the documented exception covers exactly the pairing
                        // unimodularity cases, nothing else in the suite
                        if (c.inputs.rfind("divided_pairing", 0) != 0) only_known = false;
                    }
            }
        }
        std::cout << "criterion " << crit.number << " (" << crit.description
                  << "): " << (pass ? "PASS" : "FAIL") << " [" << ms << " ms]";
        if (!pass && crit.expected_fail && only_known)
            std::cout << " (known, documented analysis)";
        std::cout << "\n";
        for (const auto& d : details) std::cout << d << "\n";
        if (!pass && !(crit.expected_fail && only_known)) ++unexpected;
    }
    if (unexpected)
        std::cout << unexpected << " criteria failed unexpectedly\n";
    else
        std::cout << "all criteria behave as documented\n";
    return unexpected == 0 ? 0 : 1;
}
