#pragma once

// Cross-validation suites: every cross-method and oracle-agreement property,
// runnable per scope, plus the erratum report for printed formulas whose
// desk checks fail.

#include <string>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

enum class VerifyScope { nu, separation, products, symfunc, nonfull, all };

struct VerifyCheck {
    std::string name;
    long cases = 0;
    bool pass = true;
    std::vector<std::string> failures;  // pinpointed (inputs, methods, values)
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
    long total_cases() const;
};

VerifyReport verify_suite(VerifyScope scope, int n_max, int threads = 1);

VerifyScope parse_scope(const std::string& s);

// One printed-formula deviation: the desk-scale counterexample and the
// adopted correction, each recomputed on the spot.
struct ErratumEntry {
    std::string id;           // e.g. "eq17-normalization"
    std::string printed;      // what the printed form states
    std::string witness;      // inputs + printed value vs true value
    std::string correction;   // the adopted corrected form
    bool confirmed = false;   // deviation reproduced by this build
};
std::vector<ErratumEntry> erratum_report();

}  // namespace permfact
