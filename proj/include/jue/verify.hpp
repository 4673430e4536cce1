#pragma once

#include "jue/numkit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jue {

enum class CheckStatus { pass, fail, info };

struct CheckResult {
    std::string suite, name, params;
    CheckStatus status = CheckStatus::pass;
    double value = 0;   // residual magnitude (or the reported quantity for INFO)
    double tol = 0;
    std::string note;
};

struct VerifyConfig {
    std::optional<int> n;
    std::optional<double> alpha, beta;   // both or neither
    bool quick = false;
    PrecisionContext ctx = default_context();
    unsigned threads = 0;
};

const std::vector<std::string>& suite_names();   // without "all"

// Checks of one suite (or "all") in a fixed order. Known discrepancies of printed
// formulas show up as INFO lines next to the passing corrected forms.
// std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyConfig& cfg);

std::string format_check(const CheckResult& r);
const char* status_name(CheckStatus s);
bool all_passed(const std::vector<CheckResult>& rs);

// grid used by the identity suites: n in 1..5, these (α,β) pairs, λ in {0.25, 1, 2.5}
const std::vector<std::pair<double, double>>& identity_pairs();

}  // namespace jue
