#pragma once

#include <map>
#include <string>
#include <vector>

namespace ant {

struct CaseResult {
    std::string name;
    std::string params;
    double observed = 0;
    double expected = 0;
    double tolerance = 0;
    bool pass = false;
    bool skipped = false;
    double runtime_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    int passed() const;
    int failed() const;
    int total() const;
    bool all_pass() const;
    // deterministic JSON: cases sorted by name, fixed field order
    std::string to_json() const;
};

struct SuiteOptions {
    unsigned long long seed = 1;
    int jobs = 1;
    double budget_seconds = 900;
    std::map<std::string, std::string> config;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
// runs one suite, or every suite concatenated for "all"
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace ant
