#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace arcfact::repro {

// One reproduction case: a desk-scale computational claim the toolkit
// re-derives from scratch. `basis` records where the expected value comes
// from: "literature" (a published computational statement), "derived"
// (recomputed here by an independent route), or "direct" (immediate).
struct CaseResult {
    std::string id;
    std::string description;
    std::string basis;
    std::string claim;
    bool pass = false;
    bool resource_limited = false;
    std::string error;
    nlohmann::ordered_json details;
    double ms = 0.0;
};

struct SuiteResult {
    std::vector<CaseResult> cases;
    bool all_pass = true;
    bool any_limit = false;
};

std::vector<std::string> case_ids();

CaseResult run_case(const std::string& id);

// filter: exact id or a prefix pattern ending in '*'; empty runs everything.
// Unknown ids (nothing matched) raise invalid_argument.
SuiteResult run_suite(const std::string& filter = "");

nlohmann::ordered_json to_json(const SuiteResult& suite, bool include_timings = true);

}  // namespace arcfact::repro
