#pragma once

// Invariant suites behind `reflecta verify <suite>`.

#include <string>
#include <utility>
#include <vector>

#include "reflecta/classifier.hpp"
#include "reflecta/io.hpp"

namespace reflecta::cli {

struct SuiteResult {
    explicit SuiteResult(std::string name) : suite(std::move(name)) {}

    std::string suite;
    bool pass = true;
    long checked = 0;
    std::vector<Json> counterexamples;  // capped; `failures` keeps the full count
    long failures = 0;

    void fail(Json example);
    Json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(const std::string& name, ClassifierContext& ctx);

}  // namespace reflecta::cli
