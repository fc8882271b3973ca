#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ech/json_io.hpp"

namespace ech {

// One verification suite run. Suites: indices, deficit, writhe, gluing,
// degree, appendix-a, appendix-b, chain.
struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 1;
    long trials = 50;
    int n_min = 4;
    int n_max = 6;
    int m_min = 1;
    int m_max = 3;
    std::string backend;  // empty = suite default
    double tolerance = 1e-9;
    std::string fixture_path;  // chain suite: file or directory
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long trials = 0;
    std::string backend;
    double tolerance = 0.0;
    Json params = Json::object();  // n/m ranges etc., for reproduction
    long checks = 0;
    std::vector<std::string> failures;  // canonical (insertion) order
    Json details = Json::object();
    double elapsed_seconds = 0.0;  // not serialized: reports must be byte-stable

    bool passed() const { return failures.empty(); }
    Json to_json() const;
};

bool known_suite(const std::string& name);
const std::vector<std::string>& suite_names();

// Runs one suite. Throws Error subclasses on unusable configuration; check
// failures land in the report instead.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace ech
