#pragma once

#include <functional>

#include "stq/config.hpp"
#include "stq/report.hpp"

namespace stq {
namespace cli {

// Knobs every scenario accepts; physical parameters come from the config.
struct RunOptions {
    std::uint64_t seed = 2026;
    double tol_scale = 1.0;
};

struct Scenario {
    std::string name;
    std::string claim;                  // the statement this scenario checks
    std::vector<std::string> covers;    // library operations it exercises
    std::string runtime_hint;
    std::set<std::string> config_keys;
    std::function<ResidualReport(const Config&, const RunOptions&)> run;
};

const std::vector<Scenario>& scenario_registry();
const Scenario* find_scenario(const std::string& name);

// every library operation that must appear in at least one scenario
const std::vector<std::string>& covered_operations();

}  // namespace cli
}  // namespace stq
