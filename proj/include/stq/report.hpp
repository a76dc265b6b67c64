#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace stq {

// One named scalar residual with its gate.  `claim` states, in words, which
// property the number tests; informational entries carry an infinite gate.
struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string claim;
    bool informational = false;
};

// Universal verifier output: a list of checks plus run metadata.
struct ResidualReport {
    std::string scenario;
    std::vector<Check> checks;
    std::map<std::string, std::string> metadata;

    Check& require(const std::string& name, double value, double tolerance, const std::string& claim)
    {
        checks.push_back(Check{name, value, tolerance, value <= tolerance, claim, false});
        return checks.back();
    }

    // value must be at least `bound`
    Check& require_at_least(const std::string& name, double value, double bound, const std::string& claim)
    {
        checks.push_back(Check{name, value, bound, value >= bound, claim, false});
        return checks.back();
    }

    Check& note(const std::string& name, double value, const std::string& claim)
    {
        checks.push_back(Check{name, value, std::numeric_limits<double>::infinity(), true, claim, true});
        return checks.back();
    }

    bool pass() const
    {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void absorb(const ResidualReport& other, const std::string& prefix = "")
    {
        for (Check c : other.checks) {
            if (!prefix.empty()) c.name = prefix + "." + c.name;
            checks.push_back(std::move(c));
        }
    }
};

}  // namespace stq
