// Acceptance suite: one line per criterion, each backed by the registered
// scenario runners at their production gates.  Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stq/scenario.hpp"

using namespace stq;
using namespace stq::cli;

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> scenarios;
    double runtime_budget = 0.0;   // seconds; 0 = no budget
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"dual-axis evolution equivalence", {"dual-axis-dirac"}, 10.0},
        {"two-component scalar fidelity", {"kg-two-component"}, 5.0},
        {"pseudo-hermiticity resolution", {"pseudo-hermiticity"}, 0.0},
        {"expectation-evolution convergence", {"ehrenfest-convergence"}, 0.0},
        {"uncertainty products", {"uncertainty-battery"}, 0.0},
        {"spectrum shift relabeling", {"spectrum-shift"}, 1.0},
        {"generalized mechanics", {"worldline-equivalence", "bracket-identities"}, 0.0},
        {"boson Hamiltonian positivity", {"hmu-positivity"}, 0.0},
        {"canonical (anti)commutators", {"kg-commutators", "dirac-car"}, 0.0},
        {"operator equations of motion", {"heisenberg-kg", "heisenberg-dirac"}, 0.0},
        {"ordered propagator equivalence", {"propagator-equivalence"}, 60.0},
        {"angular-momentum conservation", {"angular-momentum"}, 0.0},
        {"point-particle moment identity", {"em-moment"}, 0.0},
        {"hypersurface charge constancy", {"noether-hypersurface"}, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& cr : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const std::string& name : cr.scenarios) {
            const Scenario* sc = find_scenario(name);
            if (sc == nullptr) {
                ok = false;
                detail += " missing:" + name;
                continue;
            }
            ResidualReport rep;
            try {
                rep = sc->run(Config{}, RunOptions{});
            } catch (const std::exception& e) {
                ok = false;
                detail += " " + name + ":exception(" + e.what() + ")";
                continue;
            }
            if (!rep.pass()) {
                ok = false;
                for (const Check& c : rep.checks)
                    if (!c.pass) detail += " " + name + "." + c.name + "=" + std::to_string(c.value);
            }
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.runtime_budget > 0.0 && wall > cr.runtime_budget) {
            ok = false;
            detail += " runtime " + std::to_string(wall) + "s over " + std::to_string(cr.runtime_budget) + "s";
        }
        if (!ok) ++failures;
        std::printf("criterion %02d [%s] %-36s (%.2f s)%s\n", index, ok ? "pass" : "FAIL",
                    cr.label.c_str(), wall, detail.c_str());
        std::fflush(stdout);
    }

    if (failures == 0)
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
