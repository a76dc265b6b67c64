// Scenario runner: every verifier in the library is invocable by name, with
// machine-readable residual reports.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

#include "stq/report_io.hpp"
#include "stq/scenario.hpp"

using namespace stq;
using namespace stq::cli;

namespace {

int cmd_run(const std::string& name, const std::string& config_path, const std::string& out_dir,
            std::uint64_t seed, double tol_scale)
{
    const Scenario* sc = find_scenario(name);
    if (sc == nullptr) {
        std::cerr << "unknown scenario '" << name << "'; available:\n";
        for (const Scenario& s : scenario_registry()) std::cerr << "  " << s.name << "\n";
        return 2;
    }

    Config cfg;
    if (!config_path.empty()) cfg = Config::parse_file(config_path);
    try {
        cfg.validate(sc->config_keys);
    } catch (const std::exception& e) {
        std::cerr << "invalid config for scenario '" << name << "': " << e.what() << "\n";
        if (!sc->config_keys.empty()) {
            std::cerr << "accepted keys:\n";
            for (const std::string& k : sc->config_keys) std::cerr << "  " << k << "\n";
        }
        return 2;
    }

    RunOptions opt;
    opt.seed = seed;
    opt.tol_scale = tol_scale;

    const auto start = std::chrono::steady_clock::now();
    ResidualReport rep;
    try {
        rep = sc->run(cfg, opt);
    } catch (const std::exception& e) {
        std::cerr << "scenario '" << name << "' failed to run: " << e.what() << "\n";
        return 2;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    rep.metadata["seed"] = std::to_string(seed);
    rep.metadata["tol_scale"] = std::to_string(tol_scale);

    for (const Check& c : rep.checks) {
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  value=" << c.value;
        if (!c.informational) std::cout << "  gate=" << c.tolerance;
        std::cout << "\n";
    }
    std::cout << (rep.pass() ? "PASS " : "FAIL ") << name << "  (" << wall << " s)\n";

    if (!out_dir.empty()) {
        write_atomic(out_dir + "/" + name + ".json", report_json(rep, wall));
        write_atomic(out_dir + "/" + name + ".csv", report_csv(rep));
    }
    return rep.pass() ? 0 : 1;
}

int cmd_list()
{
    for (const Scenario& s : scenario_registry()) {
        std::ostringstream row;
        row.width(26);
        row.setf(std::ios::left);
        row << s.name;
        std::cout << row.str() << "~" << s.runtime_hint << "  " << s.claim << "\n";
    }
    std::cout << scenario_registry().size() << " scenarios\n";
    return 0;
}

int cmd_merge(const std::string& dir)
{
    MergeSummary sum = merge_reports(dir);
    std::cout << sum.table;
    write_atomic(dir + "/merged.json", sum.merged_json);
    std::cout << sum.scenarios << " scenarios merged, " << sum.failures << " failing\n";
    return sum.failures == 0 ? 0 : 1;
}

int cmd_run_all(const std::string& out_dir, std::uint64_t seed, double tol_scale, int jobs)
{
    const std::vector<Scenario>& reg = scenario_registry();
    std::vector<int> status(reg.size(), 0);

    // scenarios are pure and independent; reports are written atomically
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= reg.size()) return;
            RunOptions opt;
            opt.seed = seed;
            opt.tol_scale = tol_scale;
            const auto start = std::chrono::steady_clock::now();
            ResidualReport rep;
            try {
                rep = reg[i].run(Config{}, opt);
            } catch (const std::exception&) {
                status[i] = 2;
                continue;
            }
            const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rep.metadata["seed"] = std::to_string(seed);
            if (!out_dir.empty()) {
                write_atomic(out_dir + "/" + reg[i].name + ".json", report_json(rep, wall));
                write_atomic(out_dir + "/" + reg[i].name + ".csv", report_csv(rep));
            }
            status[i] = rep.pass() ? 0 : 1;
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    int failures = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        std::cout << (status[i] == 0 ? "[pass] " : "[FAIL] ") << reg[i].name << "\n";
        if (status[i] != 0) ++failures;
    }
    std::cout << reg.size() - failures << "/" << reg.size() << " scenarios pass\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"numerical laboratory for axis-generalized quantum evolution"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one scenario and emit its report");
    std::string name, config_path, out_dir;
    std::uint64_t seed = 2026;
    double tol_scale = 1.0;
    run->add_option("scenario", name, "scenario name (see `list`)")->required();
    run->add_option("--config", config_path, "key = value configuration file");
    run->add_option("--out", out_dir, "directory for the JSON report and CSV residual table");
    run->add_option("--seed", seed, "seed for randomized batteries");
    run->add_option("--tol-scale", tol_scale, "multiply every gate by this factor");

    auto* list = app.add_subcommand("list", "list registered scenarios");

    auto* merge = app.add_subcommand("report-merge", "merge the reports in a directory");
    std::string merge_dir;
    merge->add_option("dir", merge_dir, "directory holding per-scenario JSON reports")->required();

    auto* all = app.add_subcommand("run-all", "run every scenario, sequential by default");
    std::string all_out;
    int jobs = 1;
    all->add_option("--out", all_out, "directory for reports");
    all->add_option("--jobs", jobs, "number of concurrent scenarios");
    all->add_option("--seed", seed, "seed for randomized batteries");
    all->add_option("--tol-scale", tol_scale, "multiply every gate by this factor");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(name, config_path, out_dir, seed, tol_scale);
    if (list->parsed()) return cmd_list();
    if (merge->parsed()) return cmd_merge(merge_dir);
    if (all->parsed()) return cmd_run_all(all_out, seed, tol_scale, jobs);
    return 2;
}
