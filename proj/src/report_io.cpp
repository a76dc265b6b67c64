#include "stq/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace stq {
namespace cli {

namespace {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string report_json(const ResidualReport& rep, double wall_seconds)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["scenario"] = rep.scenario;
    j["pass"] = rep.pass();
    j["wall_time_s"] = wall_seconds;
    j["metadata"] = rep.metadata;
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : rep.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        e["claim"] = c.claim;
        e["informational"] = c.informational;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string report_csv(const ResidualReport& rep)
{
    std::ostringstream out;
    out << "check,value,tolerance,pass\n";
    for (const Check& c : rep.checks)
        out << c.name << ',' << format_double(c.value) << ',' << format_double(c.tolerance) << ','
            << (c.pass ? "true" : "false") << '\n';
    return out.str();
}

void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

MergeSummary merge_reports(const std::string& directory)
{
    namespace fs = std::filesystem;
    MergeSummary sum;
    nlohmann::json merged = nlohmann::json::array();
    std::ostringstream table;
    table << "scenario                      pass  checks  failed\n";

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.path().extension() == ".json" && entry.path().filename() != "merged.json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const fs::path& p : files) {
        std::ifstream in(p);
        nlohmann::json j;
        in >> j;
        merged.push_back(j);
        ++sum.scenarios;
        int failed = 0;
        for (const auto& c : j["checks"])
            if (!c["pass"].get<bool>()) ++failed;
        if (!j["pass"].get<bool>()) ++sum.failures;
        std::ostringstream row;
        row.width(30);
        row.setf(std::ios::left);
        row << j["scenario"].get<std::string>();
        table << row.str() << (j["pass"].get<bool>() ? "ok    " : "FAIL  ") << j["checks"].size() << "       "
              << failed << "\n";
    }
    sum.merged_json = merged.dump(2) + "\n";
    sum.table = table.str();
    return sum;
}

}  // namespace cli
}  // namespace stq
