#include "stq/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stq {
namespace cli {

namespace {

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

Config Config::parse_text(const std::string& text)
{
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw std::invalid_argument("config: bad section header at line " + std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
        cfg.values_[section.empty() ? key : section + "." + key] = value;
    }
    return cfg;
}

double Config::number(const std::string& key, double fallback) const
{
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("config: key '" + key + "' is not a number: " + it->second);
    return v;
}

long Config::integer(const std::string& key, long fallback) const
{
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("config: key '" + key + "' is not an integer: " + it->second);
    return v;
}

std::string Config::text(const std::string& key, const std::string& fallback) const
{
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

void Config::validate(const std::set<std::string>& allowed) const
{
    for (const auto& [key, value] : values_)
        if (allowed.count(key) == 0)
            throw std::invalid_argument("config: unknown key '" + key + "'");
}

}  // namespace cli
}  // namespace stq
