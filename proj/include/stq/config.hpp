#pragma once

#include <map>
#include <set>
#include <string>

namespace stq {
namespace cli {

// Flat key = value configuration with [section] headers; keys are stored as
// "section.key".  Unknown keys are rejected against the scenario's schema
// before dispatch.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key, long fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;

    // throws std::invalid_argument naming the first unknown key
    void validate(const std::set<std::string>& allowed) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace cli
}  // namespace stq
