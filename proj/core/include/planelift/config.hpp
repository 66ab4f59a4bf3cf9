#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "planelift/braided.hpp"
#include "planelift/ydcat.hpp"

namespace planelift {

/// Keyed INI-style configuration: `key = value` lines grouped under
/// [section] headers, `#` comments, list values in brackets. Every key
/// must be consumed by the command that loads the file; leftovers are
/// reported as errors (no silent typo tolerance).
class Config {
public:
    static Config parse(const std::string& text);
    static Config load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key);
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback);
    long get_long(const std::string& section, const std::string& key);
    long get_long_or(const std::string& section, const std::string& key, long fallback);
    std::vector<long long> get_int_list(const std::string& section, const std::string& key);
    std::vector<std::string> get_string_list(const std::string& section, const std::string& key);

    bool has_section(const std::string& section) const;

    /// Throws listing every key that was never read.
    void ensure_all_consumed() const;

private:
    std::string raw(const std::string& section, const std::string& key);
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::set<std::pair<std::string, std::string>> consumed_;
};

/// Builds the braided vector space described by the [space] section.
BraidedVectorSpace space_from_config(Config& cfg, const FieldPtr& field);

/// Builds the YD-triple described by the [group] and [triple] sections.
YDTriple triple_from_config(Config& cfg, const FieldPtr& field);

/// triple.lambda (default "0").
Scalar lambda_from_config(Config& cfg, const FieldPtr& field);

}  // namespace planelift
