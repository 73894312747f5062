#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace rbds {

/// Flat key=value configuration with dotted namespaces, e.g.
///   rbds.alpha = 1.0
///   corrupt.train.kind = pixel_uniform
/// '#' starts a comment; blank lines are ignored. Keys are unique (later
/// assignments win). The canonical text (sorted keys) defines the config
/// hash recorded in reports.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::filesystem::path& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;

    std::string get_str(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double value);

    std::vector<std::string> keys() const;

    /// Sorted "key = value" lines; byte-stable for a given key set.
    std::string canonical_text() const;

    /// FNV-1a over the canonical text.
    std::uint64_t hash() const;

private:
    std::map<std::string, std::string> values_;
};

/// Splits a comma-separated list, trimming whitespace, dropping empties.
std::vector<std::string> split_list(const std::string& s);

} // namespace rbds
