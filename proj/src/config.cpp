#include "rbds/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rbds/error.hpp"

namespace rbds {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_string(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": expected key=value, got '" +
                             stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(lineno) + ": empty key");
        }
        cfg.values_[key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_str(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::string Config::get_str(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get_str(key);
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        throw ConfigError("config key '" + key + "': '" + v + "' is not a number");
    }
    return out;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("config key '" + key + "': expected an integer, got " + get_str(key));
    }
    return i;
}

int Config::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t Config::get_u64(const std::string& key) const {
    const std::string v = get_str(key);
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        throw ConfigError("config key '" + key + "': '" + v + "' is not an unsigned integer");
    }
    return out;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? get_u64(key) : fallback;
}

bool Config::get_bool(const std::string& key) const {
    const std::string v = get_str(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config key '" + key + "': '" + v + "' is not a boolean");
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

void Config::set_double(const std::string& key, double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    values_[key] = buf;
}

std::vector<std::string> Config::keys() const {
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
}

std::string Config::canonical_text() const {
    std::string out;
    for (const auto& [k, v] : values_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::uint64_t Config::hash() const {
    const std::string text = canonical_text();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
        const auto b = item.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
            const auto e = item.find_last_not_of(" \t\r");
            out.push_back(item.substr(b, e - b + 1));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace rbds
