// config.hpp — flat key=value run configuration files

#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "gravcat/errors.hpp"

namespace gravcat::cli {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

// Blank lines and lines starting with '#' are skipped; every other line must
// be key=value. Later occurrences of a key override earlier ones.
inline std::map<std::string, std::string> parse_config(std::istream& is) {
    std::map<std::string, std::string> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config: line " << line_no << " is not key=value: '" << t << "'";
            throw ConfigError("config", msg.str());
        }
        const std::string key = detail::trim(t.substr(0, eq));
        if (key.empty()) {
            std::ostringstream msg;
            msg << "config: empty key on line " << line_no;
            throw ConfigError("config", msg.str());
        }
        out[key] = detail::trim(t.substr(eq + 1));
    }
    return out;
}

inline std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config", "config: cannot open '" + path + "'");
    return parse_config(f);
}

}  // namespace gravcat::cli
