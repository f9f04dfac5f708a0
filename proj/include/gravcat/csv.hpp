// csv.hpp — long-form CSV emission and parsing with round-trip-exact numbers

#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gravcat/errors.hpp"
#include "gravcat/model.hpp"

namespace gravcat::sweep {

struct OutputRecord {
    double omega = 0.0;
    double Omega = 0.0;
    double T = 0.0;
    double ln_T = 0.0;
    Convention convention = Convention::gibbs;
    double energy = 0.0;
    double passive_energy = 0.0;
    double ergotropy = 0.0;
    double partition = 0.0;
    std::optional<double> oracle_min_energy;
};

inline constexpr std::string_view kCsvHeader =
    "omega,Omega,T,ln_T,convention,energy,passive_energy,ergotropy,partition,"
    "oracle_min_energy";

// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double_field(std::string_view s, int line_no) {
    double out = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        std::ostringstream msg;
        msg << "csv: malformed numeric field '" << s << "' on line " << line_no;
        throw ConfigError("csv", msg.str());
    }
    return out;
}

inline void write_csv(std::ostream& os, std::span<const OutputRecord> records) {
    os << kCsvHeader << '\n';
    for (const OutputRecord& r : records) {
        os << format_double(r.omega) << ',' << format_double(r.Omega) << ','
           << format_double(r.T) << ',' << format_double(r.ln_T) << ','
           << to_string(r.convention) << ',' << format_double(r.energy) << ','
           << format_double(r.passive_energy) << ',' << format_double(r.ergotropy) << ','
           << format_double(r.partition) << ',';
        if (r.oracle_min_energy) os << format_double(*r.oracle_min_energy);
        os << '\n';
    }
}

inline std::string to_csv(std::span<const OutputRecord> records) {
    std::ostringstream os;
    write_csv(os, records);
    return os.str();
}

inline std::vector<OutputRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw ConfigError("csv", "csv: missing or unexpected header line");
    std::vector<OutputRecord> out;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const auto pos = rest.find(',');
            if (pos == std::string_view::npos) {
                fields.push_back(rest);
                break;
            }
            fields.push_back(rest.substr(0, pos));
            rest.remove_prefix(pos + 1);
        }
        if (fields.size() != 10) {
            std::ostringstream msg;
            msg << "csv: expected 10 fields on line " << line_no << ", got " << fields.size();
            throw ConfigError("csv", msg.str());
        }
        OutputRecord r;
        r.omega = parse_double_field(fields[0], line_no);
        r.Omega = parse_double_field(fields[1], line_no);
        r.T = parse_double_field(fields[2], line_no);
        r.ln_T = parse_double_field(fields[3], line_no);
        const auto conv = convention_from_string(fields[4]);
        if (!conv) {
            std::ostringstream msg;
            msg << "csv: unknown convention '" << fields[4] << "' on line " << line_no;
            throw ConfigError("csv", msg.str());
        }
        r.convention = *conv;
        r.energy = parse_double_field(fields[5], line_no);
        r.passive_energy = parse_double_field(fields[6], line_no);
        r.ergotropy = parse_double_field(fields[7], line_no);
        r.partition = parse_double_field(fields[8], line_no);
        if (!fields[9].empty()) r.oracle_min_energy = parse_double_field(fields[9], line_no);
        out.push_back(r);
    }
    return out;
}

}  // namespace gravcat::sweep
