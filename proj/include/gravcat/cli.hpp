// cli.hpp — command-line front end: spectrum, state, ergotropy, sweep, grid,
// and geometry subcommands with config-file defaults.

#pragma once

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gravcat/config.hpp"
#include "gravcat/csv.hpp"
#include "gravcat/errors.hpp"
#include "gravcat/model.hpp"
#include "gravcat/sweep.hpp"

namespace gravcat::cli {

namespace detail {

struct OptionSpec {
    std::string_view name;
    bool takes_value;
};

inline const std::vector<OptionSpec>& options_for(std::string_view cmd) {
    static const std::vector<OptionSpec> spectrum{
        {"omega", true}, {"coupling", true}, {"config", true}};
    static const std::vector<OptionSpec> state{{"omega", true},
                                               {"coupling", true},
                                               {"temperature", true},
                                               {"convention", true},
                                               {"config", true}};
    static const std::vector<OptionSpec> ergotropy{
        {"omega", true},          {"coupling", true}, {"temperature", true},
        {"convention", true},     {"oracle", false},  {"oracle-samples", true},
        {"oracle-refine", true},  {"seed", true},     {"output", true},
        {"config", true}};
    static const std::vector<OptionSpec> sweep{
        {"var", true},           {"scale", true},    {"start", true},
        {"stop", true},          {"points", true},   {"omega", true},
        {"coupling", true},      {"temperature", true}, {"convention", true},
        {"oracle", false},       {"oracle-samples", true}, {"oracle-refine", true},
        {"seed", true},          {"output", true},   {"preset", true},
        {"config", true}};
    static const std::vector<OptionSpec> grid{
        {"omega", true},          {"temp-start", true},     {"temp-stop", true},
        {"temp-points", true},    {"temp-scale", true},     {"coupling-start", true},
        {"coupling-stop", true},  {"coupling-points", true}, {"coupling-scale", true},
        {"convention", true},     {"output", true},         {"preset", true},
        {"config", true}};
    static const std::vector<OptionSpec> geometry{
        {"mass", true}, {"d", true}, {"d-prime", true}, {"G", true}, {"config", true}};
    static const std::vector<OptionSpec> none{};
    if (cmd == "spectrum") return spectrum;
    if (cmd == "state") return state;
    if (cmd == "ergotropy") return ergotropy;
    if (cmd == "sweep") return sweep;
    if (cmd == "grid") return grid;
    if (cmd == "geometry") return geometry;
    return none;
}

inline const char* usage_text() {
    return
        "usage: gravcat <command> [--flag value ...]\n"
        "\n"
        "commands:\n"
        "  spectrum   print Delta, phi+, phi-, and the four eigenvalues\n"
        "             flags: --omega --coupling\n"
        "  state      print the thermal density matrix at one parameter point\n"
        "             flags: --omega --coupling --temperature --convention\n"
        "  ergotropy  evaluate one parameter point, print one CSV record\n"
        "             flags: --omega --coupling --temperature --convention\n"
        "                    [--oracle --oracle-samples N --oracle-refine N --seed S]\n"
        "  sweep      sweep temperature or coupling, emit CSV\n"
        "             flags: --var temperature|coupling --scale linear|log\n"
        "                    --start A --stop B --points N --omega W\n"
        "                    --coupling O | --temperature T --convention LIST\n"
        "                    [--oracle ...] [--preset fig2|fig3]\n"
        "  grid       scan a (T, Omega) grid, emit long-form CSV\n"
        "             flags: --omega --temp-start --temp-stop --temp-points --temp-scale\n"
        "                    --coupling-start --coupling-stop --coupling-points\n"
        "                    --coupling-scale --convention LIST [--preset fig4]\n"
        "  geometry   coupling Omega from masses and separations\n"
        "             flags: --mass --d --d-prime [--G]\n"
        "\n"
        "common flags:\n"
        "  --config <file>   key=value defaults; command-line flags override\n"
        "  --output <path>   write CSV to a file instead of standard output\n"
        "  --convention      comma list of gibbs, inverted, paper_literal\n"
        "\n"
        "GRAVCAT_SEED sets the default oracle seed (--seed overrides).\n";
}

using OptionMap = std::map<std::string, std::string>;

inline double parse_double_opt(const OptionMap& opts, const std::string& name, double fallback) {
    const auto it = opts.find(name);
    if (it == opts.end()) return fallback;
    double v = 0.0;
    const std::string& s = it->second;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError(name, "invalid number '" + s + "' for --" + name);
    return v;
}

inline int parse_int_opt(const OptionMap& opts, const std::string& name, int fallback) {
    const auto it = opts.find(name);
    if (it == opts.end()) return fallback;
    int v = 0;
    const std::string& s = it->second;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError(name, "invalid integer '" + s + "' for --" + name);
    return v;
}

inline std::uint64_t parse_u64(const std::string& s, const std::string& name) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError(name, "invalid seed '" + s + "' in " + name);
    return v;
}

inline bool parse_bool_opt(const OptionMap& opts, const std::string& name) {
    const auto it = opts.find(name);
    if (it == opts.end()) return false;
    const std::string& s = it->second;
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError(name, "invalid boolean '" + s + "' for " + name);
}

inline std::vector<Convention> parse_conventions(const OptionMap& opts) {
    const auto it = opts.find("convention");
    if (it == opts.end()) return {Convention::gibbs};
    std::vector<Convention> out;
    std::string_view rest = it->second;
    while (!rest.empty()) {
        const auto pos = rest.find(',');
        const std::string_view tok = rest.substr(0, pos);
        const auto conv = convention_from_string(tok);
        if (!conv)
            throw ConfigError("convention",
                              "unknown convention '" + std::string(tok) +
                                  "' (expected gibbs, inverted, or paper_literal)");
        out.push_back(*conv);
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    if (out.empty()) throw ConfigError("convention", "empty convention list");
    return out;
}

inline sweep::Scale parse_scale(const OptionMap& opts, const std::string& name,
                                sweep::Scale fallback) {
    const auto it = opts.find(name);
    if (it == opts.end()) return fallback;
    if (it->second == "linear") return sweep::Scale::linear;
    if (it->second == "log" || it->second == "logarithmic") return sweep::Scale::logarithmic;
    throw ConfigError(name, "invalid scale '" + it->second + "' (expected linear or log)");
}

inline std::uint64_t resolve_seed(const OptionMap& opts) {
    const auto it = opts.find("seed");
    if (it != opts.end()) return parse_u64(it->second, "seed");
    if (const char* env = std::getenv("GRAVCAT_SEED")) return parse_u64(env, "GRAVCAT_SEED");
    return 0;
}

inline sweep::OracleSpec parse_oracle(const OptionMap& opts) {
    sweep::OracleSpec o;
    o.enabled = parse_bool_opt(opts, "oracle");
    o.n_samples = parse_int_opt(opts, "oracle-samples", o.n_samples);
    o.refine_steps = parse_int_opt(opts, "oracle-refine", o.refine_steps);
    o.seed = resolve_seed(opts);
    return o;
}

inline ModelParams parse_model(const OptionMap& opts) {
    ModelParams p;
    p.omega = parse_double_opt(opts, "omega", 1.0);
    p.Omega = parse_double_opt(opts, "coupling", 0.0);
    if (!(p.omega > 0.0)) throw ConfigError("omega", "omega must be > 0");
    if (!(p.Omega >= 0.0)) throw ConfigError("coupling", "coupling must be >= 0");
    return p;
}

inline ThermalSpec parse_thermal(const OptionMap& opts) {
    ThermalSpec t;
    t.T = parse_double_opt(opts, "temperature", 1.0);
    if (!(t.T > 0.0)) throw ConfigError("temperature", "temperature must be > 0");
    const auto conventions = parse_conventions(opts);
    if (conventions.size() != 1)
        throw ConfigError("convention", "this command takes a single convention");
    t.convention = conventions.front();
    return t;
}

inline std::string format_complex(const qmat::cplx& z) {
    using sweep::format_double;
    if (z.imag() == 0.0) return format_double(z.real());
    const std::string sign = z.imag() < 0.0 ? "-" : "+";
    return format_double(z.real()) + sign + format_double(std::abs(z.imag())) + "i";
}

inline void emit_csv(const OptionMap& opts, const std::vector<sweep::OutputRecord>& records,
                     std::ostream& out) {
    const auto it = opts.find("output");
    if (it == opts.end()) {
        sweep::write_csv(out, records);
        return;
    }
    std::ofstream f(it->second, std::ios::binary);
    if (!f) throw ConfigError("output", "cannot open output file '" + it->second + "'");
    sweep::write_csv(f, records);
}

inline void reject_preset_conflicts(const OptionMap& opts,
                                    const std::vector<std::string>& exclusive) {
    for (const std::string& name : exclusive)
        if (opts.count(name))
            throw ConfigError("preset", "--preset cannot be combined with --" + name);
}

inline int run_spectrum(const OptionMap& opts, std::ostream& out) {
    using sweep::format_double;
    const ModelParams p = parse_model(opts);
    const GravCatSpectrum s = analytic_spectrum(p);
    out << "omega=" << format_double(p.omega) << '\n'
        << "Omega=" << format_double(p.Omega) << '\n'
        << "Delta=" << format_double(s.Delta) << '\n'
        << "phi_plus=" << format_double(s.phi_plus) << '\n'
        << "phi_minus=" << format_double(s.phi_minus) << '\n'
        << "eigenvalues=" << format_double(s.eigenvalues[0]) << ','
        << format_double(s.eigenvalues[1]) << ',' << format_double(s.eigenvalues[2]) << ','
        << format_double(s.eigenvalues[3]) << '\n';
    return 0;
}

inline int run_state(const OptionMap& opts, std::ostream& out) {
    using sweep::format_double;
    const ModelParams p = parse_model(opts);
    const ThermalSpec t = parse_thermal(opts);
    const DensityMatrix rho = thermal_state(p, t);
    out << "omega=" << format_double(p.omega) << '\n'
        << "Omega=" << format_double(p.Omega) << '\n'
        << "T=" << format_double(t.T) << '\n'
        << "convention=" << to_string(t.convention) << '\n'
        << "partition=" << format_double(partition_function(p, t)) << '\n';
    for (std::size_t i = 0; i < 4; ++i) {
        out << "rho" << i << '=';
        for (std::size_t j = 0; j < 4; ++j)
            out << format_complex(rho.matrix()(i, j)) << (j + 1 < 4 ? " " : "");
        out << '\n';
    }
    return 0;
}

inline int run_ergotropy(const OptionMap& opts, std::ostream& out) {
    const ModelParams p = parse_model(opts);
    const ThermalSpec t = parse_thermal(opts);
    const sweep::OracleSpec oracle = parse_oracle(opts);
    const sweep::OutputRecord r = sweep::evaluate_point(p, t, oracle, oracle.seed);
    emit_csv(opts, {r}, out);
    return 0;
}

inline int run_sweep_cmd(const OptionMap& opts, std::ostream& out) {
    if (const auto preset = opts.find("preset"); preset != opts.end()) {
        reject_preset_conflicts(opts, {"var", "scale", "start", "stop", "points", "omega",
                                       "coupling", "temperature", "convention", "oracle",
                                       "oracle-samples", "oracle-refine", "seed"});
        if (preset->second == "fig2") {
            emit_csv(opts, sweep::fig2_preset(), out);
            return 0;
        }
        if (preset->second == "fig3") {
            emit_csv(opts, sweep::fig3_preset(), out);
            return 0;
        }
        throw ConfigError("preset", "unknown sweep preset '" + preset->second +
                                        "' (expected fig2 or fig3)");
    }
    sweep::SweepSpec spec;
    if (const auto it = opts.find("var"); it != opts.end()) {
        if (it->second == "temperature") spec.variable = sweep::Variable::temperature;
        else if (it->second == "coupling") spec.variable = sweep::Variable::coupling;
        else
            throw ConfigError("var", "invalid sweep variable '" + it->second +
                                         "' (expected temperature or coupling)");
    }
    spec.range.start = parse_double_opt(opts, "start", 0.0);
    spec.range.stop = parse_double_opt(opts, "stop", 0.0);
    spec.range.points = parse_int_opt(opts, "points", 0);
    spec.range.scale = parse_scale(opts, "scale", sweep::Scale::linear);
    spec.omega = parse_double_opt(opts, "omega", 1.0);
    spec.coupling = parse_double_opt(opts, "coupling", 0.0);
    spec.temperature = parse_double_opt(opts, "temperature", 1.0);
    spec.conventions = parse_conventions(opts);
    spec.oracle = parse_oracle(opts);
    emit_csv(opts, sweep::run_sweep(spec), out);
    return 0;
}

inline int run_grid_cmd(const OptionMap& opts, std::ostream& out) {
    if (const auto preset = opts.find("preset"); preset != opts.end()) {
        reject_preset_conflicts(
            opts, {"omega", "temp-start", "temp-stop", "temp-points", "temp-scale",
                   "coupling-start", "coupling-stop", "coupling-points", "coupling-scale",
                   "convention"});
        if (preset->second != "fig4")
            throw ConfigError("preset",
                              "unknown grid preset '" + preset->second + "' (expected fig4)");
        emit_csv(opts, sweep::fig4_preset(), out);
        return 0;
    }
    const double omega = parse_double_opt(opts, "omega", 1.0);
    sweep::Range t_range{parse_double_opt(opts, "temp-start", 1e-2),
                         parse_double_opt(opts, "temp-stop", 1e3),
                         parse_int_opt(opts, "temp-points", 100),
                         parse_scale(opts, "temp-scale", sweep::Scale::logarithmic)};
    sweep::Range c_range{parse_double_opt(opts, "coupling-start", 0.0),
                         parse_double_opt(opts, "coupling-stop", 2.0),
                         parse_int_opt(opts, "coupling-points", 100),
                         parse_scale(opts, "coupling-scale", sweep::Scale::linear)};
    std::vector<sweep::OutputRecord> records;
    for (const Convention conv : parse_conventions(opts)) {
        const sweep::GridResult g = sweep::run_grid(omega, t_range, c_range, conv);
        records.insert(records.end(), g.records.begin(), g.records.end());
    }
    emit_csv(opts, records, out);
    return 0;
}

inline int run_geometry(const OptionMap& opts, std::ostream& out) {
    GeometryParams g;
    g.m = parse_double_opt(opts, "mass", 0.0);
    g.d = parse_double_opt(opts, "d", 0.0);
    g.d_prime = parse_double_opt(opts, "d-prime", 0.0);
    g.G = parse_double_opt(opts, "G", kNewtonG);
    if (!(g.m > 0.0)) throw ConfigError("mass", "mass must be > 0");
    if (!(g.d > 0.0)) throw ConfigError("d", "d must be > 0");
    if (!(g.d_prime > 0.0)) throw ConfigError("d-prime", "d-prime must be > 0");
    if (!(g.G > 0.0)) throw ConfigError("G", "G must be > 0");
    out << "Omega=" << sweep::format_double(omega_from_geometry(g)) << '\n';
    return 0;
}

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    using namespace detail;
    if (argc < 2) {
        err << usage_text();
        return 1;
    }
    const std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        out << usage_text();
        return 0;
    }
    const std::vector<OptionSpec>& specs = options_for(cmd);
    if (specs.empty()) {
        err << "unknown command '" << cmd << "'\n\n" << usage_text();
        return 1;
    }

    try {
        OptionMap flags;
        for (int i = 2; i < argc; ++i) {
            const std::string_view arg = argv[i];
            if (arg == "--help" || arg == "-h") {
                out << usage_text();
                return 0;
            }
            const OptionSpec* match = nullptr;
            for (const OptionSpec& s : specs)
                if (arg.size() > 2 && arg.substr(2) == s.name && arg.substr(0, 2) == "--") {
                    match = &s;
                    break;
                }
            if (match == nullptr) {
                err << "unknown flag '" << arg << "' for command '" << cmd << "'\n\n"
                    << usage_text();
                return 1;
            }
            if (match->takes_value) {
                if (i + 1 >= argc)
                    throw ConfigError(std::string(match->name),
                                      "missing value for --" + std::string(match->name));
                flags[std::string(match->name)] = argv[++i];
            } else {
                flags[std::string(match->name)] = "true";
            }
        }

        OptionMap opts;
        if (const auto cfg = flags.find("config"); cfg != flags.end()) {
            opts = load_config(cfg->second);
            for (const auto& [key, value] : opts) {
                bool known = false;
                for (const OptionSpec& s : specs)
                    if (key == s.name && key != "config") known = true;
                if (!known)
                    throw ConfigError(key, "unknown config key '" + key + "' for command '" +
                                               cmd + "'");
            }
        }
        for (const auto& [key, value] : flags) opts[key] = value;  // flags override config

        if (cmd == "spectrum") return run_spectrum(opts, out);
        if (cmd == "state") return run_state(opts, out);
        if (cmd == "ergotropy") return run_ergotropy(opts, out);
        if (cmd == "sweep") return run_sweep_cmd(opts, out);
        if (cmd == "grid") return run_grid_cmd(opts, out);
        return run_geometry(opts, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace gravcat::cli
