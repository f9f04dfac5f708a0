// sweep.hpp — parameter sweeps, grid scans, and the figure presets

#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gravcat/csv.hpp"
#include "gravcat/ergotropy.hpp"
#include "gravcat/errors.hpp"
#include "gravcat/model.hpp"

namespace gravcat::sweep {

enum class Variable { temperature, coupling };
enum class Scale { linear, logarithmic };

struct Range {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    Scale scale = Scale::linear;

    // `prefix` qualifies the offending field in error messages, e.g. "temp-".
    void validate(const std::string& prefix, bool require_positive_start) const {
        if (points < 2) {
            std::ostringstream msg;
            msg << prefix << "points must be >= 2 (got " << points << ")";
            throw ConfigError(prefix + "points", msg.str());
        }
        if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
            std::ostringstream msg;
            msg << prefix << "start must be < " << prefix << "stop";
            throw ConfigError(prefix + "start", msg.str());
        }
        if ((require_positive_start || scale == Scale::logarithmic) && !(start > 0.0)) {
            std::ostringstream msg;
            msg << prefix << "start must be > 0 for this variable/scale";
            throw ConfigError(prefix + "start", msg.str());
        }
    }

    std::vector<double> values() const {
        std::vector<double> v(static_cast<std::size_t>(points));
        const double a = (scale == Scale::logarithmic) ? std::log(start) : start;
        const double b = (scale == Scale::logarithmic) ? std::log(stop) : stop;
        for (int i = 0; i < points; ++i) {
            const double x = a + (b - a) * static_cast<double>(i) / (points - 1);
            v[static_cast<std::size_t>(i)] = (scale == Scale::logarithmic) ? std::exp(x) : x;
        }
        return v;
    }
};

struct OracleSpec {
    bool enabled = false;
    int n_samples = 2000;
    int refine_steps = 5000;
    std::uint64_t seed = 0;
};

struct SweepSpec {
    Variable variable = Variable::temperature;
    Range range;
    double omega = 1.0;
    double coupling = 0.0;     // fixed Omega when sweeping temperature
    double temperature = 1.0;  // fixed T when sweeping coupling
    std::vector<Convention> conventions{Convention::gibbs};
    OracleSpec oracle;

    void validate() const {
        range.validate("", variable == Variable::temperature);
        if (!(omega > 0.0)) throw ConfigError("omega", "omega must be > 0");
        if (variable == Variable::temperature) {
            if (!(coupling >= 0.0)) throw ConfigError("coupling", "coupling must be >= 0");
        } else {
            if (!(temperature > 0.0)) throw ConfigError("temperature", "temperature must be > 0");
            if (!(range.start >= 0.0)) throw ConfigError("start", "coupling start must be >= 0");
        }
        if (conventions.empty())
            throw ConfigError("convention", "at least one convention is required");
        if (oracle.enabled) {
            if (oracle.n_samples < 1)
                throw ConfigError("oracle-samples", "oracle-samples must be >= 1");
            if (oracle.refine_steps < 0)
                throw ConfigError("oracle-refine", "oracle-refine must be >= 0");
        }
    }
};

inline OutputRecord evaluate_point(const ModelParams& p, const ThermalSpec& t,
                                   const OracleSpec& oracle, std::uint64_t point_seed) {
    const HermitianOperator h = build_hamiltonian(p);
    const DensityMatrix rho = thermal_state(p, t);
    const ErgotropyReport rep = ergotropy_trace(rho, h);
    OutputRecord r;
    r.omega = p.omega;
    r.Omega = p.Omega;
    r.T = t.T;
    r.ln_T = std::log(t.T);
    r.convention = t.convention;
    r.energy = rep.energy;
    r.passive_energy = rep.passive_energy;
    r.ergotropy = rep.ergotropy;
    r.partition = partition_function(p, t);
    if (oracle.enabled)
        r.oracle_min_energy =
            oracle_min_energy(rho, h, oracle.n_samples, point_seed, oracle.refine_steps);
    return r;
}

// One record per (grid point x convention), ordered by convention then grid
// index. Each row's oracle seed is oracle.seed + global row index.
inline std::vector<OutputRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> grid = spec.range.values();
    std::vector<OutputRecord> out;
    out.reserve(grid.size() * spec.conventions.size());
    std::uint64_t row = 0;
    for (const Convention conv : spec.conventions) {
        for (const double x : grid) {
            ModelParams p{spec.omega,
                          spec.variable == Variable::coupling ? x : spec.coupling};
            ThermalSpec t{spec.variable == Variable::temperature ? x : spec.temperature, conv};
            out.push_back(evaluate_point(p, t, spec.oracle, spec.oracle.seed + row));
            ++row;
        }
    }
    return out;
}

struct GridResult {
    std::vector<double> t_values;
    std::vector<double> coupling_values;
    std::vector<double> ergotropy;  // row-major, T outer, coupling inner
    std::vector<OutputRecord> records;
};

inline GridResult run_grid(double omega, const Range& t_range, const Range& coupling_range,
                           Convention convention) {
    t_range.validate("temp-", true);
    coupling_range.validate("coupling-", false);
    if (!(omega > 0.0)) throw ConfigError("omega", "omega must be > 0");
    if (!(coupling_range.start >= 0.0))
        throw ConfigError("coupling-start", "coupling-start must be >= 0");

    GridResult g;
    g.t_values = t_range.values();
    g.coupling_values = coupling_range.values();
    g.ergotropy.reserve(g.t_values.size() * g.coupling_values.size());
    g.records.reserve(g.ergotropy.capacity());
    const OracleSpec no_oracle;
    for (const double T : g.t_values) {
        for (const double Om : g.coupling_values) {
            OutputRecord r = evaluate_point({omega, Om}, {T, convention}, no_oracle, 0);
            g.ergotropy.push_back(r.ergotropy);
            g.records.push_back(r);
        }
    }
    return g;
}

// ------------------------------- presets ------------------------------------
// Fixed sweeps behind the reference figures: omega = 1, temperature on a log
// grid from 1e-2 to 1e3, coupling from 0 to 2, each run under both the
// equilibrium and the literal X-state conventions.

inline const std::vector<Convention>& preset_conventions() {
    static const std::vector<Convention> conv{Convention::gibbs, Convention::paper_literal};
    return conv;
}

inline std::vector<OutputRecord> fig2_preset() {
    std::vector<OutputRecord> out;
    for (const double Om : {0.1, 0.5, 1.0, 2.0}) {
        SweepSpec spec;
        spec.variable = Variable::temperature;
        spec.range = {1e-2, 1e3, 200, Scale::logarithmic};
        spec.omega = 1.0;
        spec.coupling = Om;
        spec.conventions = preset_conventions();
        const std::vector<OutputRecord> rows = run_sweep(spec);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

inline std::vector<OutputRecord> fig3_preset() {
    std::vector<OutputRecord> out;
    for (const double T : {0.1, 0.5, 1.0, 5.0}) {
        SweepSpec spec;
        spec.variable = Variable::coupling;
        spec.range = {0.0, 2.0, 200, Scale::linear};
        spec.omega = 1.0;
        spec.temperature = T;
        spec.conventions = preset_conventions();
        const std::vector<OutputRecord> rows = run_sweep(spec);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

inline std::vector<OutputRecord> fig4_preset() {
    std::vector<OutputRecord> out;
    for (const Convention conv : preset_conventions()) {
        const GridResult g = run_grid(1.0, {1e-2, 1e3, 100, Scale::logarithmic},
                                      {0.0, 2.0, 100, Scale::linear}, conv);
        out.insert(out.end(), g.records.begin(), g.records.end());
    }
    return out;
}

}  // namespace gravcat::sweep
