// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace rqi::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& flag, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(flag, "not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw UsageError(flag, "not a finite number: '" + text + "'");
    }
    return v;
}

int parse_int(const std::string& flag, const std::string& text) {
    const double v = parse_double(flag, text);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw UsageError(flag, "not an integer: '" + text + "'");
    }
    return static_cast<int>(v);
}

Measure parse_measure(const std::string& name) {
    for (auto m : kAllMeasures)
        if (name == measure_name(m)) return m;
    throw UsageError("--measures", "unknown measure '" + name + "'");
}

double evaluate(Measure m, const RindlerParams& p, const DensityMatrix& rho) {
    switch (m) {
        case Measure::Entropy: return von_neumann_entropy(eigenvalues_hermitian(rho));
        case Measure::Negativity: return negativity(rho, 0);
        case Measure::Purity: return purity(rho);
        case Measure::Coherence: return rel_entropy_coherence(rho);
        case Measure::Occupation:
            return occupation_expectation(vacuum_state(p), Region::RegionI,
                                          {Momentum::PlusK, Momentum::MinusK});
    }
    return 0.0;
}

}  // namespace

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Entropy: return "entropy";
        case Measure::Negativity: return "negativity";
        case Measure::Purity: return "purity";
        case Measure::Coherence: return "coherence";
        case Measure::Occupation: return "occupation";
    }
    return "?";
}

KeyValues parse_key_values(std::istream& in) {
    KeyValues out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--config", "line " + std::to_string(lineno) + " has no '='");
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

SweepConfig resolve_sweep_config(const KeyValues& file, const KeyValues& flags) {
    KeyValues merged = file;
    for (const auto& [k, v] : flags) merged[k] = v;

    SweepConfig cfg;
    for (const auto& [key, value] : merged) {
        const std::string flag = "--" + [&] {
            std::string f = key;
            std::replace(f.begin(), f.end(), '_', '-');
            return f;
        }();
        if (key == "alpha") {
            cfg.alpha_values.clear();
            for (const auto& item : split_list(value))
                cfg.alpha_values.push_back(parse_double(flag, item));
        } else if (key == "r_start") {
            cfg.r_start = parse_double(flag, value);
        } else if (key == "r_stop") {
            cfg.r_stop = parse_double(flag, value);
        } else if (key == "steps") {
            cfg.steps = parse_int(flag, value);
        } else if (key == "phi") {
            cfg.phi = parse_double(flag, value);
        } else if (key == "measures") {
            std::vector<Measure> requested;
            for (const auto& item : split_list(value)) requested.push_back(parse_measure(item));
            // Columns always appear in canonical order.
            cfg.measures.clear();
            for (auto m : kAllMeasures)
                if (std::find(requested.begin(), requested.end(), m) != requested.end())
                    cfg.measures.push_back(m);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "format") {
            if (value == "csv") {
                cfg.format = OutputFormat::Csv;
            } else if (value == "json") {
                cfg.format = OutputFormat::Json;
            } else {
                throw UsageError(flag, "expected csv or json, got '" + value + "'");
            }
        } else {
            throw UsageError("--config", "unknown key '" + key + "'");
        }
    }
    validate(cfg);
    return cfg;
}

void validate(const SweepConfig& cfg) {
    if (cfg.alpha_values.empty()) throw UsageError("--alpha", "no alpha values given");
    for (double a : cfg.alpha_values)
        if (!(a >= 0.0 && a <= 1.0)) throw UsageError("--alpha", "values must lie in [0, 1]");
    if (!(cfg.r_start >= 0.0 && cfg.r_start <= kMaxR)) {
        throw UsageError("--r-start", "must lie in [0, pi/4]");
    }
    if (!(cfg.r_stop >= 0.0 && cfg.r_stop <= kMaxR)) {
        throw UsageError("--r-stop", "must lie in [0, pi/4]");
    }
    if (cfg.steps < 2) throw UsageError("--steps", "must be at least 2");
    if (!(cfg.phi >= 0.0 && cfg.phi < 2.0 * kPi)) throw UsageError("--phi", "must lie in [0, 2pi)");
    if (cfg.measures.empty()) throw UsageError("--measures", "no measures selected");
}

std::vector<double> r_grid(const SweepConfig& cfg) {
    std::vector<double> out(static_cast<std::size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i) {
        out[i] = cfg.r_start + (cfg.r_stop - cfg.r_start) * i / (cfg.steps - 1);
    }
    // Pin the endpoint so rounding cannot push it past pi/4.
    out.back() = cfg.r_stop;
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const auto rs = r_grid(cfg);
    std::vector<SweepRow> rows;
    rows.reserve(cfg.alpha_values.size() * rs.size());
    for (double alpha : cfg.alpha_values) {
        for (double r : rs) {
            const RindlerParams p(r, alpha, cfg.phi);
            const DensityMatrix rho = reduced_alice_region_i(p);
            SweepRow row{alpha, r, {}};
            for (auto m : cfg.measures) row.values.push_back(evaluate(m, p, rho));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    std::string out = "alpha,r";
    for (auto m : cfg.measures) out += std::string(",") + measure_name(m);
    out += '\n';
    for (const auto& row : rows) {
        out += format_number(row.alpha) + ',' + format_number(row.r);
        for (double v : row.values) out += ',' + format_number(v);
        out += '\n';
    }
    return out;
}

std::string format_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    using nlohmann::ordered_json;
    ordered_json config;
    config["alpha"] = cfg.alpha_values;
    config["r_start"] = cfg.r_start;
    config["r_stop"] = cfg.r_stop;
    config["steps"] = cfg.steps;
    config["phi"] = cfg.phi;
    std::vector<std::string> names;
    for (auto m : cfg.measures) names.emplace_back(measure_name(m));
    config["measures"] = names;

    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["alpha"] = row.alpha;
        jr["r"] = row.r;
        for (std::size_t i = 0; i < names.size(); ++i) jr[names[i]] = row.values[i];
        jrows.push_back(std::move(jr));
    }
    ordered_json doc;
    doc["config"] = std::move(config);
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + '\n';
}

void write_output(const SweepConfig& cfg, const std::string& text) {
    if (cfg.output == "-" || cfg.output.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + cfg.output + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing '" + cfg.output + "'");
}

std::string format_report(const MeasureReport& report) {
    std::ostringstream os;
    const auto& p = report.params;
    os << "alpha = " << format_number(p.alpha()) << '\n'
       << "beta = " << format_number(p.beta()) << '\n'
       << "r = " << format_number(p.r()) << '\n'
       << "phi = " << format_number(p.phi()) << '\n'
       << "entropy = " << format_number(report.entropy) << '\n'
       << "negativity = " << format_number(report.negativity) << '\n'
       << "purity = " << format_number(report.purity) << '\n'
       << "coherence = " << format_number(report.coherence) << '\n';
    return os.str();
}

UnruhReport unruh_report(double acceleration, double omega, UnitSystem units) {
    if (!(acceleration > 0.0) || !std::isfinite(acceleration)) {
        throw UsageError("--accel", "must be positive");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) throw UsageError("--omega", "must be positive");
    const auto k = PhysicalConstants::of(units);
    const double r = r_from_acceleration({acceleration, omega}, k);
    const double t = unruh_temperature(acceleration, k);
    return {acceleration, omega, units, r, t, fd_occupation(r), fermi_dirac(omega, t, k)};
}

std::string format_unruh(const UnruhReport& report) {
    std::ostringstream os;
    os << "units = " << (report.units == UnitSystem::SI ? "si" : "natural") << '\n'
       << "accel = " << format_number(report.acceleration) << '\n'
       << "omega = " << format_number(report.omega) << '\n'
       << "r = " << format_number(report.r) << '\n'
       << "temperature = " << format_number(report.temperature) << '\n'
       << "occupation = " << format_number(report.occupation) << '\n'
       << "fermi_dirac = " << format_number(report.fermi_dirac) << '\n';
    return os.str();
}

}  // namespace rqi::cli
