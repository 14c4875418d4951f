// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

// rindler_qi: entanglement between an inertial and an accelerated observer.
//
//   rindler_qi measure --alpha 0.7 --r 0.3 [--phi 0]
//   rindler_qi measure --alpha 1 --accel 2 --omega 1 [--units natural|si]
//   rindler_qi sweep --alpha 0,0.70710678,1 --steps 50 --measures entropy
//   rindler_qi sweep --config sweep.conf --output out.csv
//   rindler_qi unruh --accel 6.2831853 --omega 1
//   rindler_qi check

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rqi/check.hpp"
#include "rqi/errors.hpp"
#include "rqi/measures.hpp"
#include "rqi/sweep.hpp"

using namespace rqi;
using namespace rqi::cli;

namespace {

UnitSystem parse_units(const std::string& s) {
    if (s == "natural") return UnitSystem::Natural;
    if (s == "si") return UnitSystem::SI;
    throw UsageError("--units", "expected natural or si, got '" + s + "'");
}

struct MeasureArgs {
    double alpha = 1.0;
    std::optional<double> r;
    std::optional<double> accel;
    std::optional<double> omega;
    double phi = 0.0;
    std::string units = "natural";
};

int cmd_measure(const MeasureArgs& args) {
    if (!(args.alpha >= 0.0 && args.alpha <= 1.0)) {
        throw UsageError("--alpha", "must lie in [0, 1]");
    }
    if (!(args.phi >= 0.0 && args.phi < 2.0 * kPi)) throw UsageError("--phi", "must lie in [0, 2pi)");
    if (args.r && args.accel) throw UsageError("--r", "give either --r or --accel, not both");
    if (args.omega && !args.accel) throw UsageError("--omega", "only valid together with --accel");

    double r = 0.0;
    if (args.accel) {
        r = unruh_report(*args.accel, args.omega.value_or(1.0), parse_units(args.units)).r;
    } else if (args.r) {
        r = *args.r;
        if (!(r >= 0.0 && r <= kMaxR)) throw UsageError("--r", "must lie in [0, pi/4]");
    } else {
        throw UsageError("--r", "one of --r or --accel is required");
    }
    std::cout << format_report(measure_all(RindlerParams(r, args.alpha, args.phi)));
    return kOk;
}

int cmd_sweep(const std::optional<std::string>& config_path, const KeyValues& flags) {
    KeyValues file;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw IoError("cannot read config file '" + *config_path + "'");
        file = parse_key_values(in);
    }
    const SweepConfig cfg = resolve_sweep_config(file, flags);
    const auto rows = run_sweep(cfg);
    write_output(cfg, cfg.format == OutputFormat::Json ? format_json(cfg, rows)
                                                       : format_csv(cfg, rows));
    return kOk;
}

int cmd_check() {
    const auto start = std::chrono::steady_clock::now();
    const auto results = check::run_all();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const check::SuiteResult* first_failure = nullptr;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
        if (!r.passed && !first_failure) first_failure = &r;
    }
    std::cout << results.size() << " suites, " << format_number(seconds) << " s\n";
    if (first_failure) {
        std::cerr << "first failure in " << first_failure->name << ": " << first_failure->detail
                  << '\n';
        return kCheckFailed;
    }
    return kOk;
}

int cmd_unruh(double accel, double omega, const std::string& units) {
    std::cout << format_unruh(unruh_report(accel, omega, parse_units(units)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement between inertial and uniformly accelerated Dirac-field modes"};
    app.require_subcommand(1);

    MeasureArgs margs;
    auto* measure = app.add_subcommand("measure", "Entropy, negativity, purity and coherence");
    measure->add_option("--alpha", margs.alpha, "vacuum entanglement weight in [0, 1]");
    measure->add_option("--r", margs.r, "acceleration parameter r in [0, pi/4]");
    measure->add_option("--accel", margs.accel, "proper acceleration (instead of --r)");
    measure->add_option("--omega", margs.omega, "mode frequency used with --accel (default 1)");
    measure->add_option("--phi", margs.phi, "Bogoliubov phase in [0, 2pi)");
    measure->add_option("--units", margs.units, "natural or si");

    std::optional<std::string> config_path;
    KeyValues sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Evaluate measures on an (alpha, r) grid");
    sweep->add_option("--config", config_path, "key = value config file");
    const std::pair<const char*, const char*> sweep_options[] = {
        {"alpha", "comma-separated alpha values"},
        {"r-start", "first r value"},
        {"r-stop", "last r value (inclusive)"},
        {"steps", "number of r points"},
        {"phi", "Bogoliubov phase"},
        {"measures", "comma-separated subset of entropy,negativity,purity,coherence,occupation"},
        {"output", "output path, '-' for stdout"},
        {"format", "csv or json"},
    };
    for (const auto& [name, help] : sweep_options) {
        std::string key = name;
        std::replace(key.begin(), key.end(), '-', '_');
        sweep->add_option_function<std::string>(
            std::string("--") + name, [&sweep_flags, key](const std::string& v) {
                sweep_flags[key] = v;
            },
            help);
    }

    auto* check = app.add_subcommand("check", "Run every invariant suite");

    double accel = 0.0;
    double omega = 1.0;
    std::string units = "natural";
    auto* unruh = app.add_subcommand("unruh", "Unruh temperature and occupation");
    unruh->add_option("--accel", accel, "proper acceleration")->required();
    unruh->add_option("--omega", omega, "mode frequency");
    unruh->add_option("--units", units, "natural or si");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*measure) return cmd_measure(margs);
        if (*sweep) return cmd_sweep(config_path, sweep_flags);
        if (*check) return cmd_check();
        if (*unruh) return cmd_unruh(accel, omega, units);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
