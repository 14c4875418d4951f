// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sweep.hpp
 * @brief Configuration, evaluation and formatting behind the rindler_qi CLI.
 */

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqi/measures.hpp"
#include "rqi/unruh.hpp"

namespace rqi::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

/// Bad flag or config value. `flag()` names the offending option.
class UsageError : public std::runtime_error {
  public:
    UsageError(std::string flag, const std::string& message)
        : std::runtime_error(flag + ": " + message), flag_(std::move(flag)) {}
    const std::string& flag() const { return flag_; }

  private:
    std::string flag_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Column order of sweep output.
enum class Measure { Entropy, Negativity, Purity, Coherence, Occupation };
inline constexpr Measure kAllMeasures[] = {Measure::Entropy, Measure::Negativity,
                                           Measure::Purity, Measure::Coherence,
                                           Measure::Occupation};
const char* measure_name(Measure m);

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    std::vector<double> alpha_values{0.0, 0.70710678118654757, 1.0};
    double r_start = 0.0;
    double r_stop = kMaxR;
    int steps = 50;
    double phi = 0.0;
    std::vector<Measure> measures{std::begin(kAllMeasures), std::end(kAllMeasures)};
    std::string output = "-";  ///< "-" is standard output
    OutputFormat format = OutputFormat::Csv;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat "key = value" lines; '#' starts a comment. Throws UsageError on a
/// line without '='.
KeyValues parse_key_values(std::istream& in);

/**
 * Builds a SweepConfig from config-file values overlaid by flag values (flags
 * win). Recognized keys: alpha, r_start, r_stop, steps, phi, measures, output,
 * format. Validates the result.
 */
SweepConfig resolve_sweep_config(const KeyValues& file, const KeyValues& flags);

void validate(const SweepConfig& cfg);

/// The r grid: `steps` points spanning [r_start, r_stop] inclusive.
std::vector<double> r_grid(const SweepConfig& cfg);

struct SweepRow {
    double alpha;
    double r;
    std::vector<double> values;  ///< one per cfg.measures entry, same order
};

/// alpha outer, r inner.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// 17 significant digits, shortest %g form.
std::string format_number(double x);

std::string format_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows);
std::string format_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows);

/// Writes to cfg.output or standard output. Throws IoError if unwritable.
void write_output(const SweepConfig& cfg, const std::string& text);

std::string format_report(const MeasureReport& report);

struct UnruhReport {
    double acceleration;
    double omega;
    UnitSystem units;
    double r;
    double temperature;
    double occupation;
    double fermi_dirac;
};

UnruhReport unruh_report(double acceleration, double omega, UnitSystem units);
std::string format_unruh(const UnruhReport& report);

}  // namespace rqi::cli
