#pragma once

// Reproduction table: each quoted number is recomputed from the pinned
// constants and compared with a committed baseline status.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "maxaccel/units.hpp"

namespace maxaccel::harness {

enum class ReproStatus { Reproduced, InferredParams, Discrepant };
enum class Compare { Relative, Log10 };

const char* to_string(ReproStatus s);
ReproStatus parse_status(std::string_view text);

struct BaselineEntry {
    std::string id;
    ReproStatus status = ReproStatus::Reproduced;
    double tolerance = 0.0;
    Compare compare = Compare::Relative;
};

/// Rows of data/repro_baseline.txt.
class Baseline {
  public:
    static Baseline parse(std::string_view text);
    static const Baseline& committed();

    const BaselineEntry& find(std::string_view id) const;
    const std::vector<BaselineEntry>& entries() const { return entries_; }

  private:
    std::vector<BaselineEntry> entries_;
};

enum class UnitPreference { Cgs, Si, Both };
enum class OutputFormat { Json, Csv, Table };

UnitPreference parse_unit_preference(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

/// Defaults: units = both, format = json, no tolerance overrides.
///
/// JSON config file schema (every key optional, unknown keys rejected):
///   {"units": "cgs"|"si"|"both", "format": "json"|"csv"|"table",
///    "tolerances": {"<row id>": <number>, ...}}
struct RunConfig {
    UnitPreference units = UnitPreference::Both;
    OutputFormat format = OutputFormat::Json;
    std::map<std::string, double> tolerance_overrides;

    /// Throws ParseError on malformed JSON, unknown keys or bad values, and
    /// LookupError on a tolerance override for an unknown row.
    static RunConfig from_json(std::string_view text);
    static RunConfig from_file(const std::string& path);
    /// Reads the file named by MAXACCEL_CONFIG, or returns the defaults.
    static RunConfig from_environment();
};

inline constexpr const char* kConfigEnvVar = "MAXACCEL_CONFIG";

struct ReproRow {
    std::string id;
    std::string label;
    std::string operation;  // library call that produced `computed`
    Quantity quoted_value;
    Quantity computed;
    std::string cgs_unit;   // label for the CGS value of both quantities
    double rel_dev = 0.0;   // |log10(computed/quoted)| for Compare::Log10 rows
    double tolerance = 0.0;
    Compare compare = Compare::Relative;
    ReproStatus status = ReproStatus::Reproduced;
    ReproStatus baseline = ReproStatus::Reproduced;
    std::string note;

    /// DISCREPANT where the baseline does not allow it.
    bool regressed() const;
};

std::vector<ReproRow> reproduce(const RunConfig& config = {});

/// 0 when no row regressed, 3 otherwise.
int reproduction_exit_code(const std::vector<ReproRow>& rows);

std::string render(const std::vector<ReproRow>& rows, const RunConfig& config);

}  // namespace maxaccel::harness
