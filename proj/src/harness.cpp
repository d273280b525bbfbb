#include "maxaccel/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "maxaccel/accel_bounds.hpp"
#include "maxaccel/constants.hpp"
#include "maxaccel/embedded/repro_baseline.hpp"
#include "maxaccel/errors.hpp"
#include "maxaccel/json_output.hpp"
#include "maxaccel/london_bounds.hpp"
#include "maxaccel/london_sphere.hpp"
#include "maxaccel/speed_limit.hpp"
#include "text_table.hpp"

namespace maxaccel::harness {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

const char* to_string(Compare c) { return c == Compare::Log10 ? "log10" : "rel"; }

}  // namespace

const char* to_string(ReproStatus s) {
    switch (s) {
        case ReproStatus::Reproduced: return "REPRODUCED";
        case ReproStatus::InferredParams: return "INFERRED-PARAMS";
        case ReproStatus::Discrepant: return "DISCREPANT";
    }
    return "?";
}

ReproStatus parse_status(std::string_view text) {
    if (text == "REPRODUCED") return ReproStatus::Reproduced;
    if (text == "INFERRED-PARAMS") return ReproStatus::InferredParams;
    if (text == "DISCREPANT") return ReproStatus::Discrepant;
    throw ParseError("unknown reproduction status '" + std::string(text) + "'");
}

Baseline Baseline::parse(std::string_view text) {
    Baseline b;
    for (const auto& row : detail::table_rows(text)) {
        if (row.fields.size() != 4) {
            throw ParseError("baseline line " + std::to_string(row.line) +
                             ": expected 'id status tolerance compare'");
        }
        BaselineEntry e;
        e.id = row.fields[0];
        e.status = parse_status(row.fields[1]);
        e.tolerance = detail::parse_double(row.fields[2], row.line);
        if (row.fields[3] == "rel") {
            e.compare = Compare::Relative;
        } else if (row.fields[3] == "log10") {
            e.compare = Compare::Log10;
        } else {
            throw ParseError("baseline line " + std::to_string(row.line) + ": compare must be rel or log10");
        }
        b.entries_.push_back(std::move(e));
    }
    return b;
}

const Baseline& Baseline::committed() {
    static const Baseline baseline = parse(embedded::repro_baseline_txt);
    return baseline;
}

const BaselineEntry& Baseline::find(std::string_view id) const {
    for (const auto& e : entries_) {
        if (e.id == id) return e;
    }
    throw LookupError("no baseline entry for '" + std::string(id) + "'");
}

UnitPreference parse_unit_preference(std::string_view text) {
    if (text == "cgs") return UnitPreference::Cgs;
    if (text == "si") return UnitPreference::Si;
    if (text == "both") return UnitPreference::Both;
    throw ParseError("units must be cgs, si or both (got '" + std::string(text) + "')");
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "table") return OutputFormat::Table;
    throw ParseError("format must be json, csv or table (got '" + std::string(text) + "')");
}

RunConfig RunConfig::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config: top level must be an object");

    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "units") {
            if (!value.is_string()) throw ParseError("config: units must be a string");
            cfg.units = parse_unit_preference(value.get<std::string>());
        } else if (key == "format") {
            if (!value.is_string()) throw ParseError("config: format must be a string");
            cfg.format = parse_output_format(value.get<std::string>());
        } else if (key == "tolerances") {
            if (!value.is_object()) throw ParseError("config: tolerances must be an object");
            for (const auto& [id, tol] : value.items()) {
                Baseline::committed().find(id);
                if (!tol.is_number() || !(tol.get<double>() >= 0.0)) {
                    throw ParseError("config: tolerance for '" + id + "' must be a number >= 0");
                }
                cfg.tolerance_overrides[id] = tol.get<double>();
            }
        } else {
            throw ParseError("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

RunConfig RunConfig::from_environment() {
    const char* path = std::getenv(kConfigEnvVar);
    if (path == nullptr || *path == '\0') return {};
    return from_file(path);
}

bool ReproRow::regressed() const {
    return status == ReproStatus::Discrepant && baseline != ReproStatus::Discrepant;
}

namespace {

struct Target {
    std::string id;
    std::string label;
    std::string operation;
    Quantity quoted;
    Quantity computed;
    std::string cgs_unit;
    bool inferred = false;
    std::string note;
};

ReproRow evaluate(Target t, const RunConfig& config) {
    const BaselineEntry& base = Baseline::committed().find(t.id);
    ReproRow row;
    row.id = t.id;
    row.label = std::move(t.label);
    row.operation = std::move(t.operation);
    row.cgs_unit = std::move(t.cgs_unit);
    row.note = std::move(t.note);
    row.baseline = base.status;
    row.compare = base.compare;
    auto it = config.tolerance_overrides.find(t.id);
    row.tolerance = it != config.tolerance_overrides.end() ? it->second : base.tolerance;

    require_same_dimension(t.quoted.dimension(), t.computed.dimension(), t.id);
    const double p = t.quoted.value();
    const double c = t.computed.value();
    if (row.compare == Compare::Log10) {
        row.rel_dev = (p > 0.0 && c > 0.0) ? std::fabs(std::log10(c / p)) : INFINITY;
    } else {
        row.rel_dev = std::fabs(c - p) / std::fabs(p);
    }
    const bool within = row.rel_dev <= row.tolerance;
    row.status = !within         ? ReproStatus::Discrepant
                 : t.inferred    ? ReproStatus::InferredParams
                                 : ReproStatus::Reproduced;
    row.quoted_value = t.quoted;
    row.computed = t.computed;
    return row;
}

Quantity newton_per_coulomb(double v) { return from_si({v, "N/C"}); }
Quantity one(double v) { return {v, dim::dimensionless}; }

}  // namespace

std::vector<ReproRow> reproduce(const RunConfig& config) {
    namespace sl = speed_limit;
    const auto& k = constants();
    const Quantity v0{4.4e4, dim::velocity};
    const Quantity lambda{5e-6, dim::length};
    const london::Material material = london::reconstruction_material();
    const london::FermiStats stats = london::fermi_stats(material, {0.0, dim::temperature});

    std::vector<Target> targets;

    {
        const double e1 = 1e-12;
        const sl::QuantumState state({{0.0, 0.5}, {e1, 0.5}});
        const auto res = sl::first_orthogonality_time(state, 4.0 * k.hbar / e1);
        const double t = res.found() ? std::get<sl::FoundZero>(res.kind).time : NAN;
        const double t_ml = *res.bounds.margolus_levitin;
        const double t_h = *res.bounds.heisenberg;
        targets.push_back({"ml_two_level_saturation",
                           "two-level state saturates both speed limits (t / t_ML)",
                           "speed_limit::first_orthogonality_time", one(1.0), one(t / t_ml), "1",
                           false,
                           "state {(0, 1/2), (1e-12 erg, 1/2)}; t / t_H = " + fmt("%.12g", t / t_h)});
    }
    {
        const accel::ParticleSpec e = accel::ParticleSpec::electron();
        const Quantity am = accel::maximal_acceleration(e);
        const Quantity avg = accel::avg_acceleration_bound(e.rest_energy());
        const Quantity rate = accel::rate_bound(e.rest_energy(), constant("c"));
        targets.push_back({"ma_rest_frame_identity",
                           "2cE/hbar at E = m c^2 equals 2 m c^3 / hbar (ratio)",
                           "accel::avg_acceleration_bound / accel::maximal_acceleration", one(1.0),
                           avg / am, "1", false,
                           "A_m(electron) = " + fmt("%.6e", am.value()) +
                               " cm/s^2; rate_bound(mc^2, c) / A_m = " +
                               fmt("%.15g", (rate / am).value())});
    }
    const Quantity v_surface = london::surface_velocity(material, lambda, material.critical_field);
    targets.push_back({"surface_velocity", "superelectron surface speed v0",
                       "london::surface_velocity", v0, v_surface, "cm/s", true,
                       "reconstructed lambda = 5e-6 cm, surface field B_c = 500 G"});
    targets.push_back({"statistical_velocity_gap", "Fermi-gas dv / v0 (order of magnitude)",
                       "london::fermi_stats", one(1e3), stats.velocity_spread / v0, "1", true,
                       "eps_F = 4.5e-12 erg, T = 0; dv = " +
                           fmt("%.6e", stats.velocity_spread.value()) + " cm/s"});
    {
        const auto report = london::reality_condition(stats.energy_spread, material.critical_field);
        targets.push_back({"reality_condition_at_Bc",
                           "reality condition dE >= mu_B B_r holds at B_r = B_c (1 = holds)",
                           "london::reality_condition", one(1.0),
                           one(report.satisfied ? 1.0 : 0.0), "1", false,
                           "mu_B B_c / dE = " +
                               fmt("%.6e", report.lhs.value() / report.rhs.value()) +
                               "; B_r* = dE / mu_B = " +
                               fmt("%.6e", london::reality_threshold(stats.energy_spread).value()) +
                               " G"});
    }
    targets.push_back({"er_equator_no_field", "equator E_r bound, B_theta = 0",
                       "london::er_bound_equator", newton_per_coulomb(4.2),
                       london::er_bound_equator(v0, {0.0, dim::field}), "statvolt/cm", false,
                       "v0 = 4.4e4 cm/s"});
    {
        const Quantity inferred = london::infer_equator_polar_field(v0, newton_per_coulomb(69.0));
        const double rounded = std::stod(fmt("%.2e", inferred.value()));
        targets.push_back({"er_equator_with_field", "equator E_r bound with inferred B_theta",
                           "london::er_bound_equator", newton_per_coulomb(69.0),
                           london::er_bound_equator(v0, {rounded, dim::field}), "statvolt/cm",
                           true,
                           "B_theta = " + fmt("%.6g", inferred.value()) +
                               " G inferred from the quoted bound, evaluated at " +
                               fmt("%.3g", rounded) + " G"});
    }
    targets.push_back(
        {"er_london_surface", "London radial field at the surface",
         "london::er_london", newton_per_coulomb(0.32), london::er_london(material, v0, lambda),
         "statvolt/cm", false,
         "not reproducible: the boundary-layer value (m/e) v0^2 / lambda with v0 = 4.4e4 cm/s "
         "and lambda = 5e-6 cm is ~22 N/C, and no consistent parameter set gives 0.32 N/C; "
         "both E_r bounds hold for either value"});
    {
        const london::SphereProblem problem({20.0 * lambda.value(), dim::length},
                                            {500.0 / 1.5, dim::field}, material);
        const london::ConsistencyScan scan = london::ma_consistency_scan(problem, stats, 100, 100);
        const double fraction =
            1.0 - static_cast<double>(scan.violations) / static_cast<double>(scan.points);
        targets.push_back({"sphere_ma_consistency",
                           "convective acceleration within the rate bound (fraction of grid)",
                           "london::ma_consistency_scan", one(1.0), one(fraction), "1", false,
                           "R = 1e-4 cm, B0 = 333.3 G, 100x100 grid; max acceleration / bound = " +
                               fmt("%.6e", scan.max_ratio)});
    }

    std::vector<ReproRow> rows;
    rows.reserve(targets.size());
    for (auto& t : targets) rows.push_back(evaluate(std::move(t), config));
    return rows;
}

int reproduction_exit_code(const std::vector<ReproRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.regressed(); })
               ? 3
               : 0;
}

namespace {

struct View {
    std::string name;  // "cgs" or "si"
    DisplayValue quoted;
    DisplayValue computed;
};

std::vector<View> views(const ReproRow& row, UnitPreference pref) {
    std::vector<View> out;
    if (pref != UnitPreference::Si) {
        out.push_back({"cgs", {row.quoted_value.value(), row.cgs_unit},
                       {row.computed.value(), row.cgs_unit}});
    }
    if (pref != UnitPreference::Cgs) {
        out.push_back({"si", to_si(row.quoted_value), to_si(row.computed)});
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string render_json(const std::vector<ReproRow>& rows, const RunConfig& config) {
    using json_output::Json;
    using json_output::number;
    Json out;
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["id"] = row.id;
        j["label"] = row.label;
        j["operation"] = row.operation;
        Json quoted, computed;
        for (const auto& v : views(row, config.units)) {
            quoted[v.name] = json_output::value_with_unit(v.quoted.value, v.quoted.unit);
            computed[v.name] = json_output::value_with_unit(v.computed.value, v.computed.unit);
        }
        j["quoted_value"] = quoted;
        j["computed"] = computed;
        j["rel_dev"] = number(row.rel_dev);
        j["compare"] = to_string(row.compare);
        j["tolerance"] = number(row.tolerance);
        j["status"] = to_string(row.status);
        j["baseline_status"] = to_string(row.baseline);
        j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    out["rows"] = std::move(arr);
    out["regressions"] = std::count_if(rows.begin(), rows.end(),
                                       [](const ReproRow& r) { return r.regressed(); });
    return json_output::dump(out);
}

std::string render_csv(const std::vector<ReproRow>& rows, const RunConfig& config) {
    std::ostringstream out;
    out << "id,label,operation";
    if (!rows.empty()) {
        for (const auto& v : views(rows.front(), config.units)) {
            out << ",quoted_" << v.name << ",computed_" << v.name << ",unit_" << v.name;
        }
    }
    out << ",rel_dev,compare,tolerance,status,baseline_status,note\n";
    for (const auto& row : rows) {
        out << row.id << ',' << csv_field(row.label) << ',' << csv_field(row.operation);
        for (const auto& v : views(row, config.units)) {
            out << ',' << fmt("%.12g", v.quoted.value) << ',' << fmt("%.12g", v.computed.value)
                << ',' << csv_field(v.quoted.unit);
        }
        out << ',' << fmt("%.12g", row.rel_dev) << ',' << to_string(row.compare) << ','
            << fmt("%.12g", row.tolerance) << ',' << to_string(row.status) << ','
            << to_string(row.baseline) << ',' << csv_field(row.note) << '\n';
    }
    return out.str();
}

std::string render_table(const std::vector<ReproRow>& rows, const RunConfig& config) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-26s %-16s %-14s %-14s %-12s %s\n", "id", "status", "quoted",
                  "computed", "unit", "deviation");
    out << line;
    for (const auto& row : rows) {
        for (const auto& v : views(row, config.units)) {
            std::snprintf(line, sizeof line, "%-26s %-16s %-14.6g %-14.6g %-12s %.3g (%s)\n",
                          row.id.c_str(), to_string(row.status), v.quoted.value, v.computed.value,
                          v.quoted.unit.c_str(), row.rel_dev, to_string(row.compare));
            out << line;
        }
        if (row.regressed()) out << "  ^ regression: baseline " << to_string(row.baseline) << '\n';
    }
    return out.str();
}

}  // namespace

std::string render(const std::vector<ReproRow>& rows, const RunConfig& config) {
    switch (config.format) {
        case OutputFormat::Json: return render_json(rows, config);
        case OutputFormat::Csv: return render_csv(rows, config);
        case OutputFormat::Table: return render_table(rows, config);
    }
    return {};
}

}  // namespace maxaccel::harness
