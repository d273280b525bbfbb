#include "maxaccel/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "maxaccel/accel_bounds.hpp"
#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "maxaccel/harness.hpp"
#include "maxaccel/json_output.hpp"
#include "maxaccel/london_bounds.hpp"
#include "maxaccel/london_sphere.hpp"
#include "text_table.hpp"

namespace maxaccel::cli {

namespace {

using json_output::Json;
using json_output::number;
using json_output::value_with_unit;

/// Flag combinations CLI11 cannot express; reported as usage errors.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kPhaseNote =
    "levels evolve as exp(-i E pi t / hbar); multiply times by pi for exp(-i E t / hbar)";

Json optional_seconds(const std::optional<double>& t) {
    if (!t) return nullptr;
    return value_with_unit(*t, "s");
}

// --- constants -------------------------------------------------------------

int run_constants(std::ostream& out) {
    Json arr = Json::array();
    for (const auto& e : ConstantsTable::pinned().entries()) {
        Json j;
        j["name"] = e.name;
        j["value"] = number(e.value.value());
        j["unit"] = e.unit;
        j["derived"] = e.derived;
        j["source"] = e.source;
        arr.push_back(std::move(j));
    }
    Json root;
    root["system"] = "gaussian-cgs";
    root["constants"] = std::move(arr);
    out << json_output::dump(root);
    return kExitOk;
}

// --- ml-time ---------------------------------------------------------------

struct MlTimeArgs {
    std::string state_path;
    std::optional<double> window;
    double tol = 1e-9;
    bool normalize = false;
    bool shift = false;
};

int run_ml_time(const MlTimeArgs& a, std::ostream& out) {
    namespace sl = speed_limit;
    std::ifstream in(a.state_path);
    if (!in) throw DomainError("cannot open state file '" + a.state_path + "'");
    auto levels = read_state_file(in);
    const sl::QuantumState state = a.shift       ? sl::QuantumState::shift_to_ground(std::move(levels))
                                   : a.normalize ? sl::QuantumState::normalized(std::move(levels))
                                                 : sl::QuantumState(std::move(levels));

    double window = 1.0;
    if (a.window) {
        window = *a.window;
    } else if (auto t = sl::bounds(state).tightest()) {
        window = 4.0 * *t;
    }
    sl::SearchOptions opts;
    opts.abs_tol = a.tol;

    sl::OrthogonalityResult res;
    try {
        res = sl::first_orthogonality_time(state, window, opts);
    } catch (const sl::SizingError& e) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e", e.suggested_window());
        throw DomainError(std::string(e.what()) + " (largest window within the sample budget: " +
                          buf + " s)");
    }

    Json j;
    if (const auto* z = std::get_if<sl::FoundZero>(&res.kind)) {
        j["result"] = "FoundZero";
        j["time"] = value_with_unit(z->time, "s");
        j["residual"] = number(z->residual);
        j["certificate_satisfied"] = sl::ml_certificate(state, z->time).satisfied;
    } else if (const auto* m = std::get_if<sl::InfimumOnly>(&res.kind)) {
        j["result"] = "InfimumOnly";
        j["time_at_min"] = value_with_unit(m->time_at_min, "s");
        j["min_abs_overlap"] = number(m->min_abs);
    } else {
        j["result"] = "NeverOrthogonal";
    }
    Json b;
    b["heisenberg"] = optional_seconds(res.bounds.heisenberg);
    b["margolus_levitin"] = optional_seconds(res.bounds.margolus_levitin);
    j["bounds"] = std::move(b);
    j["mean_energy"] = value_with_unit(res.mean_energy, "erg");
    j["energy_spread"] = value_with_unit(res.energy_spread, "erg");
    j["window"] = value_with_unit(window, "s");
    j["samples"] = res.samples;
    j["phase_convention"] = kPhaseNote;
    out << json_output::dump(j);
    return kExitOk;
}

// --- ma --------------------------------------------------------------------

int run_ma(const std::optional<double>& mass, const std::string& particle, std::ostream& out) {
    std::optional<accel::ParticleSpec> spec;
    std::string name = particle;
    if (mass) {
        spec.emplace(Quantity{*mass, dim::mass});
        name = "custom";
    } else if (particle == "electron") {
        spec = accel::ParticleSpec::electron();
    } else if (particle == "proton") {
        spec = accel::ParticleSpec::proton();
    } else {
        throw UsageError("--particle must be electron or proton");
    }
    const Quantity am = accel::maximal_acceleration(*spec);
    Json j;
    j["particle"] = name;
    j["mass"] = value_with_unit(spec->mass().value(), "g");
    j["A_m_cgs"] = value_with_unit(am.value(), "cm/s^2");
    const DisplayValue si = to_display(am, "m/s^2");
    j["A_m_si"] = value_with_unit(si.value, si.unit);
    out << json_output::dump(j);
    return kExitOk;
}

// --- sphere ----------------------------------------------------------------

struct SphereArgs {
    double radius = 0.0;
    double b0 = 0.0;
    std::optional<std::string> material;
    std::optional<double> density;
    std::string grid = "100x100";
    std::string out_path;
    bool pairs = false;
};

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    auto parse = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw UsageError("--grid must look like NRxNT, e.g. 100x100 (got '" + text + "')");
        }
        return v;
    };
    if (x == std::string::npos) parse("");
    return {parse(std::string_view(text).substr(0, x)), parse(std::string_view(text).substr(x + 1))};
}

int run_sphere(const SphereArgs& a, std::ostream& out) {
    if (a.material.has_value() == a.density.has_value()) {
        throw UsageError("sphere needs exactly one of --material or --n");
    }
    const auto [nr, nt] = parse_grid(a.grid);
    london::Material material = london::reconstruction_material();
    if (a.material) {
        material = london::MaterialCatalog::presets().find(*a.material);
    } else {
        material = london::Material::electron_gas("custom", {*a.density, dim::number_density},
                                                  material.critical_field,
                                                  material.critical_temperature,
                                                  material.fermi_energy);
    }
    if (a.pairs) material = material.as_cooper_pairs();

    const london::SphereProblem problem({a.radius, dim::length}, {a.b0, dim::field}, material);
    const auto samples = london::field_map(problem, nr, nt);
    if (a.out_path.empty() || a.out_path == "-") {
        london::write_field_csv(out, samples);
        return kExitOk;
    }
    std::ofstream file(a.out_path);
    if (!file) throw DomainError("cannot write '" + a.out_path + "'");
    london::write_field_csv(file, samples);

    const london::SphereField field(problem);
    Json j;
    j["material"] = material.name;
    j["beta"] = value_with_unit(field.beta(), "1/cm");
    j["penetration_depth"] = value_with_unit(1.0 / field.beta(), "cm");
    j["beta_R"] = number(field.beta_radius());
    j["grid"] = {nr, nt};
    j["rows"] = samples.size();
    j["out"] = a.out_path;
    out << json_output::dump(j);
    return kExitOk;
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
    double v0 = 0.0;
    double b_theta = 0.0;
    bool verbatim = false;
    std::optional<double> b_r;
    std::optional<double> energy_spread;
    std::optional<double> velocity_spread;
    std::optional<double> v_phi;
    std::optional<double> er;  // N/C
};

int run_bounds(const BoundsArgs& a, std::ostream& out) {
    const bool general = a.energy_spread || a.velocity_spread || a.b_r || a.v_phi;
    if (general && !(a.energy_spread && a.velocity_spread)) {
        throw UsageError("the general bound needs both --dE and --dv");
    }
    const Quantity v0{a.v0, dim::velocity};
    const Quantity b_theta{a.b_theta, dim::field};

    Json j;
    j["form"] = general ? "general" : "equator";
    j["mode"] = a.verbatim ? "verbatim" : "repaired";
    Json inputs;
    inputs["v0"] = value_with_unit(a.v0, "cm/s");
    inputs["B_theta"] = value_with_unit(a.b_theta, "G");

    Quantity repaired;
    double verbatim = 0.0;
    if (general) {
        const double vphi = a.v_phi.value_or(a.v0);
        const double br = a.b_r.value_or(0.0);
        inputs["v_phi"] = value_with_unit(vphi, "cm/s");
        inputs["B_r"] = value_with_unit(br, "G");
        inputs["dE"] = value_with_unit(*a.energy_spread, "erg");
        inputs["dv"] = value_with_unit(*a.velocity_spread, "cm/s");
        const auto reality = london::reality_condition({*a.energy_spread, dim::energy},
                                                       {br, dim::field});
        j["inputs"] = std::move(inputs);
        j["reality_condition"] = json_output::bound_report(reality, "erg");
        if (a.verbatim) {
            verbatim = london::er_bound_general_verbatim(vphi, br, a.b_theta, *a.energy_spread,
                                                         *a.velocity_spread);
        }
        repaired = london::er_bound_general({vphi, dim::velocity}, {br, dim::field}, b_theta,
                                            {*a.energy_spread, dim::energy},
                                            {*a.velocity_spread, dim::velocity});
    } else {
        j["inputs"] = std::move(inputs);
        if (a.verbatim) verbatim = london::er_bound_equator_verbatim(a.v0, a.b_theta);
        repaired = london::er_bound_equator(v0, b_theta);
    }

    if (a.verbatim) {
        j["bound"] = value_with_unit(verbatim, "cgs magnitude (terms of mixed dimension)");
        j["repaired_bound"] = json_output::quantity(repaired, "statvolt/cm");
    } else {
        j["bound"] = json_output::quantity(repaired, "statvolt/cm");
    }
    if (a.er) {
        const Quantity er = from_si({*a.er, "N/C"});
        j["report"] = json_output::bound_report(
            make_report("|E_r| <= bound", abs(er), Relation::LessEqual, repaired), "statvolt/cm");
    }
    out << json_output::dump(j);
    return kExitOk;
}

// --- reproduce -------------------------------------------------------------

int run_reproduce(const std::optional<std::string>& format,
                  const std::optional<std::string>& units, std::ostream& out) {
    harness::RunConfig cfg = harness::RunConfig::from_environment();
    if (format) cfg.format = harness::parse_output_format(*format);
    if (units) cfg.units = harness::parse_unit_preference(*units);
    const auto rows = harness::reproduce(cfg);
    out << harness::render(rows, cfg);
    return harness::reproduction_exit_code(rows);
}

}  // namespace

std::vector<speed_limit::EnergyLevel> read_state_file(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    double scale = 1.0;
    std::vector<speed_limit::EnergyLevel> levels;
    for (const auto& row : detail::table_rows(text)) {
        if (row.fields.size() == 2 && row.fields[0] == "unit") {
            if (!levels.empty()) {
                throw ParseError("state line " + std::to_string(row.line) +
                                 ": unit directive must precede the levels");
            }
            if (row.fields[1] == "eV") {
                scale = constants().electron_volt;
            } else if (row.fields[1] == "erg") {
                scale = 1.0;
            } else {
                throw ParseError("state line " + std::to_string(row.line) + ": unit must be eV or erg");
            }
            continue;
        }
        if (row.fields.size() != 2) {
            throw ParseError("state line " + std::to_string(row.line) + ": expected 'energy weight'");
        }
        levels.push_back({scale * detail::parse_double(row.fields[0], row.line),
                          detail::parse_double(row.fields[1], row.line)});
    }
    if (levels.empty()) throw ParseError("state file has no levels");
    return levels;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum speed limits, maximal acceleration and the London sphere", "maxaccel"};
    app.require_subcommand(1);

    auto* constants_cmd = app.add_subcommand("constants", "Print the pinned physical constants");

    MlTimeArgs ml;
    auto* ml_cmd = app.add_subcommand("ml-time", "First orthogonality time and its lower bounds");
    ml_cmd->add_option("--state", ml.state_path, "State file ('energy weight' per line)")
        ->required();
    ml_cmd->add_option("--window", ml.window, "Search window in s (default 4x largest bound)");
    ml_cmd->add_option("--tol", ml.tol, "Absolute tolerance on |S(t)|");
    ml_cmd->add_flag("--normalize", ml.normalize, "Rescale weights to unit sum");
    ml_cmd->add_flag("--shift-to-ground", ml.shift, "Measure energies from the lowest level");

    std::optional<double> ma_mass;
    std::string ma_particle = "electron";
    auto* ma_cmd = app.add_subcommand("ma", "Maximal acceleration 2 m c^3 / hbar");
    auto* mass_opt = ma_cmd->add_option("--mass", ma_mass, "Particle mass in g");
    ma_cmd->add_option("--particle", ma_particle, "electron or proton")->excludes(mass_opt);

    SphereArgs sp;
    auto* sphere_cmd = app.add_subcommand("sphere", "London field map of a superconducting sphere");
    sphere_cmd->add_option("--R", sp.radius, "Radius in cm")->required();
    sphere_cmd->add_option("--B0", sp.b0, "Applied field in G")->required();
    auto* mat_opt = sphere_cmd->add_option("--material", sp.material, "Preset material name");
    sphere_cmd->add_option("--n", sp.density, "Carrier density in cm^-3")->excludes(mat_opt);
    sphere_cmd->add_option("--grid", sp.grid, "NRxNT grid size");
    sphere_cmd->add_option("--out", sp.out_path, "CSV output path (default stdout)");
    sphere_cmd->add_flag("--pairs", sp.pairs, "Cooper-pair carriers (2m, 2e, n/2)");

    BoundsArgs bd;
    auto* bounds_cmd = app.add_subcommand("bounds", "Upper bound on the radial electric field");
    bounds_cmd->add_option("--v0", bd.v0, "Carrier speed in cm/s")->required();
    bounds_cmd->add_option("--Btheta", bd.b_theta, "Polar field in G")->required();
    bounds_cmd->add_flag("--verbatim", bd.verbatim, "Evaluate the formulas as typeset");
    bounds_cmd->add_option("--Br", bd.b_r, "Radial field in G (general form)");
    bounds_cmd->add_option("--dE", bd.energy_spread, "Energy spread in erg (general form)");
    bounds_cmd->add_option("--dv", bd.velocity_spread, "Velocity spread in cm/s (general form)");
    bounds_cmd->add_option("--vphi", bd.v_phi, "Azimuthal speed in cm/s (general form, default v0)");
    bounds_cmd->add_option("--Er", bd.er, "Radial field to test against the bound, N/C");

    std::optional<std::string> repro_format;
    std::optional<std::string> repro_units;
    auto* repro_cmd = app.add_subcommand("reproduce", "Recompute the quoted numbers");
    repro_cmd->add_option("--format", repro_format, "json, csv or table");
    repro_cmd->add_option("--units", repro_units, "cgs, si or both");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (constants_cmd->parsed()) return run_constants(out);
        if (ml_cmd->parsed()) return run_ml_time(ml, out);
        if (ma_cmd->parsed()) return run_ma(ma_mass, ma_particle, out);
        if (sphere_cmd->parsed()) return run_sphere(sp, out);
        if (bounds_cmd->parsed()) return run_bounds(bd, out);
        if (repro_cmd->parsed()) return run_reproduce(repro_format, repro_units, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace maxaccel::cli
