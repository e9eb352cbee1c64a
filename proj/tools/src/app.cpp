#include "sgl_cli/app.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgl/errors.hpp"
#include "sgl/simulation.hpp"
#include "sgl/stability.hpp"
#include "sgl/supratransmission.hpp"
#include "sgl_cli/outputs.hpp"
#include "sgl_cli/run_config.hpp"

namespace sgl::cli {

namespace {

using nlohmann::json;

/// Command-line values; each one overrides the config only when given.
struct Overrides {
    std::string config_path;
    std::optional<std::string> scheme;
    std::optional<std::string> out;
    std::optional<double> dt;
    std::optional<long> steps;
    std::optional<double> amplitude;
    std::optional<double> omega;
    std::optional<double> amin, amax, da;
    std::optional<double> fmin, fmax, df;
    std::optional<int> xi_points;
    std::optional<long> stride;
};

void add_common_options(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config_path, "JSON run configuration");
    cmd.add_option("--scheme", o.scheme, "Discretization: s1 or s2");
    cmd.add_option("--out", o.out, "Output directory");
    cmd.add_option("--dt", o.dt, "Time step");
    cmd.add_option("--steps", o.steps, "Number of time steps");
    cmd.add_option("--amplitude", o.amplitude, "Drive amplitude");
    cmd.add_option("--omega", o.omega, "Drive frequency");
    cmd.add_option("--amin", o.amin, "Amplitude sweep start");
    cmd.add_option("--amax", o.amax, "Amplitude sweep end");
    cmd.add_option("--da", o.da, "Amplitude sweep step");
    cmd.add_option("--fmin", o.fmin, "Frequency sweep start");
    cmd.add_option("--fmax", o.fmax, "Frequency sweep end");
    cmd.add_option("--df", o.df, "Frequency sweep step");
    cmd.add_option("--xi-points", o.xi_points, "Wavenumber grid size for stability scans");
    cmd.add_option("--stride", o.stride, "Steps between energy records");
}

RunConfig resolve_config(const Overrides& o) {
    RunConfig c = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    if (o.scheme) c.solver.scheme = parse_scheme(*o.scheme);
    if (o.out) c.out = *o.out;
    if (o.dt) c.solver.dt = *o.dt;
    if (o.steps) c.solver.steps = *o.steps;
    if (o.amplitude) c.drive.amplitude = *o.amplitude;
    if (o.omega) c.drive.omega = *o.omega;
    if (o.amin) c.amin = *o.amin;
    if (o.amax) c.amax = *o.amax;
    if (o.da) c.da = *o.da;
    if (o.fmin) c.fmin = *o.fmin;
    if (o.fmax) c.fmax = *o.fmax;
    if (o.df) c.df = *o.df;
    if (o.xi_points) c.xi_points = *o.xi_points;
    if (o.stride) c.stride = *o.stride;
    c.validate();
    return c;
}

json base_manifest(const std::string& command, const RunConfig& c) {
    json m;
    m["tool"] = "sglattice";
    m["command"] = command;
    m["config"] = to_json(c);
    m["scheme"] = std::string(to_string(c.solver.scheme));
    return m;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_simulate(const RunConfig& c, std::ostream& out) {
    SimulationOptions options;
    options.energy_stride = c.resolved_stride(false);
    options.snapshot_stride = c.snapshot_stride;
    const auto result = simulate(c.model, c.drive, c.solver, options);

    ArtifactSet files;
    files.add("energy.csv", energy_csv(result.ledger.records));
    files.add("snapshots.csv", snapshots_csv(result.snapshots));

    json m = base_manifest("simulate", c);
    m["grid"] = {{"dt", c.solver.dt},
                 {"steps", c.solver.steps},
                 {"N", c.model.N},
                 {"energy_stride", options.energy_stride},
                 {"snapshot_stride", options.snapshot_stride}};
    m["results"] = {{"final_energy", result.final_energy},
                    {"max_newton_iters", result.max_newton_iters},
                    {"min_jacobian_dominance", result.min_jacobian_dominance}};
    files.write(c.out, std::move(m));
    out << "simulate: " << result.steps << " steps, final E = " << format_number(result.final_energy)
        << '\n';
    return exit_ok;
}

json sweep_summary(const ThresholdResult& r) {
    json j;
    j["threshold"] = optional_json(r.threshold);
    j["jump_ratio"] = r.jump_ratio;
    j["largest_jump_ratio"] = r.largest_jump_ratio;
    j["largest_jump_at"] = optional_json(r.largest_jump_at);
    j["max_newton_iters"] = r.max_newton_iters;
    return j;
}

int cmd_sweep_amplitude(const RunConfig& c, std::ostream& out) {
    const SweepSpec spec = c.amplitude_sweep();
    spec.validate();
    const auto result = sweep(spec);

    ArtifactSet files;
    files.add("sweep.csv", sweep_csv(result));
    json m = base_manifest("sweep-amplitude", c);
    m["grid"] = {{"variable", "amplitude"},
                 {"values", result.grid},
                 {"steps_per_point", spec.steps()}};
    m["results"] = sweep_summary(result);
    files.write(c.out, std::move(m));

    out << "sweep-amplitude: " << result.grid.size() << " points, threshold = "
        << (result.threshold ? format_number(*result.threshold) : std::string("none")) << '\n';
    return exit_ok;
}

int cmd_sweep_frequency(const RunConfig& c, std::ostream& out) {
    const SweepSpec spec = c.amplitude_sweep();
    spec.validate();
    const auto frequencies = uniform_grid(c.fmin, c.fmax, c.df);
    const std::vector<ParameterVariant> variants{{"base", c.model}};
    const auto series = frequency_diagram(spec, frequencies, variants).front();

    ArtifactSet files;
    files.add("diagram.csv", diagram_csv(series, c.model.c));
    json m = base_manifest("sweep-frequency", c);
    m["grid"] = {{"frequencies", frequencies},
                 {"amplitudes", spec.grid()},
                 {"steps_per_point", spec.steps()}};
    json per = json::array();
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        json row = sweep_summary(series.sweeps[i]);
        row["omega"] = frequencies[i];
        per.push_back(std::move(row));
    }
    m["results"] = {{"per_frequency", std::move(per)}};
    files.write(c.out, std::move(m));

    out << "sweep-frequency: " << frequencies.size() << " frequencies\n";
    return exit_ok;
}

int cmd_stability(const RunConfig& c, std::ostream& out) {
    const auto report =
        scan(c.solver.scheme, StabilityParams::from(c.model, c.solver.dt), c.xi_points);

    ArtifactSet files;
    files.add("stability.csv", stability_csv(report));
    json m = base_manifest("stability", c);
    m["grid"] = {{"xi_points", c.xi_points}, {"xi_min", 0.0}, {"xi_max", report.xi.back()}};
    m["results"] = {{"max_rho", report.max_rho},
                    {"max_inf_norm", report.max_inf_norm},
                    {"necessary_ok", report.necessary_ok},
                    {"sufficient_applicable", report.sufficient_applicable},
                    {"sufficient_ok", report.sufficient_ok},
                    {"corollary_ok", report.corollary_ok},
                    {"norm_condition_all_xi", report.norm_condition_all_xi}};
    files.write(c.out, std::move(m));

    out << "stability: max_rho = " << format_number(report.max_rho)
        << ", max_inf_norm = " << format_number(report.max_inf_norm) << '\n';
    return exit_ok;
}

int cmd_energy_audit(const RunConfig& c, std::ostream& out) {
    SimulationOptions options;
    options.energy_stride = c.resolved_stride(true);
    options.audit_tolerance = true;
    const auto result = simulate(c.model, c.drive, c.solver, options);
    const auto report = audit_trajectory(c.model, c.drive, c.solver.dt, result.ledger.records);

    json audit;
    audit["scheme"] = std::string(to_string(c.solver.scheme));
    audit["records"] = report.records;
    audit["max_identity_defect"] = report.max_identity_defect;
    audit["max_scaled_defect"] = report.max_scaled_defect;
    audit["final_energy"] = report.final_energy;
    audit["max_post_shutoff_drift"] = optional_json(report.max_post_shutoff_drift);
    audit["nonincreasing_after_shutoff"] =
        report.nonincreasing_after_shutoff ? json(*report.nonincreasing_after_shutoff) : json(nullptr);
    audit["strictly_decreasing_after_shutoff"] =
        report.strictly_decreasing_after_shutoff ? json(*report.strictly_decreasing_after_shutoff)
                                                 : json(nullptr);
    audit["telescoped_flux_error"] = optional_json(report.telescoped_flux_error);
    audit["telescoped_flux_relative_error"] = optional_json(report.telescoped_flux_relative_error);

    ArtifactSet files;
    files.add("energy.csv", energy_csv(result.ledger.records));
    files.add("audit.json", audit.dump(2) + "\n");
    json m = base_manifest("energy-audit", c);
    m["grid"] = {{"dt", c.solver.dt},
                 {"steps", c.solver.steps},
                 {"N", c.model.N},
                 {"energy_stride", options.energy_stride}};
    m["results"] = audit;
    files.write(c.out, std::move(m));

    out << "energy-audit: " << report.records << " records, max scaled defect = "
        << format_number(report.max_scaled_defect) << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Driven sine-Gordon lattice: simulation, sweeps, stability and energy audits",
                 "sglattice"};
    app.require_subcommand(1, 1);

    Overrides overrides;
    struct Command {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&, std::ostream&);
    };
    const std::vector<Command> commands = {
        {"simulate", "Run one simulation; writes energy.csv and snapshots.csv", cmd_simulate},
        {"sweep-amplitude", "Amplitude sweep with threshold detection; writes sweep.csv",
         cmd_sweep_amplitude},
        {"sweep-frequency", "Threshold versus drive frequency; writes diagram.csv",
         cmd_sweep_frequency},
        {"stability", "Von Neumann scan of the linearized scheme; writes stability.csv",
         cmd_stability},
        {"energy-audit", "Check the discrete energy identities; writes energy.csv and audit.json",
         cmd_energy_audit},
    };
    std::vector<CLI::App*> subs;
    for (const auto& cmd : commands) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        add_common_options(*sub, overrides);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const RunConfig config = resolve_config(overrides);
            return commands[i].run(config, out);
        } catch (const SolverError& e) {
            err << "solver error: " << e.what() << '\n';
            return exit_solver;
        } catch (const IoError& e) {
            err << "I/O error: " << e.what() << '\n';
            return exit_solver;
        } catch (const AuditPreconditionError& e) {
            err << "audit precondition: " << e.what() << '\n';
            return exit_validation;
        } catch (const Error& e) {
            err << "validation error: " << e.what() << '\n';
            return exit_validation;
        }
    }
    return exit_validation;
}

}  // namespace sgl::cli
