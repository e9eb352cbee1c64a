#include "sgl_cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>

#include "sgl/errors.hpp"

namespace sgl::cli {

using nlohmann::json;

void RunConfig::validate() const {
    model.validate();
    drive.validate();
    solver.validate();
    validate_drive_compatibility(model, drive);
    if (!(amin >= 0.0) || !(amax > amin) || !(da > 0.0))
        throw ValidationError("amplitude grid needs 0 <= amin < amax and da > 0");
    if (!(fmin > 0.0) || !(fmax > fmin) || !(df > 0.0))
        throw ValidationError("frequency grid needs 0 < fmin < fmax and df > 0");
    if (!(sim_time > 0.0)) throw ValidationError("sim_time must be > 0");
    if (!(jump_factor > 1.0)) throw ValidationError("jump_factor must be > 1");
    if (xi_points < 2) throw ValidationError("xi_points must be >= 2");
    if (out.empty()) throw ValidationError("out must name a directory");
    if (stride && *stride < 1) throw ValidationError("stride must be >= 1");
    if (snapshot_stride < 0) throw ValidationError("snapshot_stride must be >= 0");
}

SweepSpec RunConfig::amplitude_sweep() const {
    SweepSpec spec;
    spec.variable = SweepVariable::amplitude;
    spec.lo = amin;
    spec.hi = amax;
    spec.step = da;
    spec.drive = drive;
    spec.sim_time = sim_time;
    spec.params = model;
    spec.solver = solver;
    spec.jump_factor = jump_factor;
    return spec;
}

json to_json(const RunConfig& c) {
    json j;
    j["c"] = c.model.c;
    j["beta"] = c.model.beta;
    j["gamma"] = c.model.gamma;
    j["m2"] = c.model.m2;
    j["J"] = c.model.J;
    if (std::isinf(c.model.R))
        j["R"] = "inf";
    else
        j["R"] = c.model.R;
    j["N"] = c.model.N;
    j["N0"] = c.model.N0;
    j["sponge"] = std::string(to_string(c.model.sponge));
    j["closure"] = std::string(to_string(c.model.closure));

    j["amplitude"] = c.drive.amplitude;
    j["omega"] = c.drive.omega;
    j["ramp_steps"] = c.drive.ramp_steps;
    j["shutoff_step"] = c.drive.shutoff_step ? json(*c.drive.shutoff_step) : json(nullptr);

    j["dt"] = c.solver.dt;
    j["steps"] = c.solver.steps;
    j["newton_tol"] = c.solver.newton_tol;
    j["newton_tol_audit"] = c.solver.newton_tol_audit;
    j["newton_max_iter"] = c.solver.newton_max_iter;
    j["scheme"] = std::string(to_string(c.solver.scheme));

    j["amin"] = c.amin;
    j["amax"] = c.amax;
    j["da"] = c.da;
    j["fmin"] = c.fmin;
    j["fmax"] = c.fmax;
    j["df"] = c.df;
    j["sim_time"] = c.sim_time;
    j["jump_factor"] = c.jump_factor;
    j["xi_points"] = c.xi_points;

    j["out"] = c.out;
    j["stride"] = c.stride ? json(*c.stride) : json(nullptr);
    j["snapshot_stride"] = c.snapshot_stride;
    return j;
}

namespace {

double as_double(const json& v, const std::string& key) {
    if (!v.is_number()) throw ValidationError("config key '" + key + "' must be a number");
    return v.get<double>();
}

long as_integer(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ValidationError("config key '" + key + "' must be an integer");
    return v.get<long>();
}

int as_int(const json& v, const std::string& key) {
    const long x = as_integer(v, key);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ValidationError("config key '" + key + "' is out of range");
    return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string()) throw ValidationError("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"c", [](RunConfig& c, const json& v, const std::string& k) { c.model.c = as_double(v, k); }},
        {"beta", [](RunConfig& c, const json& v, const std::string& k) { c.model.beta = as_double(v, k); }},
        {"gamma", [](RunConfig& c, const json& v, const std::string& k) { c.model.gamma = as_double(v, k); }},
        {"m2", [](RunConfig& c, const json& v, const std::string& k) { c.model.m2 = as_double(v, k); }},
        {"J", [](RunConfig& c, const json& v, const std::string& k) { c.model.J = as_double(v, k); }},
        {"R",
         [](RunConfig& c, const json& v, const std::string& k) {
             if (v.is_string()) {
                 if (v.get<std::string>() != "inf")
                     throw ValidationError("config key 'R' must be a number or \"inf\"");
                 c.model.R = std::numeric_limits<double>::infinity();
             } else {
                 c.model.R = as_double(v, k);
             }
         }},
        {"N", [](RunConfig& c, const json& v, const std::string& k) { c.model.N = as_int(v, k); }},
        {"N0", [](RunConfig& c, const json& v, const std::string& k) { c.model.N0 = as_int(v, k); }},
        {"sponge",
         [](RunConfig& c, const json& v, const std::string& k) {
             c.model.sponge = parse_sponge_mode(as_string(v, k));
         }},
        {"closure",
         [](RunConfig& c, const json& v, const std::string& k) {
             c.model.closure = parse_boundary_closure(as_string(v, k));
         }},
        {"amplitude",
         [](RunConfig& c, const json& v, const std::string& k) { c.drive.amplitude = as_double(v, k); }},
        {"omega", [](RunConfig& c, const json& v, const std::string& k) { c.drive.omega = as_double(v, k); }},
        {"ramp_steps",
         [](RunConfig& c, const json& v, const std::string& k) { c.drive.ramp_steps = as_int(v, k); }},
        {"shutoff_step",
         [](RunConfig& c, const json& v, const std::string& k) {
             if (v.is_null())
                 c.drive.shutoff_step.reset();
             else
                 c.drive.shutoff_step = as_integer(v, k);
         }},
        {"dt", [](RunConfig& c, const json& v, const std::string& k) { c.solver.dt = as_double(v, k); }},
        {"steps", [](RunConfig& c, const json& v, const std::string& k) { c.solver.steps = as_integer(v, k); }},
        {"newton_tol",
         [](RunConfig& c, const json& v, const std::string& k) { c.solver.newton_tol = as_double(v, k); }},
        {"newton_tol_audit",
         [](RunConfig& c, const json& v, const std::string& k) {
             c.solver.newton_tol_audit = as_double(v, k);
         }},
        {"newton_max_iter",
         [](RunConfig& c, const json& v, const std::string& k) {
             c.solver.newton_max_iter = as_int(v, k);
         }},
        {"scheme",
         [](RunConfig& c, const json& v, const std::string& k) {
             c.solver.scheme = parse_scheme(as_string(v, k));
         }},
        {"amin", [](RunConfig& c, const json& v, const std::string& k) { c.amin = as_double(v, k); }},
        {"amax", [](RunConfig& c, const json& v, const std::string& k) { c.amax = as_double(v, k); }},
        {"da", [](RunConfig& c, const json& v, const std::string& k) { c.da = as_double(v, k); }},
        {"fmin", [](RunConfig& c, const json& v, const std::string& k) { c.fmin = as_double(v, k); }},
        {"fmax", [](RunConfig& c, const json& v, const std::string& k) { c.fmax = as_double(v, k); }},
        {"df", [](RunConfig& c, const json& v, const std::string& k) { c.df = as_double(v, k); }},
        {"sim_time", [](RunConfig& c, const json& v, const std::string& k) { c.sim_time = as_double(v, k); }},
        {"jump_factor",
         [](RunConfig& c, const json& v, const std::string& k) { c.jump_factor = as_double(v, k); }},
        {"xi_points", [](RunConfig& c, const json& v, const std::string& k) { c.xi_points = as_int(v, k); }},
        {"out", [](RunConfig& c, const json& v, const std::string& k) { c.out = as_string(v, k); }},
        {"stride",
         [](RunConfig& c, const json& v, const std::string& k) {
             if (v.is_null())
                 c.stride.reset();
             else
                 c.stride = as_integer(v, k);
         }},
        {"snapshot_stride",
         [](RunConfig& c, const json& v, const std::string& k) { c.snapshot_stride = as_integer(v, k); }},
    };
    return table;
}

}  // namespace

RunConfig from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    RunConfig config;
    const auto& table = setters();
    for (const auto& [key, value] : j.items()) {
        const auto it = table.find(key);
        if (it == table.end()) throw ValidationError("unknown config key '" + key + "'");
        it->second(config, value, key);
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("invalid JSON in '" + path.string() + "': " + e.what());
    }
    return from_json(j);
}

}  // namespace sgl::cli
