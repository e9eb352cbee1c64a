#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "sgl/integrator.hpp"
#include "sgl/model.hpp"
#include "sgl/supratransmission.hpp"

namespace sgl::cli {

/// Everything a batch run needs, as one flat set of named keys.
///
/// JSON keys match the field names below. `R` accepts a positive number or
/// the string "inf"; `shutoff_step` and `stride` accept null.
struct RunConfig {
    ModelParams model{.c = 5.0, .N = 100, .N0 = 50, .sponge = SpongeMode::ramp};
    DriveSpec drive{.amplitude = 0.0, .omega = 0.8, .ramp_steps = 2000, .shutoff_step = std::nullopt};
    SolverConfig solver{.dt = 0.05, .steps = 12000};

    double amin = 2.0;
    double amax = 5.5;
    double da = 0.05;
    double fmin = 0.1;
    double fmax = 0.9;
    double df = 0.1;
    double sim_time = 600.0;
    double jump_factor = 5.0;

    int xi_points = 1025;

    std::string out = "out";
    /// Steps between energy records; unset means 1 for audits, 20 otherwise.
    std::optional<long> stride;
    long snapshot_stride = 100;

    void validate() const;

    long resolved_stride(bool audit) const { return stride.value_or(audit ? 1 : 20); }

    /// Amplitude sweep over [amin, amax] at the configured drive frequency.
    SweepSpec amplitude_sweep() const;

    bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& config);

/// Starts from the defaults and applies every key of `j`. Unknown keys,
/// wrong types and violated invariants raise ValidationError.
RunConfig from_json(const nlohmann::json& j);

/// Reads and parses a config file; any failure is a ValidationError.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace sgl::cli
