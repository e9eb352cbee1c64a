#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgl/energy.hpp"
#include "sgl/simulation.hpp"
#include "sgl/stability.hpp"
#include "sgl/supratransmission.hpp"

namespace sgl::cli {

/// Failure to create or write an artifact.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double value);

std::string energy_csv(std::span<const EnergyRecord> records);
std::string snapshots_csv(std::span<const Snapshot> snapshots);
std::string sweep_csv(const ThresholdResult& result);
std::string stability_csv(const StabilityReport& report);

/// One row per frequency: omega,threshold,jump_ratio,continuum_threshold.
/// Undetected thresholds are written as inf; the continuum value is nan
/// where it is undefined (omega > 1).
std::string diagram_csv(const DiagramSeries& series, double c);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Artifacts held in memory until every computation has succeeded, then
/// written together with a manifest listing their checksums.
class ArtifactSet {
public:
    void add(std::string name, std::string content);

    const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }

    /// Creates `out_dir`, writes every artifact, then manifest.json holding
    /// `manifest` plus an "artifacts" object of name -> sha256.
    void write(const std::filesystem::path& out_dir, nlohmann::json manifest) const;

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

}  // namespace sgl::cli
