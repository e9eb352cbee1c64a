#include "sgl_cli/outputs.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <openssl/evp.h>

namespace sgl::cli {

std::string format_number(double value) {
    std::array<char, 40> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_number(v);
        first = false;
    }
    out += '\n';
}

}  // namespace

std::string energy_csv(std::span<const EnergyRecord> records) {
    std::string out = "step,time,E,rate_lhs,rate_rhs,boundary_flux,diss_beta,diss_gamma,I_out\n";
    for (const auto& r : records) {
        out += std::to_string(r.step);
        out += ',';
        append_row(out, {r.time, r.E, r.rate_lhs, r.rate_rhs, r.boundary_flux, r.diss_beta,
                         r.diss_gamma, r.I_out});
    }
    return out;
}

std::string snapshots_csv(std::span<const Snapshot> snapshots) {
    std::string out = "step,n,u\n";
    for (const auto& s : snapshots) {
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            out += std::to_string(s.step);
            out += ',';
            out += std::to_string(i + 1);
            out += ',';
            out += format_number(s.u[i]);
            out += '\n';
        }
    }
    return out;
}

std::string sweep_csv(const ThresholdResult& result) {
    std::string out = "value,E_final,is_threshold\n";
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
        out += format_number(result.grid[i]);
        out += ',';
        out += format_number(result.energies[i]);
        out += result.threshold_index == i ? ",true\n" : ",false\n";
    }
    return out;
}

std::string stability_csv(const StabilityReport& report) {
    std::string out = "xi,rho,inf_norm\n";
    for (std::size_t i = 0; i < report.xi.size(); ++i)
        append_row(out, {report.xi[i], report.rho[i], report.inf_norm[i]});
    return out;
}

std::string diagram_csv(const DiagramSeries& series, double c) {
    std::string out = "omega,threshold,jump_ratio,continuum_threshold\n";
    for (std::size_t i = 0; i < series.frequencies.size(); ++i) {
        const double omega = series.frequencies[i];
        const auto& sweep = series.sweeps[i];
        const double continuum = omega <= 1.0 ? continuum_threshold(c, omega)
                                              : std::numeric_limits<double>::quiet_NaN();
        append_row(out, {omega, onset_or_beyond(sweep), sweep.jump_ratio, continuum});
    }
    return out;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw IoError("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

void ArtifactSet::add(std::string name, std::string content) {
    files_.emplace_back(std::move(name), std::move(content));
}

namespace {

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void ArtifactSet::write(const std::filesystem::path& out_dir, nlohmann::json manifest) const {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    nlohmann::json checksums = nlohmann::json::object();
    for (const auto& [name, content] : files_) {
        write_file(out_dir / name, content);
        checksums[name] = sha256_hex(content);
    }
    manifest["artifacts"] = std::move(checksums);
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace sgl::cli
