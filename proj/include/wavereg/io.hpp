// io.hpp — artifact writers: CSV tables, flat binary grid dumps, and the
// versioned JSON report.
//
// CSV files are UTF-8, comma-separated, '.' decimal, one header row naming
// columns and units.  The binary grid format is a 32-byte header (magic,
// layout flag, dims, per-dim sizes) followed by little-endian 64-bit
// floats in row-major order — real samples for real-representing grids,
// interleaved re/im pairs otherwise.
//
// Reports are deterministic: identical configs byte-reproduce everything
// outside the "timing" subtree, which holds the timestamp and wall-clock
// numbers.

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavereg/asymptotics.hpp"
#include "wavereg/harness.hpp"

namespace wavereg {

using ordered_json = nlohmann::ordered_json;

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot open " + path.string());
    out << text;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// one scan family -> csv rows (epsilon, one column per seminorm)
inline void write_scan_csv(const std::filesystem::path& path,
                           const std::vector<EpsilonScan>& scans) {
    if (scans.empty()) return;
    std::string text = "epsilon[1]";
    for (const auto& sc : scans) text += "," + sc.seminorm_id + "[seminorm]";
    text += "\n";
    for (std::size_t i = 0; i < scans.front().eps.size(); ++i) {
        text += format_double(scans.front().eps[i]);
        for (const auto& sc : scans) text += "," + format_double(sc.values[i]);
        text += "\n";
    }
    write_text_file(path, text);
}

// grid function -> csv (coordinates, re, im)
inline void write_grid_csv(const std::filesystem::path& path, const GridFunction& u) {
    const ManifoldModel& m = u.manifold;
    std::string text;
    for (int i = 0; i < m.dim; ++i) text += "x" + std::to_string(i) + "[rad],";
    text += "re[value],im[value]\n";
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        const auto x = m.grid_point(j);
        for (int i = 0; i < m.dim; ++i) text += format_double(x[std::size_t(i)]) + ",";
        text += format_double(u.values[j].real()) + "," + format_double(u.values[j].imag()) + "\n";
    }
    write_text_file(path, text);
}

// multiplier table -> csv (lambda, m)
inline void write_multiplier_csv(const std::filesystem::path& path, const RadialMultiplier& r,
                                 double lambda_max, double step) {
    std::string text = "lambda[frequency],m[multiplier]\n";
    for (double lam = 0.0; lam <= lambda_max; lam += step)
        text += format_double(lam) + "," + format_double(r(lam)) + "\n";
    write_text_file(path, text);
}

// flat binary grid dump; header layout (32 bytes):
//   bytes 0..7   magic "WRGRID01"
//   byte  8      1 if real samples, 0 if interleaved re/im
//   byte  9      number of dims
//   bytes 10..15 reserved (zero)
//   bytes 16..31 four uint32 little-endian: n_0, n_1, n_2, 0
inline void write_grid_binary(const std::filesystem::path& path, const GridFunction& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot open " + path.string());
    char header[32] = {};
    std::memcpy(header, "WRGRID01", 8);
    header[8] = u.real_representing ? 1 : 0;
    header[9] = char(u.manifold.dim);
    std::uint32_t dims[4] = {0, 0, 0, 0};
    for (int i = 0; i < u.manifold.dim; ++i) dims[i] = std::uint32_t(u.manifold.grid[std::size_t(i)]);
    std::memcpy(header + 16, dims, 16);
    out.write(header, sizeof header);
    if (u.real_representing) {
        std::vector<double> vals(u.values.size());
        for (std::size_t j = 0; j < vals.size(); ++j) vals[j] = u.values[j].real();
        out.write(reinterpret_cast<const char*>(vals.data()),
                  std::streamsize(vals.size() * sizeof(double)));
    } else {
        std::vector<double> vals(2 * u.values.size());
        for (std::size_t j = 0; j < u.values.size(); ++j) {
            vals[2 * j] = u.values[j].real();
            vals[2 * j + 1] = u.values[j].imag();
        }
        out.write(reinterpret_cast<const char*>(vals.data()),
                  std::streamsize(vals.size() * sizeof(double)));
    }
}

inline ordered_json check_to_json(const CheckResult& c) {
    ordered_json j;
    j["verdict"] = c.pass ? "pass" : "fail";
    ordered_json metrics = ordered_json::object();
    for (const auto& [k, v] : c.metrics) metrics[k] = v;
    j["metrics"] = metrics;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

inline ordered_json zoo_to_json(const std::vector<TestDistribution>& zoo) {
    ordered_json out = ordered_json::array();
    for (const auto& w : zoo) {
        ordered_json j;
        j["id"] = w.id;
        j["sobolev_order"] = w.smooth ? "infinity" : format_double(w.sobolev_order);
        switch (w.support_kind) {
            case SupportKind::PointLike: j["support"] = "point"; break;
            case SupportKind::Line: j["support"] = "line"; break;
            case SupportKind::Full: j["support"] = "full"; break;
        }
        j["wavefront_empty"] = !w.has_wavefront;
        if (w.has_wavefront) {
            if (w.all_directions_singular) {
                j["singular_directions"] = "all";
            } else {
                ordered_json dirs = ordered_json::array();
                for (const auto& d : w.singular_directions)
                    dirs.push_back({d[0], d[1]});
                j["singular_directions"] = dirs;
            }
        }
        out.push_back(j);
    }
    return out;
}

}  // namespace wavereg
