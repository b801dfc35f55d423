/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace hyperalg {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string capacity_csv(const CapacityCurve& curve) {
    std::string out = "model,D,N,m,trials,empirical_acc,analytic_pcorr,seed\n";
    for (const auto& p : curve.points) {
        out += to_string(p.model) + "," + std::to_string(p.dim) + "," + std::to_string(p.items) +
               "," + std::to_string(p.length) + "," + std::to_string(p.trials) + "," +
               format_double(p.empirical_acc) + "," + format_double(p.analytic_pcorr) + "," +
               std::to_string(p.seed) + "\n";
    }
    return out;
}

std::string concentration_summary_csv(const ConcentrationResult& result) {
    std::string out = "dim,pairs_total,pairs_sampled,mean,stddev,expected_std\n";
    for (const auto& d : result.per_dim) {
        out += std::to_string(d.dim) + "," + std::to_string(d.total_pairs) + "," +
               std::to_string(d.sampled_pairs) + "," + format_double(d.mean) + "," +
               format_double(d.stddev) + "," +
               format_double(1.0 / std::sqrt(static_cast<double>(d.dim))) + "\n";
    }
    return out;
}

std::string concentration_samples_csv(const ConcentrationResult& result) {
    std::string out = "dim,index,cosine\n";
    for (const auto& d : result.per_dim) {
        for (std::size_t i = 0; i < d.samples.size(); ++i)
            out += std::to_string(d.dim) + "," + std::to_string(i) + "," +
                   format_double(d.samples[i]) + "\n";
    }
    return out;
}

std::string roundtrip_csv(const RoundtripConfig& config, const RoundtripReport& report) {
    std::string out =
        "model,D,N,trials,recoveries,successes,success_rate,pair_success_rate,mean_margin\n";
    out += to_string(config.model) + "," + std::to_string(config.dim) + "," +
           std::to_string(config.items) + "," + std::to_string(report.trials) + "," +
           std::to_string(report.recoveries) + "," + std::to_string(report.successes) + "," +
           format_double(report.success_rate) + "," +
           format_double(static_cast<double>(report.pair_successes) /
                         static_cast<double>(report.trials)) +
           "," + format_double(report.mean_margin) + "\n";
    return out;
}

std::string manifest_json(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& config_items,
                          const std::vector<std::string>& outputs) {
    std::string out = "{\n  \"command\": " + json_quote(command) + ",\n  \"config\": {";
    for (std::size_t i = 0; i < config_items.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += json_quote(config_items[i].first) + ": " + config_items[i].second;
    }
    out += "\n  },\n  \"outputs\": [";
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        out += i ? ", " : "";
        out += json_quote(outputs[i]);
    }
    out += "]\n}\n";
    return out;
}

} // namespace hyperalg
