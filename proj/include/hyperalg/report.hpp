/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/capacity.hpp"

namespace hyperalg {

/// Locale-independent number formatting: '.' decimal, 17 significant digits.
std::string format_double(double v);

/// JSON string literal with escaping.
std::string json_quote(const std::string& s);

/// Write-then-rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

/// model,D,N,m,trials,empirical_acc,analytic_pcorr,seed
std::string capacity_csv(const CapacityCurve& curve);

/// dim,pairs_total,pairs_sampled,mean,stddev,expected_std
std::string concentration_summary_csv(const ConcentrationResult& result);

/// dim,index,cosine
std::string concentration_samples_csv(const ConcentrationResult& result);

/// model,D,N,trials,recoveries,successes,success_rate,pair_success_rate,mean_margin
std::string roundtrip_csv(const RoundtripConfig& config, const RoundtripReport& report);

/**
 * Run manifest: command, seed, the full resolved configuration and the
 * output paths; values arrive pre-formatted as JSON literals so emission is
 * byte-deterministic.
 */
std::string manifest_json(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& config_items,
                          const std::vector<std::string>& outputs);

} // namespace hyperalg
