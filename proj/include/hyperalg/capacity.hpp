/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperalg/model.hpp"
#include "hyperalg/sequence.hpp"

namespace hyperalg {

/**
 * Hit/reject score distributions of the clean-up detection problem. Scores
 * are oriented so larger is better (distances are negated), which lets the
 * accuracy integral treat every metric the same way.
 */
struct DetectionStats {
    double mu_hit = 0.0;
    double sigma_hit = 0.0;
    double mu_reject = 0.0;
    double sigma_reject = 0.0;
    std::string metric_name;
    std::string scenario; // "<model>/D=../N=../m=.."
};

/// Sequence-recovery detection scenario: N item-memory entries, m-term
/// superposed sequence encoded with permutation positions.
struct SequenceScenario {
    std::size_t items = 64;  // N
    std::size_t length = 10; // m
    std::optional<NormMode> norm_override;
    std::size_t memories = 5; // memory redraws across the trial budget
};

/**
 * Monte-Carlo estimate of the detection stats: per trial, encode a random
 * m-symbol sequence, unbind one position, score the correct entry (hit) and
 * all others (reject). Sigmas are guarded away from zero so the accuracy
 * integral stays defined in the noiseless case.
 */
DetectionStats estimate_detection_stats(const ModelAlgebra& model,
                                        const SequenceScenario& scenario, std::size_t trials,
                                        std::uint64_t seed);

/**
 * Expected clean-up accuracy against N candidates:
 * integral of the hit density (centered at mu_hit - mu_reject) times the
 * probability that all N-1 rejects score lower. Adaptive Simpson quadrature
 * on (mu_h - mu_r) +- 10*max(sigma_h, sigma_r), absolute error <= 1e-6.
 */
double pcorr_analytic(const DetectionStats& stats, std::size_t n_items);

struct CapacityPoint {
    ModelName model;
    std::size_t dim, items, length;
    std::size_t trials;      // recovery trials behind the empirical accuracy
    double empirical_acc;
    double analytic_pcorr;
    std::uint64_t seed;
};

struct CapacityCurve {
    std::vector<CapacityPoint> points;
};

struct CapacityConfig {
    std::vector<ModelName> models{ModelName::bsc, ModelName::map, ModelName::fhrr};
    std::size_t dim = 256;
    std::size_t items = 64;
    std::vector<std::size_t> lengths; // defaults to 2..50 when empty
    std::size_t runs = 5;             // independently drawn item memories
    std::size_t trials = 25;          // sequences per run per length
    std::size_t stats_trials = 1500;  // detection-stat estimation budget
    std::uint64_t seed = 0;
    std::optional<NormMode> norm_override;
};

/**
 * Sequence-recovery capacity sweep: for every model and length, the
 * empirical accuracy of recovering every element of random sequences
 * (clean-up ties count as errors) paired with the analytic expectation.
 */
CapacityCurve run_sequence_recovery_experiment(const CapacityConfig& config);

struct ConcentrationConfig {
    std::vector<std::size_t> dims{128, 1024, 8192};
    std::size_t count = 2000;        // random vectors per dimension
    std::size_t pair_cap = 200000;   // uniform subsample above this many pairs
    std::uint64_t seed = 0;
};

struct ConcentrationResult {
    struct PerDim {
        std::size_t dim;
        std::size_t total_pairs;
        std::size_t sampled_pairs;
        double mean;
        double stddev;
        std::vector<double> samples;
    };
    std::vector<PerDim> per_dim;
};

/// Pairwise cosine similarities of random bipolar hypervectors per
/// dimension, with fitted normal parameters.
ConcentrationResult run_concentration_experiment(const ConcentrationConfig& config);

struct RoundtripConfig {
    ModelName model = ModelName::bsc;
    std::size_t dim = 1024;
    std::size_t items = 64;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

struct RoundtripReport {
    std::size_t trials = 0;
    std::size_t recoveries = 0;         // 4 per trial
    std::size_t successes = 0;
    double success_rate = 0.0;
    double mean_margin = 0.0;           // winner minus runner-up score
    std::size_t pair_successes = 0;     // trials where all four recoveries hit
};

/**
 * Builds s = a o b + c o d over a seeded N-entry memory and recovers each
 * factor from its partner (four recoveries per trial).
 */
RoundtripReport run_roundtrip_check(const RoundtripConfig& config);

} // namespace hyperalg
