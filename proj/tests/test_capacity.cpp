#include <doctest.h>

#include <cmath>

#include "hyperalg/capacity.hpp"
#include "hyperalg/report.hpp"

using namespace hyperalg;

namespace {

DetectionStats stats_of(double mu_h, double s_h, double mu_r, double s_r) {
    DetectionStats st;
    st.mu_hit = mu_h;
    st.sigma_hit = s_h;
    st.mu_reject = mu_r;
    st.sigma_reject = s_r;
    st.metric_name = "test";
    st.scenario = "grid";
    return st;
}

// independent oracle: simulate the hit-vs-max-of-rejects race directly
double race_oracle(const DetectionStats& st, std::size_t n, std::size_t samples,
                   std::uint64_t seed) {
    RngStream rng(seed, "race");
    std::size_t wins = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        const double hit =
            (st.mu_hit - st.mu_reject) + st.sigma_hit * rng.next_normal();
        bool win = true;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (st.sigma_reject * rng.next_normal() >= hit) {
                win = false;
                break;
            }
        }
        wins += win;
    }
    return static_cast<double>(wins) / static_cast<double>(samples);
}

} // namespace

TEST_CASE("pcorr limits") {
    SUBCASE("a single candidate always wins") {
        CHECK(pcorr_analytic(stats_of(1.0, 0.2, 0.0, 0.1), 1) == 1.0);
    }
    SUBCASE("symmetric two-way race is a coin flip") {
        CHECK(pcorr_analytic(stats_of(0.5, 0.3, 0.5, 0.3), 2) == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("invalid stats are rejected") {
        CHECK_THROWS_AS(pcorr_analytic(stats_of(0.0, 0.0, 0.0, 0.1), 4), std::invalid_argument);
        CHECK_THROWS_AS(pcorr_analytic(stats_of(std::nan(""), 0.1, 0.0, 0.1), 4),
                        std::invalid_argument);
    }
}

TEST_CASE("pcorr monotonicity on a grid") {
    // non-increasing in N and the sigmas, non-decreasing in the mean gap
    const auto base = stats_of(0.4, 0.15, 0.0, 0.1);
    double prev = 1.0;
    for (std::size_t n : {1u, 2u, 4u, 16u, 64u, 256u}) {
        const double p = pcorr_analytic(base, n);
        CHECK(p <= prev + 1e-9);
        prev = p;
    }
    prev = 0.0;
    for (double gap : {0.0, 0.1, 0.2, 0.4, 0.8}) {
        const double p = pcorr_analytic(stats_of(gap, 0.15, 0.0, 0.1), 16);
        CHECK(p >= prev - 1e-9);
        prev = p;
    }
    prev = 1.0;
    for (double sh : {0.05, 0.1, 0.2, 0.4}) {
        const double p = pcorr_analytic(stats_of(0.3, sh, 0.0, 0.1), 16);
        CHECK(p <= prev + 1e-9);
        prev = p;
    }
    prev = 1.0;
    for (double sr : {0.05, 0.1, 0.2, 0.4}) {
        const double p = pcorr_analytic(stats_of(0.3, 0.1, 0.0, sr), 16);
        CHECK(p <= prev + 1e-9);
        prev = p;
    }
}

TEST_CASE("pcorr agrees with the Monte-Carlo race oracle") {
    // desk-size slice of the acceptance grid
    RngStream rng(50, "grid");
    for (int point = 0; point < 4; ++point) {
        const double gap = 0.05 + 0.4 * rng.next_double();
        const double sh = 0.05 + 0.2 * rng.next_double();
        const double sr = 0.05 + 0.2 * rng.next_double();
        const std::size_t n = 2 + rng.next_below(30);
        const auto st = stats_of(gap, sh, 0.0, sr);
        const double analytic = pcorr_analytic(st, n);
        const double mc = race_oracle(st, n, 400000, 51 + point);
        CHECK(std::abs(analytic - mc) < 0.01);
    }
}

TEST_CASE("detection statistics") {
    SUBCASE("noiseless single-term BSC: hit at self-similarity, sigma at the floor") {
        const auto model = ModelAlgebra::make(ModelName::bsc, 256, 52);
        const auto st =
            estimate_detection_stats(model, SequenceScenario{16, 1, {}, 2}, 1000, 53);
        CHECK(st.mu_hit == doctest::Approx(0.0)); // negated Hamming distance of 0
        CHECK(st.sigma_hit <= 1e-9);
        CHECK(st.mu_reject < -0.3); // far from the hit
    }
    SUBCASE("bipolar reject scores concentrate at sigma = 1/sqrt(D)") {
        const auto model = ModelAlgebra::make(ModelName::map, 1024, 54);
        const auto st =
            estimate_detection_stats(model, SequenceScenario{32, 1, {}, 4}, 2000, 55);
        CHECK(std::abs(st.mu_reject) < 0.01);
        CHECK(st.sigma_reject ==
              doctest::Approx(1.0 / std::sqrt(1024.0)).epsilon(0.1));
    }
    SUBCASE("degenerate scenarios are rejected") {
        const auto model = ModelAlgebra::make(ModelName::map, 64, 56);
        CHECK_THROWS_AS(estimate_detection_stats(model, SequenceScenario{8, 0, {}, 1}, 1000, 57),
                        std::invalid_argument);
        CHECK_THROWS_AS(estimate_detection_stats(model, SequenceScenario{8, 2, {}, 1}, 10, 57),
                        std::invalid_argument);
    }
}

TEST_CASE("sequence recovery experiment") {
    CapacityConfig config;
    config.models = {ModelName::bsc, ModelName::map};
    config.dim = 128;
    config.items = 16;
    config.lengths = {1, 4, 8};
    config.runs = 2;
    config.trials = 10;
    config.stats_trials = 1000;
    config.seed = 58;

    const auto curve = run_sequence_recovery_experiment(config);
    REQUIRE(curve.points.size() == 6);

    SUBCASE("single-element sequences are recovered perfectly") {
        for (const auto& p : curve.points)
            if (p.length == 1) {
                CHECK(p.empirical_acc == 1.0);
                CHECK(p.analytic_pcorr > 0.999);
            }
    }
    SUBCASE("accuracy does not increase with the length") {
        for (std::size_t i = 0; i + 1 < 3; ++i) {
            CHECK(curve.points[i + 1].empirical_acc <= curve.points[i].empirical_acc + 0.02);
            CHECK(curve.points[3 + i + 1].empirical_acc <=
                  curve.points[3 + i].empirical_acc + 0.02);
        }
    }
    SUBCASE("analytic and empirical stay close") {
        for (const auto& p : curve.points)
            CHECK(std::abs(p.empirical_acc - p.analytic_pcorr) < 0.1);
    }
    SUBCASE("reruns are bit-identical" ) {
        const auto again = run_sequence_recovery_experiment(config);
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            CHECK(curve.points[i].empirical_acc == again.points[i].empirical_acc);
            CHECK(curve.points[i].analytic_pcorr == again.points[i].analytic_pcorr);
        }
    }
}

TEST_CASE("concentration experiment") {
    ConcentrationConfig config;
    config.dims = {64, 256};
    config.count = 300;
    config.seed = 59;
    const auto result = run_concentration_experiment(config);
    REQUIRE(result.per_dim.size() == 2);
    for (const auto& d : result.per_dim) {
        CHECK(std::abs(d.mean) < 0.01);
        CHECK(d.stddev == doctest::Approx(1.0 / std::sqrt(static_cast<double>(d.dim)))
                              .epsilon(0.1));
    }
    CHECK(result.per_dim[1].stddev < result.per_dim[0].stddev);

    SUBCASE("identical seeds produce identical tables") {
        const auto again = run_concentration_experiment(config);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(result.per_dim[i].samples == again.per_dim[i].samples);
    }
    SUBCASE("the pair cap subsamples deterministically") {
        ConcentrationConfig capped = config;
        capped.pair_cap = 500;
        const auto small = run_concentration_experiment(capped);
        CHECK(small.per_dim[0].sampled_pairs == 500);
        CHECK(small.per_dim[0].total_pairs == 300 * 299 / 2);
    }
}

TEST_CASE("roundtrip check") {
    RoundtripConfig config;
    config.model = ModelName::bsc;
    config.dim = 512;
    config.items = 32;
    config.trials = 200;
    config.seed = 60;
    const auto report = run_roundtrip_check(config);
    CHECK(report.recoveries == 800);
    CHECK(report.success_rate > 0.99);
    CHECK(report.mean_margin > 0.0);

    SUBCASE("single-trial runs are deterministic") {
        RoundtripConfig one = config;
        one.trials = 1;
        const auto r1 = run_roundtrip_check(one);
        const auto r2 = run_roundtrip_check(one);
        CHECK(r1.successes == r2.successes);
        CHECK(r1.mean_margin == r2.mean_margin);
    }
}
