/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "hyperalg/item_memory.hpp"
#include "hyperalg/parallel.hpp"

namespace hyperalg {

namespace {

constexpr double SIGMA_FLOOR = 1e-12;

struct RunningStats {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
    void push(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return sum / static_cast<double>(n); }
    double stddev() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return var > 0.0 ? std::sqrt(var) : 0.0;
    }
};

std::vector<std::size_t> draw_indices(std::size_t items, std::size_t length, RngStream& rng) {
    std::vector<std::size_t> idx(length);
    for (auto& i : idx) i = rng.next_below(items);
    return idx;
}

std::vector<std::string> ids_of(const ItemMemory& memory, const std::vector<std::size_t>& idx) {
    std::vector<std::string> ids;
    ids.reserve(idx.size());
    for (std::size_t i : idx) ids.push_back(memory.id_at(i));
    return ids;
}

} // namespace

DetectionStats estimate_detection_stats(const ModelAlgebra& model,
                                        const SequenceScenario& scenario, std::size_t trials,
                                        std::uint64_t seed) {
    if (scenario.length == 0)
        throw std::invalid_argument("detection stats: degenerate scenario with m = 0");
    if (trials < 1000)
        throw std::invalid_argument("detection stats: at least 1000 trials are required");
    const std::size_t memories = std::max<std::size_t>(scenario.memories, 1);
    const std::size_t block = (trials + memories - 1) / memories;
    const Metric metric = model.metric();

    RunningStats hit, reject;
    std::optional<ItemMemory> memory;
    std::optional<SequenceCodec> codec;
    for (std::size_t t = 0; t < trials; ++t) {
        if (t % block == 0) {
            memory.emplace(ItemMemory::random(model.space(), metric, scenario.items, seed,
                                              "stats-mem/" + std::to_string(t / block) + "/"));
            codec.emplace();
            codec->model = &model;
            codec->symbols = &*memory;
            codec->norm_override = scenario.norm_override;
        }
        RngStream rng(seed, "stats-trial/" + std::to_string(t));
        const auto idx = draw_indices(scenario.items, scenario.length, rng);
        const Hypervector seq = encode_sequence(*codec, ids_of(*memory, idx));
        const std::size_t pos = rng.next_below(scenario.length);
        const Hypervector query = position_query(*codec, seq, pos);

        // one scan produces the hit score and every reject score
        const CleanupScores scores = memory->cleanup_scores(query);
        const double sign = is_distance(metric) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < scores.scores.size(); ++i) {
            if (i == idx[pos])
                hit.push(sign * scores.scores[i]);
            else
                reject.push(sign * scores.scores[i]);
        }
    }

    DetectionStats stats;
    stats.mu_hit = hit.mean();
    stats.sigma_hit = std::max(hit.stddev(), SIGMA_FLOOR);
    stats.mu_reject = reject.mean();
    stats.sigma_reject = std::max(reject.stddev(), SIGMA_FLOOR);
    stats.metric_name = to_string(metric);
    stats.scenario = to_string(model.name()) + "/D=" + std::to_string(model.space().dim) +
                     "/N=" + std::to_string(scenario.items) +
                     "/m=" + std::to_string(scenario.length);
    return stats;
}

namespace {

double normal_cdf(double x, double sigma) {
    return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2));
}

struct PcorrIntegrand {
    double delta, sigma_h, sigma_r;
    double n_minus_1;
    double operator()(double x) const {
        const double z = (x - delta) / sigma_h;
        const double pdf = std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma_h);
        return pdf * std::pow(normal_cdf(x, sigma_r), n_minus_1);
    }
};

double adaptive_simpson(const PcorrIntegrand& f, double a, double b, double fa, double fb,
                        double fm, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * eps, depth - 1);
}

} // namespace

double pcorr_analytic(const DetectionStats& stats, std::size_t n_items) {
    if (!(std::isfinite(stats.mu_hit) && std::isfinite(stats.sigma_hit) &&
          std::isfinite(stats.mu_reject) && std::isfinite(stats.sigma_reject)))
        throw std::invalid_argument("pcorr: non-finite detection stats");
    if (!(stats.sigma_hit > 0.0 && stats.sigma_reject > 0.0))
        throw std::invalid_argument("pcorr: sigmas must be positive");
    if (n_items < 1) throw std::invalid_argument("pcorr: item count must be >= 1");
    if (n_items == 1) return 1.0; // a single candidate always wins

    PcorrIntegrand f;
    f.delta = stats.mu_hit - stats.mu_reject;
    f.sigma_h = stats.sigma_hit;
    f.sigma_r = stats.sigma_reject;
    f.n_minus_1 = static_cast<double>(n_items - 1);

    const double spread = 10.0 * std::max(f.sigma_h, f.sigma_r);
    const double a = f.delta - spread, b = f.delta + spread;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double p = adaptive_simpson(f, a, b, fa, fb, fm, whole, 1e-8, 40);
    return std::clamp(p, 0.0, 1.0);
}

CapacityCurve run_sequence_recovery_experiment(const CapacityConfig& config) {
    if (config.models.empty()) throw std::invalid_argument("capacity: no models configured");
    if (config.dim < 1 || config.items < 1 || config.runs < 1 || config.trials < 1)
        throw std::invalid_argument("capacity: dim, items, runs and trials must be >= 1");
    std::vector<std::size_t> lengths = config.lengths;
    if (lengths.empty())
        for (std::size_t m = 2; m <= 50; ++m) lengths.push_back(m);
    for (std::size_t m : lengths)
        if (m < 1) throw std::invalid_argument("capacity: sequence lengths must be >= 1");

    CapacityCurve curve;
    curve.points.resize(config.models.size() * lengths.size());

    parallel_for(curve.points.size(), [&](std::size_t idx) {
        const ModelName name = config.models[idx / lengths.size()];
        const std::size_t m = lengths[idx % lengths.size()];
        const ModelAlgebra model = ModelAlgebra::make(name, config.dim, config.seed);
        const std::string tag = to_string(name) + "/m" + std::to_string(m);

        std::size_t successes = 0, total = 0;
        for (std::size_t r = 0; r < config.runs; ++r) {
            const ItemMemory memory = ItemMemory::random(
                model.space(), model.metric(), config.items, config.seed,
                "cap-mem/" + to_string(name) + "/" + std::to_string(r) + "/");
            SequenceCodec codec;
            codec.model = &model;
            codec.symbols = &memory;
            codec.norm_override = config.norm_override;
            for (std::size_t t = 0; t < config.trials; ++t) {
                RngStream rng(config.seed,
                              "cap-seq/" + tag + "/r" + std::to_string(r) + "/t" + std::to_string(t));
                const auto idx = draw_indices(config.items, m, rng);
                const Hypervector seq = encode_sequence(codec, ids_of(memory, idx));
                for (std::size_t pos = 0; pos < m; ++pos) {
                    const CleanupScores res =
                        memory.cleanup_scores(position_query(codec, seq, pos));
                    // a tied winner counts as an error
                    successes += res.index == idx[pos] && res.unique;
                    ++total;
                }
            }
        }

        const DetectionStats stats = estimate_detection_stats(
            model, SequenceScenario{config.items, m, config.norm_override, config.runs},
            config.stats_trials, mix64(config.seed ^ mix64(idx + 1)));

        CapacityPoint point;
        point.model = name;
        point.dim = config.dim;
        point.items = config.items;
        point.length = m;
        point.trials = config.runs * config.trials;
        point.empirical_acc = static_cast<double>(successes) / static_cast<double>(total);
        point.analytic_pcorr = pcorr_analytic(stats, config.items);
        point.seed = config.seed;
        curve.points[idx] = point;
    });
    return curve;
}

ConcentrationResult run_concentration_experiment(const ConcentrationConfig& config) {
    if (config.count < 2)
        throw std::invalid_argument("concentration: need at least two vectors");
    if (config.dims.empty()) throw std::invalid_argument("concentration: no dimensions");

    ConcentrationResult result;
    result.per_dim.resize(config.dims.size());

    parallel_for(config.dims.size(), [&](std::size_t di) {
        const std::size_t d = config.dims[di];
        const SpaceSpec space = SpaceSpec::bipolar(d);
        std::vector<Hypervector> hvs;
        hvs.reserve(config.count);
        for (std::size_t i = 0; i < config.count; ++i) {
            RngStream rng(config.seed, "conc/" + std::to_string(d) + "/" + std::to_string(i));
            hvs.push_back(random_hv(space, rng));
        }
        const std::size_t total = config.count * (config.count - 1) / 2;
        auto& out = result.per_dim[di];
        out.dim = d;
        out.total_pairs = total;

        // cosine of exact +-1 vectors: dot / D
        auto pair_cos = [&](std::size_t i, std::size_t j) {
            const auto& a = hvs[i].reals();
            const auto& b = hvs[j].reals();
            double s = 0.0;
            for (std::size_t k = 0; k < d; ++k) s += a[k] * b[k];
            return s / static_cast<double>(d);
        };

        RunningStats acc;
        if (total <= config.pair_cap) {
            out.samples.reserve(total);
            for (std::size_t i = 0; i < config.count; ++i)
                for (std::size_t j = i + 1; j < config.count; ++j)
                    out.samples.push_back(pair_cos(i, j));
        } else {
            RngStream rng(config.seed, "conc-pairs/" + std::to_string(d));
            out.samples.reserve(config.pair_cap);
            for (std::size_t s = 0; s < config.pair_cap; ++s) {
                const std::size_t i = rng.next_below(config.count);
                std::size_t j = rng.next_below(config.count - 1);
                if (j >= i) ++j;
                out.samples.push_back(pair_cos(i, j));
            }
        }
        for (double v : out.samples) acc.push(v);
        out.sampled_pairs = out.samples.size();
        out.mean = acc.mean();
        out.stddev = acc.stddev();
    });
    return result;
}

RoundtripReport run_roundtrip_check(const RoundtripConfig& config) {
    if (config.items < 4)
        throw std::invalid_argument("roundtrip: need at least four items for two bound pairs");
    if (config.trials < 1) throw std::invalid_argument("roundtrip: trials must be >= 1");
    const ModelAlgebra model = ModelAlgebra::make(config.model, config.dim, config.seed);
    const ItemMemory memory = ItemMemory::random(model.space(), model.metric(), config.items,
                                                 config.seed, "rt-mem/");

    RoundtripReport report;
    report.trials = config.trials;
    RunningStats margins;
    for (std::size_t t = 0; t < config.trials; ++t) {
        RngStream rng(config.seed, "rt-trial/" + std::to_string(t));
        // four distinct codebook entries per trial
        std::size_t pick[4];
        for (int k = 0; k < 4; ++k) {
            bool fresh = false;
            while (!fresh) {
                pick[k] = rng.next_below(config.items);
                fresh = true;
                for (int p = 0; p < k; ++p) fresh &= pick[p] != pick[k];
            }
        }
        const Hypervector& a = memory.at(pick[0]);
        const Hypervector& b = memory.at(pick[1]);
        const Hypervector& c = memory.at(pick[2]);
        const Hypervector& dd = memory.at(pick[3]);
        std::vector<Hypervector> pairs{bind(model, a, b), bind(model, c, dd)};
        const Hypervector s = superpose(model, pairs);

        const std::pair<std::size_t, std::size_t> queries[4] = {
            {pick[0], pick[1]}, {pick[1], pick[0]}, {pick[2], pick[3]}, {pick[3], pick[2]}};
        bool all_hit = true;
        for (const auto& [known, expected] : queries) {
            const CleanupScores res =
                memory.cleanup_scores(unbind(model, s, memory.at(known)));
            const bool hit = res.index == expected && res.unique;
            report.successes += hit;
            all_hit &= hit;
            ++report.recoveries;
            // margin between the winner and the best other candidate
            double runner = is_distance(model.metric())
                                ? std::numeric_limits<double>::infinity()
                                : -std::numeric_limits<double>::infinity();
            for (std::size_t e = 0; e < res.scores.size(); ++e) {
                if (e == res.index) continue;
                const double score = res.scores[e];
                if (is_distance(model.metric()) ? score < runner : score > runner) runner = score;
            }
            margins.push(std::abs(res.score - runner));
        }
        report.pair_successes += all_hit;
    }
    report.success_rate =
        static_cast<double>(report.successes) / static_cast<double>(report.recoveries);
    report.mean_margin = margins.mean();
    return report;
}

} // namespace hyperalg
