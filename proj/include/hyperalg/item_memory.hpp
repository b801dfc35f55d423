/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperalg/model.hpp"
#include "hyperalg/similarity.hpp"
#include "hyperalg/space.hpp"

namespace hyperalg {

/// Provenance of a seeded codebook; enough to rebuild it bit-exactly.
struct SeedManifest {
    std::uint64_t seed = 0;
    std::string label_prefix;         // entry i drawn from stream "<prefix><id_i>"
    std::vector<std::string> ids;
};

struct CleanupResult {
    std::string id;
    double score;
    std::vector<std::pair<std::string, double>> table; // insertion order
};

/// Index-based clean-up result for hot paths (no id copies).
struct CleanupScores {
    std::size_t index = 0;
    double score = 0.0;
    bool unique = true;            // false when another entry ties the winner
    std::vector<double> scores;    // per entry, insertion order
};

/**
 * Ordered codebook with exact nearest-neighbor clean-up. Entries share one
 * space; clean-up scans all entries (N stays small in every scenario here)
 * and breaks ties by insertion order. Reads are concurrency-safe; mutation
 * needs exclusive access.
 */
class ItemMemory {
public:
    ItemMemory(SpaceSpec space, Metric metric);

    /// Codebook rebuilt from a seed manifest; same manifest, same entries.
    static ItemMemory materialize(const SpaceSpec& space, Metric metric,
                                  const SeedManifest& manifest);

    /// N sequentially-numbered random entries ("0", "1", ...).
    static ItemMemory random(const SpaceSpec& space, Metric metric, std::size_t count,
                             std::uint64_t seed, const std::string& label_prefix = "item/");

    void add(const std::string& id, Hypervector hv);
    bool contains(const std::string& id) const;
    const Hypervector& get(const std::string& id) const;
    const std::string& id_at(std::size_t index) const;
    const Hypervector& at(std::size_t index) const;
    std::size_t size() const noexcept { return entries_.size(); }

    const SpaceSpec& space() const noexcept { return space_; }
    Metric metric() const noexcept { return metric_; }
    const std::optional<SeedManifest>& provenance() const noexcept { return provenance_; }

    /// Winner-take-all nearest neighbor with the full score table.
    CleanupResult cleanup(const Hypervector& query) const;

    /// Same scan without materializing id strings; scores match similarity()
    /// exactly, ties keep the earliest entry and clear the `unique` flag.
    CleanupScores cleanup_scores(const Hypervector& query) const;

private:
    struct EntryCache {
        double l2 = 0.0;
        std::vector<std::complex<double>> unit; // phasor spaces only
    };

    SpaceSpec space_;
    Metric metric_;
    std::vector<std::pair<std::string, Hypervector>> entries_;
    std::vector<EntryCache> cache_;
    std::unordered_map<std::string, std::size_t> index_;
    std::optional<SeedManifest> provenance_;
};

/**
 * Unbind-then-clean-up recovery: returns the best match for the factor that
 * was bound with `known` inside `composite`.
 */
CleanupResult recover_factor(const ModelAlgebra& model, const Hypervector& composite,
                             const Hypervector& known, const ItemMemory& memory);

} // namespace hyperalg
