/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/item_memory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {

std::complex<double> unit_component(std::complex<double> c) {
    const double m = std::abs(c);
    if (m == 0.0) return {1.0, 0.0};
    return c / m;
}

} // namespace

ItemMemory::ItemMemory(SpaceSpec space, Metric metric) : space_(space), metric_(metric) {
    space_.validate();
}

ItemMemory ItemMemory::materialize(const SpaceSpec& space, Metric metric,
                                   const SeedManifest& manifest) {
    ItemMemory mem(space, metric);
    for (const auto& id : manifest.ids) {
        RngStream rng(manifest.seed, manifest.label_prefix + id);
        mem.add(id, random_hv(space, rng));
    }
    mem.provenance_ = manifest;
    return mem;
}

ItemMemory ItemMemory::random(const SpaceSpec& space, Metric metric, std::size_t count,
                              std::uint64_t seed, const std::string& label_prefix) {
    SeedManifest manifest;
    manifest.seed = seed;
    manifest.label_prefix = label_prefix;
    manifest.ids.reserve(count);
    for (std::size_t i = 0; i < count; ++i) manifest.ids.push_back(std::to_string(i));
    return materialize(space, metric, manifest);
}

void ItemMemory::add(const std::string& id, Hypervector hv) {
    if (index_.count(id)) throw std::invalid_argument("item memory: duplicate id '" + id + "'");
    if (!(hv.space() == space_))
        throw std::invalid_argument("item memory: entry space does not match");
    EntryCache cache;
    cache.l2 = hv.l2_norm();
    if (space_.kind == SpaceKind::phasor) {
        cache.unit.reserve(space_.dim);
        for (const auto& c : hv.phasors()) cache.unit.push_back(unit_component(c));
    }
    index_.emplace(id, entries_.size());
    entries_.emplace_back(id, std::move(hv));
    cache_.push_back(std::move(cache));
}

bool ItemMemory::contains(const std::string& id) const { return index_.count(id) != 0; }

const Hypervector& ItemMemory::get(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("item memory: unknown id '" + id + "'");
    return entries_[it->second].second;
}

const std::string& ItemMemory::id_at(std::size_t index) const { return entries_.at(index).first; }
const Hypervector& ItemMemory::at(std::size_t index) const { return entries_.at(index).second; }

CleanupResult ItemMemory::cleanup(const Hypervector& query) const {
    const CleanupScores scores = cleanup_scores(query);
    CleanupResult res;
    res.id = entries_[scores.index].first;
    res.score = scores.score;
    res.table.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        res.table.emplace_back(entries_[i].first, scores.scores[i]);
    return res;
}

CleanupScores ItemMemory::cleanup_scores(const Hypervector& query) const {
    if (entries_.empty()) throw std::invalid_argument("item memory: clean-up on empty memory");
    if (!(query.space() == space_))
        throw std::invalid_argument("item memory: query space does not match");
    const std::size_t n = entries_.size();
    const std::size_t d = space_.dim;
    CleanupScores res;
    res.scores.resize(n);

    switch (metric_) {
        case Metric::hamming: {
            for (std::size_t e = 0; e < n; ++e) {
                const auto& v = entries_[e].second.reals();
                std::size_t diff = 0;
                for (std::size_t i = 0; i < d; ++i)
                    diff += (query.reals()[i] != 0.0) != (v[i] != 0.0);
                res.scores[e] = static_cast<double>(diff) / static_cast<double>(d);
            }
            break;
        }
        case Metric::dot: {
            if (space_.kind == SpaceKind::phasor) {
                for (std::size_t e = 0; e < n; ++e) {
                    const auto& v = entries_[e].second.phasors();
                    double s = 0.0;
                    for (std::size_t i = 0; i < d; ++i)
                        s += (query.phasors()[i] * std::conj(v[i])).real();
                    res.scores[e] = s;
                }
            } else {
                for (std::size_t e = 0; e < n; ++e) {
                    const auto& v = entries_[e].second.reals();
                    double s = 0.0;
                    for (std::size_t i = 0; i < d; ++i) s += query.reals()[i] * v[i];
                    res.scores[e] = s;
                }
            }
            break;
        }
        case Metric::cosine: {
            const double qn = query.l2_norm();
            if (qn == 0.0)
                throw std::invalid_argument("cosine similarity with a zero vector");
            if (space_.kind == SpaceKind::phasor) {
                for (std::size_t e = 0; e < n; ++e) {
                    const auto& v = entries_[e].second.phasors();
                    double s = 0.0;
                    for (std::size_t i = 0; i < d; ++i)
                        s += (query.phasors()[i] * std::conj(v[i])).real();
                    if (cache_[e].l2 == 0.0)
                        throw std::invalid_argument("cosine similarity with a zero vector");
                    res.scores[e] = s / (qn * cache_[e].l2);
                }
            } else {
                for (std::size_t e = 0; e < n; ++e) {
                    const auto& v = entries_[e].second.reals();
                    double s = 0.0;
                    for (std::size_t i = 0; i < d; ++i) s += query.reals()[i] * v[i];
                    if (cache_[e].l2 == 0.0)
                        throw std::invalid_argument("cosine similarity with a zero vector");
                    res.scores[e] = s / (qn * cache_[e].l2);
                }
            }
            break;
        }
        case Metric::phase_cosine: {
            if (space_.kind == SpaceKind::phasor) {
                // normalize the query once, entries come from the cache
                std::vector<std::complex<double>> qu(d);
                for (std::size_t i = 0; i < d; ++i)
                    qu[i] = unit_component(query.phasors()[i]);
                for (std::size_t e = 0; e < n; ++e) {
                    const auto& v = cache_[e].unit;
                    double s = 0.0;
                    for (std::size_t i = 0; i < d; ++i)
                        s += (qu[i] * std::conj(v[i])).real();
                    res.scores[e] = s / static_cast<double>(d);
                }
            } else {
                for (std::size_t e = 0; e < n; ++e)
                    res.scores[e] = similarity(metric_, query, entries_[e].second);
            }
            break;
        }
        default:
            for (std::size_t e = 0; e < n; ++e)
                res.scores[e] = similarity(metric_, query, entries_[e].second);
            break;
    }

    const bool lower_wins = is_distance(metric_);
    std::size_t best = 0;
    for (std::size_t e = 1; e < n; ++e) {
        if (lower_wins ? (res.scores[e] < res.scores[best])
                       : (res.scores[e] > res.scores[best]))
            best = e;
    }
    std::size_t at_best = 0;
    for (double s : res.scores) at_best += s == res.scores[best];
    res.index = best;
    res.score = res.scores[best];
    res.unique = at_best == 1;
    return res;
}

CleanupResult recover_factor(const ModelAlgebra& model, const Hypervector& composite,
                             const Hypervector& known, const ItemMemory& memory) {
    return memory.cleanup(unbind(model, composite, known));
}

} // namespace hyperalg
