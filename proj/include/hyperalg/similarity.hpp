/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <string>

#include "hyperalg/space.hpp"

namespace hyperalg {

enum class Metric {
    euclidean,      // dist, any non-phasor space
    dot,            // sim; phasor uses Re(sum a*conj(b))
    cosine,         // sim
    hamming,        // dist, binary spaces, normalized by D
    jaccard,        // sim, binary spaces
    manhattan_mod,  // dist, modular spaces: sum_i min(mod_r(a-b), mod_r(b-a))
    phase_cosine,   // sim, phasor or modular (integers embedded as angles): mean cos(a_i - b_i)
};

std::string to_string(Metric metric);
Metric metric_from_string(const std::string& name);

/// True when lower values mean closer (argmin clean-up).
bool is_distance(Metric metric);

/// Value of the metric for a query identical to a stored entry.
double self_similarity(Metric metric, const Hypervector& hv);

/**
 * Computes the metric; throws on dimension mismatch, metric/space mismatch,
 * and Jaccard with two all-zero vectors.
 */
double similarity(Metric metric, const Hypervector& a, const Hypervector& b);

/// Default metric per space kind (Hamming for binary, phase cosine for
/// phasor/modular, cosine otherwise).
Metric default_metric(const SpaceSpec& space);

} // namespace hyperalg
