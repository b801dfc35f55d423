/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/similarity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {

constexpr double TWO_PI = 2.0 * std::numbers::pi;

void check_pair(const Hypervector& a, const Hypervector& b) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument("similarity: operands live in different spaces");
}

void require_binary(Metric m, const SpaceSpec& s) {
    if (!s.is_binary())
        throw std::invalid_argument(to_string(m) + " requires a binary space, got " + to_string(s.kind));
}

double phase_of(const Hypervector& v, std::size_t i) {
    if (v.is_phasor()) return v.angle(i);
    // modular integers are discretized phase angles
    return TWO_PI * v.reals()[i] / static_cast<double>(v.space().range);
}

// component rescaled to unit magnitude; a cancelled component counts as angle 0
std::complex<double> unit_phase(std::complex<double> c) {
    const double m = std::abs(c);
    if (m == 0.0) return {1.0, 0.0};
    return c / m;
}

} // namespace

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::euclidean: return "euclidean";
        case Metric::dot: return "dot";
        case Metric::cosine: return "cosine";
        case Metric::hamming: return "hamming";
        case Metric::jaccard: return "jaccard";
        case Metric::manhattan_mod: return "manhattan-mod";
        case Metric::phase_cosine: return "phase-cosine";
    }
    throw std::logic_error("unreachable metric");
}

Metric metric_from_string(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "dot") return Metric::dot;
    if (name == "cosine") return Metric::cosine;
    if (name == "hamming") return Metric::hamming;
    if (name == "jaccard") return Metric::jaccard;
    if (name == "manhattan-mod") return Metric::manhattan_mod;
    if (name == "phase-cosine") return Metric::phase_cosine;
    throw std::invalid_argument("unknown metric: " + name);
}

bool is_distance(Metric metric) {
    return metric == Metric::euclidean || metric == Metric::hamming ||
           metric == Metric::manhattan_mod;
}

double self_similarity(Metric metric, const Hypervector& hv) {
    switch (metric) {
        case Metric::euclidean:
        case Metric::hamming:
        case Metric::manhattan_mod:
            return 0.0;
        case Metric::cosine:
        case Metric::jaccard:
        case Metric::phase_cosine:
            return 1.0;
        case Metric::dot:
            return similarity(Metric::dot, hv, hv);
    }
    throw std::logic_error("unreachable metric");
}

double similarity(Metric metric, const Hypervector& a, const Hypervector& b) {
    check_pair(a, b);
    const std::size_t d = a.dim();
    const SpaceSpec& space = a.space();

    switch (metric) {
        case Metric::euclidean: {
            if (a.is_phasor())
                throw std::invalid_argument("euclidean distance is not defined for phasor vectors");
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                double diff = a.reals()[i] - b.reals()[i];
                s += diff * diff;
            }
            return std::sqrt(s);
        }
        case Metric::dot: {
            if (a.is_phasor()) {
                double s = 0.0;
                for (std::size_t i = 0; i < d; ++i)
                    s += (a.phasors()[i] * std::conj(b.phasors()[i])).real();
                return s;
            }
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += a.reals()[i] * b.reals()[i];
            return s;
        }
        case Metric::cosine: {
            double na = a.l2_norm(), nb = b.l2_norm();
            if (na == 0.0 || nb == 0.0)
                throw std::invalid_argument("cosine similarity with a zero vector");
            return similarity(Metric::dot, a, b) / (na * nb);
        }
        case Metric::hamming: {
            require_binary(metric, space);
            std::size_t diff = 0;
            for (std::size_t i = 0; i < d; ++i)
                diff += (a.reals()[i] != 0.0) != (b.reals()[i] != 0.0);
            return static_cast<double>(diff) / static_cast<double>(d);
        }
        case Metric::jaccard: {
            require_binary(metric, space);
            std::size_t inter = 0, uni = 0;
            for (std::size_t i = 0; i < d; ++i) {
                bool x = a.reals()[i] != 0.0, y = b.reals()[i] != 0.0;
                inter += x && y;
                uni += x || y;
            }
            if (uni == 0)
                throw std::invalid_argument("Jaccard similarity of two all-zero vectors");
            return static_cast<double>(inter) / static_cast<double>(uni);
        }
        case Metric::manhattan_mod: {
            if (space.kind != SpaceKind::modular)
                throw std::invalid_argument("modified Manhattan distance needs a modular space");
            const auto r = static_cast<long long>(space.range);
            long long s = 0;
            for (std::size_t i = 0; i < d; ++i) {
                long long x = static_cast<long long>(a.reals()[i]);
                long long y = static_cast<long long>(b.reals()[i]);
                long long fwd = ((x - y) % r + r) % r;
                long long bwd = ((y - x) % r + r) % r;
                s += std::min(fwd, bwd);
            }
            return static_cast<double>(s);
        }
        case Metric::phase_cosine: {
            if (!(space.kind == SpaceKind::phasor || space.kind == SpaceKind::modular))
                throw std::invalid_argument("phase cosine needs a phasor or modular space");
            if (space.kind == SpaceKind::phasor) {
                // mean cos(theta_a - theta_b) = mean Re(a_i conj(b_i) / |a_i||b_i|)
                double s = 0.0;
                for (std::size_t i = 0; i < d; ++i)
                    s += (unit_phase(a.phasors()[i]) * std::conj(unit_phase(b.phasors()[i])))
                             .real();
                return s / static_cast<double>(d);
            }
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                s += std::cos(phase_of(a, i) - phase_of(b, i));
            return s / static_cast<double>(d);
        }
    }
    throw std::logic_error("unreachable metric");
}

Metric default_metric(const SpaceSpec& space) {
    switch (space.kind) {
        case SpaceKind::dense_binary: return Metric::hamming;
        case SpaceKind::bipolar: return Metric::cosine;
        case SpaceKind::real: return Metric::cosine;
        case SpaceKind::phasor: return Metric::phase_cosine;
        case SpaceKind::sparse_binary: return Metric::dot;
        case SpaceKind::block_sparse: return Metric::dot;
        case SpaceKind::modular: return Metric::manhattan_mod;
    }
    throw std::logic_error("unreachable space kind");
}

} // namespace hyperalg
