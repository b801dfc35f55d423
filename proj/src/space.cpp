/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {
constexpr double TWO_PI = 2.0 * std::numbers::pi;
}

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::dense_binary: return "dense-binary";
        case SpaceKind::bipolar: return "bipolar";
        case SpaceKind::real: return "real";
        case SpaceKind::phasor: return "phasor";
        case SpaceKind::sparse_binary: return "sparse-binary";
        case SpaceKind::block_sparse: return "block-sparse";
        case SpaceKind::modular: return "modular";
    }
    throw std::logic_error("unreachable space kind");
}

SpaceKind space_kind_from_string(const std::string& name) {
    if (name == "dense-binary") return SpaceKind::dense_binary;
    if (name == "bipolar") return SpaceKind::bipolar;
    if (name == "real") return SpaceKind::real;
    if (name == "phasor") return SpaceKind::phasor;
    if (name == "sparse-binary") return SpaceKind::sparse_binary;
    if (name == "block-sparse") return SpaceKind::block_sparse;
    if (name == "modular") return SpaceKind::modular;
    throw std::invalid_argument("unknown space kind: " + name);
}

SpaceSpec SpaceSpec::dense_binary(std::size_t dim) { return {SpaceKind::dense_binary, dim, 0, 0, 0}; }
SpaceSpec SpaceSpec::bipolar(std::size_t dim) { return {SpaceKind::bipolar, dim, 0, 0, 0}; }
SpaceSpec SpaceSpec::real(std::size_t dim) { return {SpaceKind::real, dim, 0, 0, 0}; }
SpaceSpec SpaceSpec::phasor(std::size_t dim) { return {SpaceKind::phasor, dim, 0, 0, 0}; }
SpaceSpec SpaceSpec::sparse_binary(std::size_t dim, double density) {
    return {SpaceKind::sparse_binary, dim, density, 0, 0};
}
SpaceSpec SpaceSpec::block_sparse(std::size_t dim, std::size_t block_size) {
    return {SpaceKind::block_sparse, dim, 0, block_size, 0};
}
SpaceSpec SpaceSpec::modular(std::size_t dim, std::uint64_t range) {
    return {SpaceKind::modular, dim, 0, 0, range};
}

void SpaceSpec::validate() const {
    if (dim < 1) throw std::invalid_argument("space dimension must be >= 1");
    switch (kind) {
        case SpaceKind::sparse_binary:
            if (!(density > 0.0 && density < 1.0))
                throw std::invalid_argument("sparse density must lie in (0, 1)");
            break;
        case SpaceKind::block_sparse:
            if (block_size < 1 || dim % block_size != 0)
                throw std::invalid_argument("block size must divide the dimension");
            break;
        case SpaceKind::modular:
            if (range < 2) throw std::invalid_argument("modular range must be >= 2");
            break;
        default:
            break;
    }
}

std::size_t SpaceSpec::sparse_cardinality() const {
    if (kind == SpaceKind::sparse_binary) {
        auto m = static_cast<std::size_t>(std::llround(density * static_cast<double>(dim)));
        return std::max<std::size_t>(m, 1);
    }
    if (kind == SpaceKind::block_sparse) return dim / block_size;
    throw std::logic_error("sparse_cardinality on a dense space");
}

Hypervector::Hypervector(SpaceSpec space, std::vector<double> comps)
    : space_(space), reals_(std::move(comps)) {
    if (space_.kind == SpaceKind::phasor)
        throw std::invalid_argument("phasor hypervector needs complex components");
    if (reals_.size() != space_.dim)
        throw std::invalid_argument("component count does not match space dimension");
}

Hypervector::Hypervector(SpaceSpec space, std::vector<std::complex<double>> comps)
    : space_(space), phasors_(std::move(comps)) {
    if (space_.kind != SpaceKind::phasor)
        throw std::invalid_argument("complex components are only valid for phasor spaces");
    if (phasors_.size() != space_.dim)
        throw std::invalid_argument("component count does not match space dimension");
}

Hypervector Hypervector::zeros(const SpaceSpec& space) {
    if (space.kind == SpaceKind::phasor)
        return Hypervector(space, std::vector<std::complex<double>>(space.dim));
    return Hypervector(space, std::vector<double>(space.dim, 0.0));
}

const std::vector<double>& Hypervector::reals() const {
    if (is_phasor()) throw std::logic_error("real components requested from a phasor vector");
    return reals_;
}
std::vector<double>& Hypervector::reals() {
    if (is_phasor()) throw std::logic_error("real components requested from a phasor vector");
    return reals_;
}
const std::vector<std::complex<double>>& Hypervector::phasors() const {
    if (!is_phasor()) throw std::logic_error("complex components requested from a real vector");
    return phasors_;
}
std::vector<std::complex<double>>& Hypervector::phasors() {
    if (!is_phasor()) throw std::logic_error("complex components requested from a real vector");
    return phasors_;
}

double canonical_angle(double radians) {
    double a = std::fmod(radians, TWO_PI);
    if (a <= 0.0) a += TWO_PI;
    return a;
}

double Hypervector::angle(std::size_t i) const {
    const auto& c = phasors().at(i);
    if (c == std::complex<double>(0.0, 0.0)) return TWO_PI; // canonical angle of a cancelled sum
    return canonical_angle(std::arg(c));
}

std::vector<std::size_t> Hypervector::one_positions() const {
    const auto& v = reals();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0) out.push_back(i);
    return out;
}

double Hypervector::l2_norm() const {
    double s = 0.0;
    if (is_phasor()) {
        for (const auto& c : phasors_) s += std::norm(c);
    } else {
        for (double v : reals_) s += v * v;
    }
    return std::sqrt(s);
}

bool Hypervector::approx_equal(const Hypervector& other, double tol) const {
    if (!(space_ == other.space_)) return false;
    if (is_phasor()) {
        for (std::size_t i = 0; i < dim(); ++i) {
            double d = std::abs(phasors_[i] - other.phasors_[i]);
            // unit phasors: |a-b| ~ angle difference for small differences
            if (d > tol) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < dim(); ++i)
        if (reals_[i] != other.reals_[i]) return false;
    return true;
}

namespace {

// Floyd's algorithm: m distinct uniform indices out of n, order-independent set.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t m, RngStream& rng) {
    std::vector<std::size_t> out;
    out.reserve(m);
    std::vector<bool> taken(n, false);
    for (std::size_t j = n - m; j < n; ++j) {
        std::size_t t = rng.next_below(j + 1);
        if (taken[t]) t = j;
        taken[t] = true;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Hypervector random_hv(const SpaceSpec& space, RngStream& rng) {
    space.validate();
    const std::size_t d = space.dim;
    switch (space.kind) {
        case SpaceKind::dense_binary: {
            std::vector<double> v(d);
            for (auto& x : v) x = static_cast<double>(rng.next_u64() & 1u);
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::bipolar: {
            std::vector<double> v(d);
            for (auto& x : v) x = (rng.next_u64() & 1u) ? 1.0 : -1.0;
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::real: {
            const double sigma = 1.0 / std::sqrt(static_cast<double>(d));
            std::vector<double> v(d);
            for (auto& x : v) x = sigma * rng.next_normal();
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::phasor: {
            std::vector<std::complex<double>> v(d);
            for (auto& c : v) c = std::polar(1.0, rng.next_angle());
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::sparse_binary: {
            std::vector<double> v(d, 0.0);
            for (std::size_t i : sample_without_replacement(d, space.sparse_cardinality(), rng))
                v[i] = 1.0;
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::block_sparse: {
            std::vector<double> v(d, 0.0);
            const std::size_t b = space.block_size;
            for (std::size_t blk = 0; blk < d / b; ++blk)
                v[blk * b + rng.next_below(b)] = 1.0;
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::modular: {
            std::vector<double> v(d);
            for (auto& x : v) x = static_cast<double>(rng.next_below(space.range));
            return Hypervector(space, std::move(v));
        }
    }
    throw std::logic_error("unreachable space kind");
}

} // namespace hyperalg
