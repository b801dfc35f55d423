/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperalg/rng.hpp"

namespace hyperalg {

enum class SpaceKind {
    dense_binary,   // {0,1}
    bipolar,        // {-1,+1}
    real,           // R
    phasor,         // unit complex, angle in (0, 2*pi]
    sparse_binary,  // {0,1} with density p1
    block_sparse,   // {0,1}, one 1 per block in canonical form
    modular,        // integers {0..range-1}
};

std::string to_string(SpaceKind kind);
SpaceKind space_kind_from_string(const std::string& name);

/// Describes a hypervector space: kind, dimension and kind-specific parameters.
struct SpaceSpec {
    SpaceKind kind = SpaceKind::bipolar;
    std::size_t dim = 0;
    double density = 0.0;       // sparse_binary: p1 in (0,1)
    std::size_t block_size = 0; // block_sparse: divides dim
    std::uint64_t range = 0;    // modular: r >= 2

    static SpaceSpec dense_binary(std::size_t dim);
    static SpaceSpec bipolar(std::size_t dim);
    static SpaceSpec real(std::size_t dim);
    static SpaceSpec phasor(std::size_t dim);
    static SpaceSpec sparse_binary(std::size_t dim, double density);
    static SpaceSpec block_sparse(std::size_t dim, std::size_t block_size);
    static SpaceSpec modular(std::size_t dim, std::uint64_t range);

    /// Throws std::invalid_argument when parameters are out of range.
    void validate() const;

    bool is_binary() const noexcept {
        return kind == SpaceKind::dense_binary || kind == SpaceKind::sparse_binary ||
               kind == SpaceKind::block_sparse;
    }

    /// Number of 1-components of a canonical sparse/block-sparse vector.
    std::size_t sparse_cardinality() const;

    bool operator==(const SpaceSpec&) const = default;
};

/**
 * A fixed-dimension vector tagged with its space.
 *
 * Non-phasor kinds store components as doubles (binary 0/1, bipolar +-1,
 * modular integers). Phasor kinds store complex components so unconstrained
 * superpositions keep their magnitudes. Atomic vectors stay inside the
 * space's domain; intermediate superpositions may leave it (e.g. integer
 * counts from a bipolar sum).
 */
class Hypervector {
public:
    Hypervector() = default;
    Hypervector(SpaceSpec space, std::vector<double> comps);
    Hypervector(SpaceSpec space, std::vector<std::complex<double>> comps);

    /// All-zero vector of the given space (empty superposition identity).
    static Hypervector zeros(const SpaceSpec& space);

    const SpaceSpec& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim; }
    bool is_phasor() const noexcept { return space_.kind == SpaceKind::phasor; }

    const std::vector<double>& reals() const;
    std::vector<double>& reals();
    const std::vector<std::complex<double>>& phasors() const;
    std::vector<std::complex<double>>& phasors();

    /// Angle of component i mapped into (0, 2*pi]; phasor kinds only.
    double angle(std::size_t i) const;

    /// Indices of nonzero components (binary kinds).
    std::vector<std::size_t> one_positions() const;

    double l2_norm() const;

    /// Exact comparison for discrete kinds, 1e-9 angle tolerance for phasors.
    bool approx_equal(const Hypervector& other, double tol = 1e-9) const;

private:
    SpaceSpec space_;
    std::vector<double> reals_;
    std::vector<std::complex<double>> phasors_;
};

/**
 * I.i.d. random atomic hypervector:
 * dense binary Bernoulli(1/2), bipolar uniform {-1,+1}, real N(0, 1/D),
 * phasor uniform angle, sparse binary exactly round(p1*D) ones, block-sparse
 * one uniform index per block, modular uniform {0..r-1}.
 */
Hypervector random_hv(const SpaceSpec& space, RngStream& rng);

/// Angle mapped into (0, 2*pi].
double canonical_angle(double radians);

} // namespace hyperalg
