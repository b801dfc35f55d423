/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperalg {

/**
 * Counter-based deterministic random stream.
 *
 * A stream is fully identified by (master seed, label, counter): the same
 * triple always yields the same draws, and distinct labels give
 * statistically independent streams. Draws advance only the counter, so a
 * stream can be re-created at any point of its history.
 */
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label, std::uint64_t counter = 0);

    /// New independent stream under the same master seed.
    RngStream derive(std::string_view sublabel) const;

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double next_double();

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal via Box-Muller (consumes two u64 draws, no caching).
    double next_normal();

    /// Uniform angle in (0, 2*pi].
    double next_angle();

    std::uint64_t seed() const noexcept { return seed_; }
    const std::string& label() const noexcept { return label_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::string label_;
    std::uint64_t key_;      // mixed (seed, label)
    std::uint64_t counter_;
};

/// 64-bit mix used for stream keying; stable across platforms.
std::uint64_t mix64(std::uint64_t x);

} // namespace hyperalg
