/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <vector>

#include "hyperalg/space.hpp"

namespace hyperalg {

enum class LevelScheme {
    concatenation, // level i mixes a prefix of the lo endpoint with a suffix of the hi endpoint
    flip,          // level i flips a fresh disjoint position subset of level i-1
};

std::string to_string(LevelScheme scheme);
LevelScheme level_scheme_from_string(const std::string& name);

/**
 * Ordered family of correlated hypervectors for quantized scalar grades
 * (a "continuous item memory"): similarity falls off with grade distance,
 * endpoints are independent random vectors.
 */
class LevelCodebook {
public:
    /**
     * Builds L >= 2 levels over [lo, hi]. Concatenation: level i takes the
     * first round(D*(L-1-i)/(L-1)) components from the lo endpoint and the
     * rest from the hi endpoint. Flip: level i negates/flips a fresh
     * ceil(D/(2(L-1))) positions of level i-1; subsets are disjoint across
     * grades so the endpoints differ in ~D/2 positions.
     */
    LevelCodebook(const SpaceSpec& space, std::size_t levels, LevelScheme scheme,
                  double lo, double hi, RngStream& rng);

    std::size_t levels() const noexcept { return levels_.size(); }
    LevelScheme scheme() const noexcept { return scheme_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const SpaceSpec& space() const noexcept { return space_; }

    const Hypervector& level(std::size_t i) const { return levels_.at(i); }

    /// Grade index for x: round-half-up of (x-lo)/(hi-lo)*(L-1).
    std::size_t grade(double x, bool clamp = false) const;

private:
    SpaceSpec space_;
    LevelScheme scheme_;
    double lo_, hi_;
    std::vector<Hypervector> levels_;
};

/// Level hypervector for scalar x; throws on out-of-range x unless clamping.
Hypervector encode_scalar(const LevelCodebook& codebook, double x, bool clamp = false);

} // namespace hyperalg
