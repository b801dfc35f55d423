/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/level_codebook.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hyperalg {

std::string to_string(LevelScheme scheme) {
    return scheme == LevelScheme::concatenation ? "concatenation" : "flip";
}

LevelScheme level_scheme_from_string(const std::string& name) {
    if (name == "concatenation") return LevelScheme::concatenation;
    if (name == "flip") return LevelScheme::flip;
    throw std::invalid_argument("unknown level scheme: " + name);
}

namespace {

// flip = move the component to the "opposite" value of its domain
void flip_component(Hypervector& v, std::size_t i) {
    switch (v.space().kind) {
        case SpaceKind::dense_binary:
        case SpaceKind::sparse_binary:
        case SpaceKind::block_sparse:
            v.reals()[i] = v.reals()[i] != 0.0 ? 0.0 : 1.0;
            break;
        case SpaceKind::bipolar:
        case SpaceKind::real:
            v.reals()[i] = -v.reals()[i];
            break;
        case SpaceKind::phasor:
            v.phasors()[i] = -v.phasors()[i];
            break;
        case SpaceKind::modular: {
            const auto r = v.space().range;
            auto c = static_cast<std::uint64_t>(v.reals()[i]);
            v.reals()[i] = static_cast<double>((c + r / 2) % r);
            break;
        }
    }
}

} // namespace

LevelCodebook::LevelCodebook(const SpaceSpec& space, std::size_t levels, LevelScheme scheme,
                             double lo, double hi, RngStream& rng)
    : space_(space), scheme_(scheme), lo_(lo), hi_(hi) {
    space_.validate();
    if (levels < 2) throw std::invalid_argument("level codebook needs at least 2 levels");
    if (levels > space.dim)
        throw std::invalid_argument("more levels than dimensions cannot be differentiated");
    if (!(lo < hi)) throw std::invalid_argument("level codebook range must satisfy lo < hi");
    levels_.reserve(levels);

    const std::size_t d = space.dim;
    if (scheme == LevelScheme::concatenation) {
        const Hypervector lo_hv = random_hv(space, rng);
        const Hypervector hi_hv = random_hv(space, rng);
        for (std::size_t i = 0; i < levels; ++i) {
            // prefix length round(D*(L-1-i)/(L-1)); level 0 = lo, level L-1 = hi
            const auto split = static_cast<std::size_t>(std::llround(
                static_cast<double>(d) * static_cast<double>(levels - 1 - i) /
                static_cast<double>(levels - 1)));
            Hypervector hv = hi_hv;
            if (space.kind == SpaceKind::phasor) {
                for (std::size_t j = 0; j < split; ++j) hv.phasors()[j] = lo_hv.phasors()[j];
            } else {
                for (std::size_t j = 0; j < split; ++j) hv.reals()[j] = lo_hv.reals()[j];
            }
            levels_.push_back(std::move(hv));
        }
        return;
    }

    // flip scheme: disjoint flip subsets, ceil(D/(2(L-1))) positions per grade
    const std::size_t budget =
        (d + 2 * (levels - 1) - 1) / (2 * (levels - 1));
    std::vector<std::uint32_t> order(d);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = d - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_below(i + 1)]);

    Hypervector cur = random_hv(space, rng);
    levels_.push_back(cur);
    std::size_t used = 0;
    for (std::size_t i = 1; i < levels; ++i) {
        const std::size_t take = std::min(budget, d - used);
        for (std::size_t t = 0; t < take; ++t) flip_component(cur, order[used + t]);
        used += take;
        levels_.push_back(cur);
    }
}

std::size_t LevelCodebook::grade(double x, bool clamp) const {
    if (x < lo_ || x > hi_) {
        if (!clamp)
            throw std::out_of_range("scalar outside the codebook range and clamping is off");
        x = std::clamp(x, lo_, hi_);
    }
    const double l1 = static_cast<double>(levels_.size() - 1);
    const double pos = (x - lo_) / (hi_ - lo_) * l1;
    // round half up
    auto g = static_cast<std::size_t>(std::floor(pos + 0.5));
    return std::min<std::size_t>(g, levels_.size() - 1);
}

Hypervector encode_scalar(const LevelCodebook& codebook, double x, bool clamp) {
    if (!std::isfinite(x)) throw std::invalid_argument("encode_scalar: non-finite input");
    return codebook.level(codebook.grade(x, clamp));
}

} // namespace hyperalg
