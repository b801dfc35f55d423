/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperalg {

PermutationSpec PermutationSpec::cyclic(std::int64_t shift) {
    PermutationSpec p;
    p.kind = Kind::cyclic_shift;
    p.power = shift;
    return p;
}

PermutationSpec PermutationSpec::seeded(std::uint64_t seed, std::string label,
                                        std::int64_t power, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw std::invalid_argument("permutation fraction must lie in [0, 1]");
    PermutationSpec p;
    p.kind = Kind::seeded;
    p.seed = seed;
    p.label = std::move(label);
    p.power = power;
    p.fraction = fraction;
    return p;
}

PermutationSpec PermutationSpec::explicit_map(std::vector<std::uint32_t> map, std::int64_t power) {
    PermutationSpec p;
    p.kind = Kind::explicit_map;
    p.index_map = std::move(map);
    p.power = power;
    return p;
}

PermutationSpec PermutationSpec::with_power(std::int64_t p) const {
    PermutationSpec out = *this;
    out.power = p;
    return out;
}

namespace {

void validate_bijection(const std::vector<std::uint32_t>& map, std::size_t dim) {
    if (map.size() != dim)
        throw std::invalid_argument("permutation map size does not match dimension");
    std::vector<bool> seen(dim, false);
    for (auto i : map) {
        if (i >= dim || seen[i])
            throw std::invalid_argument("permutation map is not a bijection");
        seen[i] = true;
    }
}

// Fisher-Yates order of all positions; the moved subset is its prefix, so
// subsets for growing fractions are nested.
std::vector<std::uint32_t> seeded_order(std::uint64_t seed, const std::string& label,
                                        std::size_t dim) {
    RngStream rng(seed, "perm/" + label);
    std::vector<std::uint32_t> order(dim);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = dim - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_below(i + 1)]);
    return order;
}

// One application as a source map: target position i takes the value at src[i].
std::vector<std::uint32_t> single_step_map(const PermutationSpec& p, std::size_t dim) {
    std::vector<std::uint32_t> src(dim);
    switch (p.kind) {
        case PermutationSpec::Kind::cyclic_shift: {
            // shift by one: result[i] = x[(i - 1) mod D]; powers repeat it
            for (std::size_t i = 0; i < dim; ++i)
                src[i] = static_cast<std::uint32_t>((i + dim - 1) % dim);
            return src;
        }
        case PermutationSpec::Kind::seeded: {
            const auto order = seeded_order(p.seed, p.label, dim);
            const auto k = static_cast<std::size_t>(
                std::llround(p.fraction * static_cast<double>(dim)));
            std::iota(src.begin(), src.end(), 0u);
            if (k >= 2) {
                // one cycle over the first k positions of the seeded order
                for (std::size_t t = 0; t < k; ++t)
                    src[order[t]] = order[(t + 1) % k];
            }
            return src;
        }
        case PermutationSpec::Kind::explicit_map:
            validate_bijection(p.index_map, dim);
            return p.index_map;
    }
    throw std::logic_error("unreachable permutation kind");
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& map) {
    std::vector<std::uint32_t> inv(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<std::uint32_t>(i);
    return inv;
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& outer,
                                   const std::vector<std::uint32_t>& inner) {
    std::vector<std::uint32_t> out(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) out[i] = inner[outer[i]];
    return out;
}

// Source map for |power| applications via binary exponentiation.
std::vector<std::uint32_t> power_map(const PermutationSpec& p, std::size_t dim) {
    if (p.kind == PermutationSpec::Kind::cyclic_shift) {
        // closed form: result[i] = x[(i - power) mod D]
        const auto d = static_cast<std::int64_t>(dim);
        std::int64_t s = ((-p.power) % d + d) % d;
        std::vector<std::uint32_t> src(dim);
        for (std::size_t i = 0; i < dim; ++i)
            src[i] = static_cast<std::uint32_t>((static_cast<std::int64_t>(i) + s) % d);
        return src;
    }
    std::vector<std::uint32_t> step = single_step_map(p, dim);
    if (p.power < 0) step = invert(step);
    std::uint64_t n = static_cast<std::uint64_t>(p.power < 0 ? -p.power : p.power);
    std::vector<std::uint32_t> acc(dim);
    std::iota(acc.begin(), acc.end(), 0u);
    while (n > 0) {
        if (n & 1u) acc = compose(acc, step);
        step = compose(step, step);
        n >>= 1u;
    }
    return acc;
}

template <typename T>
std::vector<T> gather(const std::vector<T>& x, const std::vector<std::uint32_t>& src) {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[src[i]];
    return out;
}

} // namespace

Hypervector permute(const Hypervector& a, const PermutationSpec& p) {
    const auto src = power_map(p, a.dim());
    if (a.is_phasor()) return Hypervector(a.space(), gather(a.phasors(), src));
    return Hypervector(a.space(), gather(a.reals(), src));
}

PermutationPower::PermutationPower(const PermutationSpec& base, std::size_t dim)
    : base_(base), dim_(dim), composed_(dim), step_(power_map(base, dim)) {
    std::iota(composed_.begin(), composed_.end(), 0u);
}

Hypervector PermutationPower::apply(const Hypervector& a) const {
    if (a.dim() != dim_) throw std::invalid_argument("permutation power: dimension mismatch");
    if (a.is_phasor()) return Hypervector(a.space(), gather(a.phasors(), composed_));
    return Hypervector(a.space(), gather(a.reals(), composed_));
}

void PermutationPower::advance() {
    composed_ = compose(composed_, step_);
    ++power_;
}

} // namespace hyperalg
