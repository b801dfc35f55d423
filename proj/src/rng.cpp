/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {

// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

RngStream::RngStream(std::uint64_t seed, std::string_view label, std::uint64_t counter)
    : seed_(seed), label_(label), counter_(counter) {
    key_ = mix64(mix64(seed + GOLDEN) ^ fnv1a(label));
}

RngStream RngStream::derive(std::string_view sublabel) const {
    std::string child = label_;
    child += '/';
    child += sublabel;
    return RngStream(seed_, child);
}

std::uint64_t RngStream::next_u64() {
    return mix64(key_ + (++counter_) * GOLDEN);
}

double RngStream::next_double() {
    // 53 high bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RngStream::next_below: n must be positive");
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
}

double RngStream::next_normal() {
    // Box-Muller; u1 kept away from 0 so log() stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::next_angle() {
    // (0, 2*pi]: complement of [0, 1) keeps the endpoint convention
    return 2.0 * std::numbers::pi * (1.0 - next_double());
}

} // namespace hyperalg
