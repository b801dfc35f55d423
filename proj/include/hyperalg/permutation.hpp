/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperalg/space.hpp"

namespace hyperalg {

/**
 * A reusable permutation binding: which bijection, how many times, and on
 * what fraction of positions.
 *
 * Seeded permutations with fraction f < 1 move only a fixed seeded subset of
 * round(f*D) positions (a single cycle over that subset), so repeated calls
 * with growing f share their position schedule: the subsets are nested.
 * power may be negative (inverse); permute(permute(x, p), inverse) == x.
 */
struct PermutationSpec {
    enum class Kind { cyclic_shift, seeded, explicit_map };

    Kind kind = Kind::cyclic_shift;
    std::int64_t power = 1;
    double fraction = 1.0;               // seeded kind only
    std::uint64_t seed = 0;              // seeded kind
    std::string label;                   // seeded kind
    std::vector<std::uint32_t> index_map; // explicit kind: result[i] = x[index_map[i]]

    static PermutationSpec cyclic(std::int64_t shift = 1);
    static PermutationSpec seeded(std::uint64_t seed, std::string label,
                                  std::int64_t power = 1, double fraction = 1.0);
    static PermutationSpec explicit_map(std::vector<std::uint32_t> map, std::int64_t power = 1);

    PermutationSpec with_power(std::int64_t p) const;
    PermutationSpec inverse() const { return with_power(-power); }
};

Hypervector permute(const Hypervector& a, const PermutationSpec& p);

/**
 * Stateful applier for incremental sequence building: one more application
 * of the base permutation per step at O(D) cost, independent of the step
 * index.
 */
class PermutationPower {
public:
    PermutationPower(const PermutationSpec& base, std::size_t dim);

    /// Applies the base permutation `current power` times.
    Hypervector apply(const Hypervector& a) const;
    void advance();                 // power += 1
    std::int64_t power() const noexcept { return power_; }

private:
    PermutationSpec base_;
    std::size_t dim_;
    std::int64_t power_ = 0;
    std::vector<std::uint32_t> composed_; // source index per target position
    std::vector<std::uint32_t> step_;     // one application of the base
};

} // namespace hyperalg
