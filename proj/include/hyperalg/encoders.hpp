/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <span>
#include <variant>
#include <vector>

#include "hyperalg/level_codebook.hpp"
#include "hyperalg/model.hpp"
#include "hyperalg/permutation.hpp"

namespace hyperalg {

/// Set / multiset: superposition of the member vectors with the model's
/// default normalization. Repeated members count once per occurrence.
Hypervector encode_set(const ModelAlgebra& model, std::span<const Hypervector> members);

/// Role side of a role-filler pair: an explicit hypervector or a permutation.
using Role = std::variant<Hypervector, PermutationSpec>;

/**
 * Superposition of role-filler bindings. Roles must be mutually
 * quasi-orthogonal for the fillers to be recoverable (caller's
 * responsibility; random roles are). Permutation roles permute the filler
 * instead of multiplying.
 */
Hypervector encode_role_filler(const ModelAlgebra& model,
                               std::span<const std::pair<Role, Hypervector>> pairs);

enum class VectorRoleScheme {
    random_roles,       // independent role vector per component
    permutation_roles,  // component i applies rho^i
};

/**
 * Compositional numeric-vector encoding over one shared level codebook:
 * sum_i bind(role_i, level(vec_i)). Role vectors are seeded from
 * (seed, "vec-role/<i>").
 */
Hypervector encode_vector_compositional(const ModelAlgebra& model, std::span<const double> vec,
                                        const LevelCodebook& codebook, VectorRoleScheme scheme,
                                        std::uint64_t seed, bool clamp = false);

} // namespace hyperalg
