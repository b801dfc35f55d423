/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/encoders.hpp"

#include <stdexcept>

namespace hyperalg {

Hypervector encode_set(const ModelAlgebra& model, std::span<const Hypervector> members) {
    if (members.empty()) throw std::invalid_argument("encode_set: empty member list");
    return superpose(model, members);
}

Hypervector encode_role_filler(const ModelAlgebra& model,
                               std::span<const std::pair<Role, Hypervector>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("encode_role_filler: empty pair list");
    std::vector<Hypervector> terms;
    terms.reserve(pairs.size());
    for (const auto& [role, filler] : pairs) {
        if (std::holds_alternative<PermutationSpec>(role)) {
            terms.push_back(permute(filler, std::get<PermutationSpec>(role)));
        } else {
            terms.push_back(bind(model, std::get<Hypervector>(role), filler));
        }
    }
    return superpose(model, terms);
}

Hypervector encode_vector_compositional(const ModelAlgebra& model, std::span<const double> vec,
                                        const LevelCodebook& codebook, VectorRoleScheme scheme,
                                        std::uint64_t seed, bool clamp) {
    if (vec.empty()) throw std::invalid_argument("encode_vector_compositional: empty vector");
    if (!(codebook.space() == model.space()))
        throw std::invalid_argument("encode_vector_compositional: codebook space mismatch");
    std::vector<Hypervector> terms;
    terms.reserve(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i) {
        Hypervector filler = encode_scalar(codebook, vec[i], clamp);
        if (scheme == VectorRoleScheme::permutation_roles) {
            terms.push_back(permute(filler, PermutationSpec::seeded(
                                                seed, "vec-perm", static_cast<std::int64_t>(i))));
        } else {
            RngStream rng(seed, "vec-role/" + std::to_string(i));
            terms.push_back(bind(model, model.random_atom(rng), filler));
        }
    }
    return superpose(model, terms);
}

} // namespace hyperalg
