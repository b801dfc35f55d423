/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperalg/binding_matrix.hpp"
#include "hyperalg/permutation.hpp"
#include "hyperalg/similarity.hpp"
#include "hyperalg/space.hpp"

namespace hyperalg {

enum class ModelName { bsc, map, hrr, fhrr, sbdr, sbc, mcr, cgr, mbat, tpr2 };

std::string to_string(ModelName name);
ModelName model_from_string(const std::string& name);

/// Space kind the model's atomic vectors live in.
SpaceKind atomic_space_kind(ModelName name);

enum class NormMode {
    none,           // unconstrained sum
    euclidean,      // divide by the L2 norm
    clip,           // clamp components to [-limit, limit]
    binarize,       // majority (BSC), sign (MAP), unit magnitude (FHRR), block argmax (SBC)
    disjunction,    // component-wise OR, binary spaces
    mcr_discretize, // phasor sum snapped to the nearest integer angle
};

std::string to_string(NormMode mode);
NormMode norm_mode_from_string(const std::string& name);

struct ModelParams {
    std::size_t thinning_depth = 3;  // SBDR: T
    std::size_t cdt_pool_size = 16;  // SBDR: seeded permutations available to cdt
    BindingMatrixKind matrix_kind = BindingMatrixKind::random_orthogonal; // MBAT
};

/**
 * One HDC/VSA model: an atomic-vector space plus its binding, unbinding,
 * superposition and similarity conventions. Immutable after construction
 * (including the tie-break vectors), so safe to share across threads.
 */
class ModelAlgebra {
public:
    ModelAlgebra(ModelName name, SpaceSpec space, std::uint64_t seed, ModelParams params = {});

    /// Convenience constructor with the model's canonical space.
    static ModelAlgebra make(ModelName name, std::size_t dim, std::uint64_t seed,
                             ModelParams params = {});

    ModelName name() const noexcept { return name_; }
    const SpaceSpec& space() const noexcept { return space_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const ModelParams& params() const noexcept { return params_; }

    Metric metric() const noexcept { return metric_; }
    NormMode default_norm() const noexcept { return default_norm_; }

    /// Self-inverse binding (XOR / bipolar multiplication).
    bool binding_self_inverse() const noexcept {
        return name_ == ModelName::bsc || name_ == ModelName::map;
    }

    Hypervector random_atom(RngStream& rng) const { return random_hv(space_, rng); }

    /// BSC majority tie-break vector, included as an extra summand for even counts.
    const Hypervector& tie_break() const;
    /// MAP sign-binarization mask for exact zeros.
    const Hypervector& sign_mask() const;
    /// SBDR thinning permutation k (seeded from the model seed).
    PermutationSpec cdt_permutation(std::size_t k) const;
    /// Fresh role matrix for MBAT binding, seeded under this model.
    BindingMatrix role_matrix(const std::string& label) const;

private:
    ModelName name_;
    SpaceSpec space_;
    std::uint64_t seed_;
    ModelParams params_;
    Metric metric_;
    NormMode default_norm_;
    std::optional<Hypervector> tie_break_;
    std::optional<Hypervector> sign_mask_;
};

/**
 * Multiplicative binding. Per model: XOR (BSC), component-wise product
 * (MAP), circular convolution (HRR), complex product (FHRR), block-wise
 * circular convolution (SBC), modular addition (MCR/CGR). SBDR binds via
 * cdt/conjunction_bind and TPR2 via tpr2_bind; both are rejected here.
 */
Hypervector bind(const ModelAlgebra& model, const Hypervector& a, const Hypervector& b);

/// MBAT binding: role matrix times filler.
Hypervector bind(const ModelAlgebra& model, const BindingMatrix& role, const Hypervector& filler);

/// Left fold of bind over two or more vectors.
Hypervector bind_all(const ModelAlgebra& model, std::span<const Hypervector> inputs);

/**
 * Recovers the factor bound with `known`: exact for BSC/MAP/FHRR/MCR and
 * orthogonal MBAT, approximate (crosstalk, needs clean-up) for HRR/SBC.
 */
Hypervector unbind(const ModelAlgebra& model, const Hypervector& bound, const Hypervector& known);

/// MBAT unbinding via transpose (orthogonal kind) or pseudo-inverse.
Hypervector unbind(const ModelAlgebra& model, const Hypervector& bound, const BindingMatrix& role);

Hypervector superpose(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                      NormMode mode, double clip_limit = 1.0);

/// Superposition with the model's default normalization.
Hypervector superpose(const ModelAlgebra& model, std::span<const Hypervector> inputs);

/**
 * Context-Dependent Thinning: disjunction of the inputs followed by
 * conjunction with the union of T permuted copies. The result's 1-set is a
 * subset of the plain disjunction's and its density grows with T.
 */
Hypervector cdt(const ModelAlgebra& model, std::span<const Hypervector> inputs, std::size_t depth);

/// CDT with the model's configured thinning depth.
Hypervector cdt(const ModelAlgebra& model, std::span<const Hypervector> inputs);

/**
 * Conjunction binding (SBDR): component-wise AND of two or more sparse
 * vectors. Sets *density_underflow when the supports are disjoint and the
 * result is all-zero.
 */
Hypervector conjunction_bind(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                             bool* density_underflow = nullptr);

} // namespace hyperalg
