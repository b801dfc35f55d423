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

#include "hyperalg/item_memory.hpp"
#include "hyperalg/level_codebook.hpp"
#include "hyperalg/model.hpp"
#include "hyperalg/permutation.hpp"

namespace hyperalg {

enum class PositionScheme {
    role_hv,           // random role vector per position
    permutation_power, // position i applies the base permutation i times
    correlated,        // positions drawn from a level codebook
    trajectory,        // position key bound to itself i+1 times
};

enum class SeqComposition {
    superpose,     // sum of positioned symbols
    bind,          // product of positioned symbols
    hybrid,        // bag of symbols + ordered encoding, superimposed
};

/**
 * How a symbol sequence becomes one hypervector: the model, the symbol
 * codebook, how positions are attached and how positioned terms combine.
 * Trajectory positions need a non-self-inverse binding (HRR/FHRR/MCR/CGR).
 */
struct SequenceCodec {
    const ModelAlgebra* model = nullptr;
    const ItemMemory* symbols = nullptr;
    PositionScheme position = PositionScheme::permutation_power;
    SeqComposition composition = SeqComposition::superpose;
    PermutationSpec base_perm = PermutationSpec::cyclic(1);
    const LevelCodebook* position_levels = nullptr; // correlated scheme
    std::uint64_t seed = 0;                         // role/trajectory streams
    std::optional<NormMode> norm_override;          // superpose/hybrid composition
};

Hypervector encode_sequence(const SequenceCodec& codec, std::span<const std::string> symbols);

/// Incremental extension: the sequence so far plus one symbol at `position`.
Hypervector append_symbol(const SequenceCodec& codec, const Hypervector& seq,
                          const std::string& symbol, std::size_t position);

/**
 * Unbinds position i from a superposed sequence encoding; clean the result
 * against the codec's symbol memory to read the symbol.
 */
Hypervector position_query(const SequenceCodec& codec, const Hypervector& seq,
                           std::size_t position);

enum class NgramScheme {
    multiplicative, // product of permuted symbols: distinct n-grams quasi-orthogonal
    superposed,     // unconstrained sum of permuted symbols: similar n-grams stay similar
};

Hypervector encode_ngram(const ModelAlgebra& model, const ItemMemory& symbols,
                         std::span<const std::string> gram, NgramScheme scheme,
                         const PermutationSpec& base = PermutationSpec::cyclic(1));

/**
 * Unconstrained sum over all sliding-window n-grams of the stream; the dot
 * product against one n-gram's vector estimates that n-gram's count.
 */
Hypervector encode_ngram_stats(const ModelAlgebra& model, const ItemMemory& symbols,
                               std::span<const std::string> text, std::size_t n,
                               NgramScheme scheme = NgramScheme::multiplicative,
                               const PermutationSpec& base = PermutationSpec::cyclic(1));

/// rho(stack) + item. An all-zero vector is the empty stack.
Hypervector stack_push(const ModelAlgebra& model, const Hypervector& stack,
                       const Hypervector& item,
                       const PermutationSpec& rho = PermutationSpec::cyclic(1));

struct StackPop {
    std::string id;        // recovered top element
    double score;
    Hypervector remaining; // rho^-1(stack - top)
};

/// Clean-up recovers the top; throws on an empty (all-zero) stack.
StackPop stack_pop(const ModelAlgebra& model, const Hypervector& stack, const ItemMemory& memory,
                   const PermutationSpec& rho = PermutationSpec::cyclic(1));

} // namespace hyperalg
