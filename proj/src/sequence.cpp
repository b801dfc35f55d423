/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/sequence.hpp"

#include <stdexcept>

namespace hyperalg {

namespace {

void check_codec(const SequenceCodec& codec) {
    if (!codec.model || !codec.symbols)
        throw std::invalid_argument("sequence codec: model and symbol memory are required");
    if (!(codec.symbols->space() == codec.model->space()))
        throw std::invalid_argument("sequence codec: symbol memory space does not match the model");
    if (codec.position == PositionScheme::trajectory) {
        switch (codec.model->name()) {
            case ModelName::hrr:
            case ModelName::fhrr:
            case ModelName::mcr:
            case ModelName::cgr:
                break;
            default:
                throw std::invalid_argument(
                    "trajectory association needs a non-self-inverse binding (HRR/FHRR/MCR)");
        }
    }
    if (codec.position == PositionScheme::correlated && !codec.position_levels)
        throw std::invalid_argument("correlated positions need a position level codebook");
}

Hypervector position_role(const SequenceCodec& codec, std::size_t i) {
    RngStream rng(codec.seed, "seq-pos/" + std::to_string(i));
    return codec.model->random_atom(rng);
}

Hypervector trajectory_key_power(const SequenceCodec& codec, std::size_t i) {
    RngStream rng(codec.seed, "seq-traj-key");
    const Hypervector key = codec.model->random_atom(rng);
    Hypervector acc = key;
    for (std::size_t k = 0; k < i; ++k) acc = bind(*codec.model, acc, key);
    return acc; // key bound to itself i+1 times
}

Hypervector positioned_term(const SequenceCodec& codec, const Hypervector& sym, std::size_t i) {
    switch (codec.position) {
        case PositionScheme::role_hv:
            return bind(*codec.model, position_role(codec, i), sym);
        case PositionScheme::permutation_power:
            return permute(sym, codec.base_perm.with_power(
                                    codec.base_perm.power * static_cast<std::int64_t>(i)));
        case PositionScheme::correlated: {
            if (i >= codec.position_levels->levels())
                throw std::invalid_argument("sequence longer than the position codebook");
            return bind(*codec.model, codec.position_levels->level(i), sym);
        }
        case PositionScheme::trajectory:
            return bind(*codec.model, sym, trajectory_key_power(codec, i));
    }
    throw std::logic_error("unreachable position scheme");
}

Hypervector combine(const SequenceCodec& codec, std::vector<Hypervector> terms,
                    std::span<const Hypervector> bag) {
    const ModelAlgebra& model = *codec.model;
    switch (codec.composition) {
        case SeqComposition::bind:
            return bind_all(model, terms);
        case SeqComposition::superpose:
            break;
        case SeqComposition::hybrid:
            terms.insert(terms.end(), bag.begin(), bag.end());
            break;
    }
    if (codec.norm_override) return superpose(model, terms, *codec.norm_override);
    return superpose(model, terms);
}

} // namespace

Hypervector encode_sequence(const SequenceCodec& codec, std::span<const std::string> symbols) {
    check_codec(codec);
    if (symbols.empty()) throw std::invalid_argument("encode_sequence: empty symbol list");

    std::vector<Hypervector> bag;
    std::vector<Hypervector> terms;
    terms.reserve(symbols.size());

    if (codec.position == PositionScheme::permutation_power) {
        // running composition keeps the cost per symbol independent of position
        PermutationPower walker(codec.base_perm, codec.model->space().dim);
        for (const auto& id : symbols) {
            const Hypervector& sym = codec.symbols->get(id);
            terms.push_back(walker.apply(sym));
            walker.advance();
            if (codec.composition == SeqComposition::hybrid) bag.push_back(sym);
        }
    } else {
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            const Hypervector& sym = codec.symbols->get(symbols[i]);
            terms.push_back(positioned_term(codec, sym, i));
            if (codec.composition == SeqComposition::hybrid) bag.push_back(sym);
        }
    }
    return combine(codec, std::move(terms), bag);
}

Hypervector append_symbol(const SequenceCodec& codec, const Hypervector& seq,
                          const std::string& symbol, std::size_t position) {
    check_codec(codec);
    if (codec.composition == SeqComposition::hybrid)
        throw std::invalid_argument("append_symbol: hybrid compositions are rebuilt, not appended");
    const Hypervector term = positioned_term(codec, codec.symbols->get(symbol), position);
    if (codec.composition == SeqComposition::bind) return bind(*codec.model, seq, term);
    std::vector<Hypervector> pair{seq, term};
    return superpose(*codec.model, pair, codec.norm_override.value_or(NormMode::none));
}

Hypervector position_query(const SequenceCodec& codec, const Hypervector& seq,
                           std::size_t position) {
    check_codec(codec);
    switch (codec.position) {
        case PositionScheme::permutation_power:
            return permute(seq, codec.base_perm.with_power(
                                    -codec.base_perm.power * static_cast<std::int64_t>(position)));
        case PositionScheme::role_hv:
            return unbind(*codec.model, seq, position_role(codec, position));
        case PositionScheme::correlated:
            return unbind(*codec.model, seq, codec.position_levels->level(position));
        case PositionScheme::trajectory:
            return unbind(*codec.model, seq, trajectory_key_power(codec, position));
    }
    throw std::logic_error("unreachable position scheme");
}

Hypervector encode_ngram(const ModelAlgebra& model, const ItemMemory& symbols,
                         std::span<const std::string> gram, NgramScheme scheme,
                         const PermutationSpec& base) {
    if (gram.empty()) throw std::invalid_argument("encode_ngram: empty gram");
    std::vector<Hypervector> terms;
    terms.reserve(gram.size());
    PermutationPower walker(base, model.space().dim);
    for (const auto& id : gram) {
        terms.push_back(walker.apply(symbols.get(id)));
        walker.advance();
    }
    if (scheme == NgramScheme::multiplicative) return bind_all(model, terms);
    return superpose(model, terms, NormMode::none);
}

Hypervector encode_ngram_stats(const ModelAlgebra& model, const ItemMemory& symbols,
                               std::span<const std::string> text, std::size_t n,
                               NgramScheme scheme, const PermutationSpec& base) {
    if (n < 1) throw std::invalid_argument("encode_ngram_stats: n must be >= 1");
    if (text.size() < n)
        throw std::invalid_argument("encode_ngram_stats: stream shorter than the n-gram size");
    std::vector<Hypervector> grams;
    grams.reserve(text.size() - n + 1);
    for (std::size_t i = 0; i + n <= text.size(); ++i)
        grams.push_back(encode_ngram(model, symbols, text.subspan(i, n), scheme, base));
    return superpose(model, grams, NormMode::none);
}

namespace {

Hypervector componentwise_sub(const Hypervector& a, const Hypervector& b) {
    if (a.is_phasor()) {
        std::vector<std::complex<double>> z(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) z[i] = a.phasors()[i] - b.phasors()[i];
        return Hypervector(a.space(), std::move(z));
    }
    std::vector<double> z(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) z[i] = a.reals()[i] - b.reals()[i];
    return Hypervector(a.space(), std::move(z));
}

void require_additive(const ModelAlgebra& model, const char* what) {
    if (model.space().is_binary() || model.space().kind == SpaceKind::modular)
        throw std::invalid_argument(std::string(what) +
                                    ": stacks need an additive space (bipolar/real/phasor)");
}

} // namespace

Hypervector stack_push(const ModelAlgebra& model, const Hypervector& stack,
                       const Hypervector& item, const PermutationSpec& rho) {
    require_additive(model, "stack_push");
    if (!(item.space() == model.space()) || !(stack.space() == model.space()))
        throw std::invalid_argument("stack_push: space mismatch");
    Hypervector shifted = permute(stack, rho);
    std::vector<Hypervector> pair{shifted, item};
    return superpose(model, pair, NormMode::none);
}

StackPop stack_pop(const ModelAlgebra& model, const Hypervector& stack, const ItemMemory& memory,
                   const PermutationSpec& rho) {
    require_additive(model, "stack_pop");
    if (stack.l2_norm() == 0.0) throw std::invalid_argument("stack_pop: pop on empty stack");
    CleanupResult top = memory.cleanup(stack);
    Hypervector rest = componentwise_sub(stack, memory.get(top.id));
    return StackPop{top.id, top.score, permute(rest, rho.inverse())};
}

} // namespace hyperalg
