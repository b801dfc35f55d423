/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/model.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {

constexpr double TWO_PI = 2.0 * std::numbers::pi;

void require_same_space(const ModelAlgebra& model, const Hypervector& v, const char* what) {
    if (!(v.space() == model.space()))
        throw std::invalid_argument(std::string(what) + ": operand space does not match the model");
}

void require_binary_values(const Hypervector& v, const char* what) {
    for (double x : v.reals())
        if (x != 0.0 && x != 1.0)
            throw std::invalid_argument(std::string(what) + ": vector has non-binary components");
}

void require_integer_values(const Hypervector& v, std::uint64_t range, const char* what) {
    for (double x : v.reals()) {
        if (x != std::floor(x) || x < 0.0 || x >= static_cast<double>(range))
            throw std::invalid_argument(std::string(what) +
                                        ": component outside the modular range");
    }
}

// one nonzero per block = canonical maximally sparse form
bool is_canonical_block_sparse(const Hypervector& v) {
    const std::size_t b = v.space().block_size;
    for (std::size_t blk = 0; blk < v.dim() / b; ++blk) {
        std::size_t nz = 0;
        for (std::size_t j = 0; j < b; ++j) nz += v.reals()[blk * b + j] != 0.0;
        if (nz != 1) return false;
    }
    return true;
}

std::vector<double> involution(const std::vector<double>& a) {
    const std::size_t d = a.size();
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) out[j] = a[(d - j) % d];
    return out;
}

} // namespace

std::string to_string(ModelName name) {
    switch (name) {
        case ModelName::bsc: return "bsc";
        case ModelName::map: return "map";
        case ModelName::hrr: return "hrr";
        case ModelName::fhrr: return "fhrr";
        case ModelName::sbdr: return "sbdr";
        case ModelName::sbc: return "sbc";
        case ModelName::mcr: return "mcr";
        case ModelName::cgr: return "cgr";
        case ModelName::mbat: return "mbat";
        case ModelName::tpr2: return "tpr2";
    }
    throw std::logic_error("unreachable model name");
}

ModelName model_from_string(const std::string& name) {
    if (name == "bsc") return ModelName::bsc;
    if (name == "map") return ModelName::map;
    if (name == "hrr") return ModelName::hrr;
    if (name == "fhrr") return ModelName::fhrr;
    if (name == "sbdr") return ModelName::sbdr;
    if (name == "sbc") return ModelName::sbc;
    if (name == "mcr") return ModelName::mcr;
    if (name == "cgr") return ModelName::cgr;
    if (name == "mbat") return ModelName::mbat;
    if (name == "tpr2") return ModelName::tpr2;
    throw std::invalid_argument("unknown model: " + name);
}

SpaceKind atomic_space_kind(ModelName name) {
    switch (name) {
        case ModelName::bsc: return SpaceKind::dense_binary;
        case ModelName::map: return SpaceKind::bipolar;
        case ModelName::hrr: return SpaceKind::real;
        case ModelName::fhrr: return SpaceKind::phasor;
        case ModelName::sbdr: return SpaceKind::sparse_binary;
        case ModelName::sbc: return SpaceKind::block_sparse;
        case ModelName::mcr: return SpaceKind::modular;
        case ModelName::cgr: return SpaceKind::modular;
        case ModelName::mbat: return SpaceKind::bipolar;
        case ModelName::tpr2: return SpaceKind::real;
    }
    throw std::logic_error("unreachable model name");
}

std::string to_string(NormMode mode) {
    switch (mode) {
        case NormMode::none: return "none";
        case NormMode::euclidean: return "euclidean";
        case NormMode::clip: return "clip";
        case NormMode::binarize: return "binarize";
        case NormMode::disjunction: return "disjunction";
        case NormMode::mcr_discretize: return "mcr-discretize";
    }
    throw std::logic_error("unreachable norm mode");
}

NormMode norm_mode_from_string(const std::string& name) {
    if (name == "none") return NormMode::none;
    if (name == "euclidean") return NormMode::euclidean;
    if (name == "clip") return NormMode::clip;
    if (name == "binarize" || name == "majority") return NormMode::binarize;
    if (name == "disjunction") return NormMode::disjunction;
    if (name == "mcr-discretize") return NormMode::mcr_discretize;
    throw std::invalid_argument("unknown norm mode: " + name);
}

ModelAlgebra::ModelAlgebra(ModelName name, SpaceSpec space, std::uint64_t seed, ModelParams params)
    : name_(name), space_(space), seed_(seed), params_(params) {
    space_.validate();
    if (space_.kind != atomic_space_kind(name))
        throw std::invalid_argument("model " + to_string(name) + " needs a " +
                                    to_string(atomic_space_kind(name)) + " space, got " +
                                    to_string(space_.kind));
    switch (name) {
        case ModelName::bsc: metric_ = Metric::hamming; default_norm_ = NormMode::binarize; break;
        case ModelName::map: metric_ = Metric::cosine; default_norm_ = NormMode::none; break;
        case ModelName::hrr: metric_ = Metric::cosine; default_norm_ = NormMode::none; break;
        case ModelName::fhrr: metric_ = Metric::phase_cosine; default_norm_ = NormMode::none; break;
        case ModelName::sbdr: metric_ = Metric::dot; default_norm_ = NormMode::disjunction; break;
        case ModelName::sbc: metric_ = Metric::dot; default_norm_ = NormMode::none; break;
        case ModelName::mcr: metric_ = Metric::manhattan_mod; default_norm_ = NormMode::mcr_discretize; break;
        case ModelName::cgr: metric_ = Metric::phase_cosine; default_norm_ = NormMode::mcr_discretize; break;
        case ModelName::mbat: metric_ = Metric::dot; default_norm_ = NormMode::none; break;
        case ModelName::tpr2: metric_ = Metric::cosine; default_norm_ = NormMode::none; break;
    }
    if (name == ModelName::bsc) {
        RngStream rng(seed, "model/bsc-tie-break");
        tie_break_ = random_hv(space_, rng);
    }
    if (name == ModelName::map) {
        RngStream rng(seed, "model/map-sign-mask");
        sign_mask_ = random_hv(space_, rng);
    }
}

ModelAlgebra ModelAlgebra::make(ModelName name, std::size_t dim, std::uint64_t seed,
                                ModelParams params) {
    SpaceSpec space;
    switch (atomic_space_kind(name)) {
        case SpaceKind::dense_binary: space = SpaceSpec::dense_binary(dim); break;
        case SpaceKind::bipolar: space = SpaceSpec::bipolar(dim); break;
        case SpaceKind::real: space = SpaceSpec::real(dim); break;
        case SpaceKind::phasor: space = SpaceSpec::phasor(dim); break;
        case SpaceKind::sparse_binary: space = SpaceSpec::sparse_binary(dim, 0.01); break;
        case SpaceKind::block_sparse: space = SpaceSpec::block_sparse(dim, dim >= 32 ? 32 : dim); break;
        case SpaceKind::modular: space = SpaceSpec::modular(dim, 16); break;
    }
    return ModelAlgebra(name, space, seed, params);
}

const Hypervector& ModelAlgebra::tie_break() const {
    if (!tie_break_) throw std::logic_error("tie-break vector is only defined for BSC");
    return *tie_break_;
}

const Hypervector& ModelAlgebra::sign_mask() const {
    if (!sign_mask_) throw std::logic_error("sign mask is only defined for MAP");
    return *sign_mask_;
}

PermutationSpec ModelAlgebra::cdt_permutation(std::size_t k) const {
    if (name_ != ModelName::sbdr) throw std::logic_error("cdt permutations belong to SBDR");
    if (k >= params_.cdt_pool_size)
        throw std::invalid_argument("cdt permutation index exceeds the configured pool");
    return PermutationSpec::seeded(seed_, "cdt/" + std::to_string(k));
}

BindingMatrix ModelAlgebra::role_matrix(const std::string& label) const {
    if (name_ != ModelName::mbat) throw std::logic_error("role matrices belong to MBAT");
    return BindingMatrix(params_.matrix_kind, space_.dim, seed_, label);
}

Hypervector bind(const ModelAlgebra& model, const Hypervector& a, const Hypervector& b) {
    require_same_space(model, a, "bind");
    require_same_space(model, b, "bind");
    const std::size_t d = a.dim();

    switch (model.name()) {
        case ModelName::bsc: {
            require_binary_values(a, "bind(bsc)");
            require_binary_values(b, "bind(bsc)");
            std::vector<double> z(d);
            for (std::size_t i = 0; i < d; ++i)
                z[i] = (a.reals()[i] != b.reals()[i]) ? 1.0 : 0.0;
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::map: {
            std::vector<double> z(d);
            for (std::size_t i = 0; i < d; ++i) z[i] = a.reals()[i] * b.reals()[i];
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::hrr: {
            // z_j = sum_k b_k a_{j-k mod D}
            std::vector<double> z(d, 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                const double bk = b.reals()[k];
                if (bk == 0.0) continue;
                for (std::size_t j = 0; j < d; ++j)
                    z[j] += bk * a.reals()[(j + d - k) % d];
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::fhrr: {
            std::vector<std::complex<double>> z(d);
            for (std::size_t i = 0; i < d; ++i) z[i] = a.phasors()[i] * b.phasors()[i];
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::sbc: {
            if (!is_canonical_block_sparse(a) || !is_canonical_block_sparse(b))
                throw std::invalid_argument(
                    "bind(sbc): operands must be maximally sparse; binarize sums first");
            const std::size_t bs = model.space().block_size;
            std::vector<double> z(d, 0.0);
            for (std::size_t blk = 0; blk < d / bs; ++blk) {
                // block-wise circular convolution; for one-hot blocks this is
                // the modulo sum of the active indices
                for (std::size_t i = 0; i < bs; ++i) {
                    const double av = a.reals()[blk * bs + i];
                    if (av == 0.0) continue;
                    for (std::size_t j = 0; j < bs; ++j) {
                        const double bv = b.reals()[blk * bs + j];
                        if (bv == 0.0) continue;
                        z[blk * bs + (i + j) % bs] += av * bv;
                    }
                }
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::mcr:
        case ModelName::cgr: {
            const auto r = model.space().range;
            require_integer_values(a, r, "bind(mcr)");
            require_integer_values(b, r, "bind(mcr)");
            std::vector<double> z(d);
            for (std::size_t i = 0; i < d; ++i) {
                auto v = static_cast<std::uint64_t>(a.reals()[i]) +
                         static_cast<std::uint64_t>(b.reals()[i]);
                z[i] = static_cast<double>(v % r);
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::sbdr:
            throw std::invalid_argument("SBDR binds via cdt() or conjunction_bind()");
        case ModelName::mbat:
            throw std::invalid_argument("MBAT binds a role matrix to a vector; pass a BindingMatrix");
        case ModelName::tpr2:
            throw std::invalid_argument(
                "TPR2 binding produces an order-2 tensor; use tpr2_bind (tensors do not recurse)");
    }
    throw std::logic_error("unreachable model name");
}

Hypervector bind(const ModelAlgebra& model, const BindingMatrix& role, const Hypervector& filler) {
    if (model.name() != ModelName::mbat)
        throw std::invalid_argument("matrix binding is an MBAT operation");
    require_same_space(model, filler, "bind(mbat)");
    if (role.dim() != filler.dim()) throw std::invalid_argument("bind(mbat): dimension mismatch");
    return Hypervector(model.space(), role.apply(filler.reals()));
}

Hypervector bind_all(const ModelAlgebra& model, std::span<const Hypervector> inputs) {
    if (inputs.empty()) throw std::invalid_argument("bind_all: empty input list");
    Hypervector acc = inputs.front();
    for (std::size_t i = 1; i < inputs.size(); ++i) acc = bind(model, acc, inputs[i]);
    return acc;
}

Hypervector unbind(const ModelAlgebra& model, const Hypervector& bound, const Hypervector& known) {
    require_same_space(model, known, "unbind");
    const std::size_t d = bound.dim();

    switch (model.name()) {
        case ModelName::bsc:
            return bind(model, bound, known); // XOR is self-inverse
        case ModelName::map:
            return bind(model, bound, known); // +-1 multiplication is self-inverse
        case ModelName::hrr: {
            // circular correlation = convolution with the involution of `known`
            require_same_space(model, bound, "unbind");
            const auto inv = involution(known.reals());
            std::vector<double> z(d, 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                const double ik = inv[k];
                if (ik == 0.0) continue;
                for (std::size_t j = 0; j < d; ++j)
                    z[j] += ik * bound.reals()[(j + d - k) % d];
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::fhrr: {
            require_same_space(model, bound, "unbind");
            std::vector<std::complex<double>> z(d);
            for (std::size_t i = 0; i < d; ++i)
                z[i] = bound.phasors()[i] * std::conj(known.phasors()[i]);
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::sbc: {
            require_same_space(model, bound, "unbind");
            if (!is_canonical_block_sparse(known))
                throw std::invalid_argument("unbind(sbc): known factor must be maximally sparse");
            const std::size_t bs = model.space().block_size;
            std::vector<double> z(d, 0.0);
            // block-wise circular correlation with the known factor
            for (std::size_t blk = 0; blk < d / bs; ++blk) {
                for (std::size_t i = 0; i < bs; ++i) {
                    const double kv = known.reals()[blk * bs + i];
                    if (kv == 0.0) continue;
                    for (std::size_t j = 0; j < bs; ++j)
                        z[blk * bs + j] += kv * bound.reals()[blk * bs + (i + j) % bs];
                }
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::mcr:
        case ModelName::cgr: {
            require_same_space(model, bound, "unbind");
            const auto r = model.space().range;
            require_integer_values(bound, r, "unbind(mcr)");
            require_integer_values(known, r, "unbind(mcr)");
            std::vector<double> z(d);
            for (std::size_t i = 0; i < d; ++i) {
                auto x = static_cast<std::int64_t>(bound.reals()[i]) -
                         static_cast<std::int64_t>(known.reals()[i]);
                auto rr = static_cast<std::int64_t>(r);
                z[i] = static_cast<double>(((x % rr) + rr) % rr);
            }
            return Hypervector(model.space(), std::move(z));
        }
        case ModelName::sbdr:
            throw std::invalid_argument(
                "SBDR recovery works by similarity search; CDT unbinding is not implemented");
        case ModelName::mbat:
            throw std::invalid_argument("MBAT unbinding needs the role matrix");
        case ModelName::tpr2:
            throw std::invalid_argument("TPR2 unbinding operates on tensors; use tpr2_unbind");
    }
    throw std::logic_error("unreachable model name");
}

Hypervector unbind(const ModelAlgebra& model, const Hypervector& bound, const BindingMatrix& role) {
    if (model.name() != ModelName::mbat)
        throw std::invalid_argument("matrix unbinding is an MBAT operation");
    if (role.dim() != bound.dim()) throw std::invalid_argument("unbind(mbat): dimension mismatch");
    return Hypervector(model.space(), role.apply_inverse(bound.reals()));
}

namespace {

Hypervector superpose_phasor(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                             NormMode mode) {
    const std::size_t d = model.space().dim;
    std::vector<std::complex<double>> acc(d, {0.0, 0.0});
    for (const auto& v : inputs)
        for (std::size_t i = 0; i < d; ++i) acc[i] += v.phasors()[i];
    switch (mode) {
        case NormMode::none:
            break;
        case NormMode::euclidean: {
            double n = 0.0;
            for (const auto& c : acc) n += std::norm(c);
            n = std::sqrt(n);
            if (n == 0.0) throw std::invalid_argument("superpose: cannot normalize a zero sum");
            for (auto& c : acc) c /= n;
            break;
        }
        case NormMode::binarize:
            for (auto& c : acc) {
                const double m = std::abs(c);
                c = (m == 0.0) ? std::complex<double>(1.0, 0.0) : c / m;
            }
            break;
        default:
            throw std::invalid_argument("norm mode " + to_string(mode) +
                                        " is not defined for phasor spaces");
    }
    return Hypervector(model.space(), std::move(acc));
}

Hypervector superpose_modular(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                              NormMode mode) {
    if (mode != NormMode::mcr_discretize)
        throw std::invalid_argument("modular superposition requires mcr-discretize");
    const std::size_t d = model.space().dim;
    const auto r = static_cast<double>(model.space().range);
    std::vector<std::complex<double>> acc(d, {0.0, 0.0});
    for (const auto& v : inputs) {
        require_integer_values(v, model.space().range, "superpose(mcr)");
        for (std::size_t i = 0; i < d; ++i)
            acc[i] += std::polar(1.0, TWO_PI * v.reals()[i] / r);
    }
    std::vector<double> z(d);
    for (std::size_t i = 0; i < d; ++i) {
        double a = std::arg(acc[i]); // 0 for a fully cancelled component
        if (a < 0.0) a += TWO_PI;
        const double x = a * r / TWO_PI;
        // nearest integer angle, half-way ties toward the smaller integer
        auto k = static_cast<std::int64_t>(std::ceil(x - 0.5));
        z[i] = static_cast<double>(((k % static_cast<std::int64_t>(r)) +
                                    static_cast<std::int64_t>(r)) %
                                   static_cast<std::int64_t>(r));
    }
    return Hypervector(model.space(), std::move(z));
}

} // namespace

Hypervector superpose(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                      NormMode mode, double clip_limit) {
    if (inputs.empty()) throw std::invalid_argument("superpose: empty input list");
    for (const auto& v : inputs) require_same_space(model, v, "superpose");

    if (model.space().kind == SpaceKind::phasor) return superpose_phasor(model, inputs, mode);
    if (model.space().kind == SpaceKind::modular) return superpose_modular(model, inputs, mode);

    const std::size_t d = model.space().dim;
    std::vector<double> acc(d, 0.0);
    for (const auto& v : inputs)
        for (std::size_t i = 0; i < d; ++i) acc[i] += v.reals()[i];

    switch (mode) {
        case NormMode::none:
            break;
        case NormMode::euclidean: {
            double n = 0.0;
            for (double x : acc) n += x * x;
            n = std::sqrt(n);
            if (n == 0.0) throw std::invalid_argument("superpose: cannot normalize a zero sum");
            for (auto& x : acc) x /= n;
            break;
        }
        case NormMode::clip:
            if (clip_limit <= 0.0) throw std::invalid_argument("clip limit must be positive");
            for (auto& x : acc) x = std::clamp(x, -clip_limit, clip_limit);
            break;
        case NormMode::binarize: {
            if (model.name() == ModelName::bsc) {
                // majority rule; an even count adds the model tie-break vector
                std::size_t m = inputs.size();
                for (const auto& v : inputs) require_binary_values(v, "superpose(bsc)");
                if (m % 2 == 0) {
                    const auto& tb = model.tie_break();
                    for (std::size_t i = 0; i < d; ++i) acc[i] += tb.reals()[i];
                    ++m;
                }
                for (auto& x : acc) x = (2.0 * x > static_cast<double>(m)) ? 1.0 : 0.0;
            } else if (model.name() == ModelName::map) {
                const auto& mask = model.sign_mask();
                for (std::size_t i = 0; i < d; ++i)
                    acc[i] = acc[i] > 0.0 ? 1.0 : (acc[i] < 0.0 ? -1.0 : mask.reals()[i]);
            } else if (model.name() == ModelName::sbc) {
                // one winner per block; ties go to the largest position
                const std::size_t bs = model.space().block_size;
                for (std::size_t blk = 0; blk < d / bs; ++blk) {
                    std::size_t best = 0;
                    for (std::size_t j = 0; j < bs; ++j)
                        if (acc[blk * bs + j] >= acc[blk * bs + best]) best = j;
                    for (std::size_t j = 0; j < bs; ++j)
                        acc[blk * bs + j] = (j == best) ? 1.0 : 0.0;
                }
            } else {
                throw std::invalid_argument("binarize is not defined for model " +
                                            to_string(model.name()));
            }
            break;
        }
        case NormMode::disjunction: {
            if (!model.space().is_binary())
                throw std::invalid_argument("disjunction needs a binary space");
            for (auto& x : acc) x = (x != 0.0) ? 1.0 : 0.0;
            break;
        }
        case NormMode::mcr_discretize:
            throw std::invalid_argument("mcr-discretize needs a modular space");
    }
    return Hypervector(model.space(), std::move(acc));
}

Hypervector superpose(const ModelAlgebra& model, std::span<const Hypervector> inputs) {
    return superpose(model, inputs, model.default_norm());
}

Hypervector cdt(const ModelAlgebra& model, std::span<const Hypervector> inputs, std::size_t depth) {
    if (model.name() != ModelName::sbdr)
        throw std::invalid_argument("cdt is the SBDR binding operation");
    if (inputs.empty()) throw std::invalid_argument("cdt: empty input list");
    if (depth < 1) throw std::invalid_argument("cdt: thinning depth must be >= 1");
    if (depth > model.params().cdt_pool_size)
        throw std::invalid_argument("cdt: thinning depth exceeds the permutation pool");
    for (const auto& v : inputs) {
        require_same_space(model, v, "cdt");
        require_binary_values(v, "cdt");
    }
    const std::size_t d = model.space().dim;
    std::vector<double> z(d, 0.0);
    for (const auto& v : inputs)
        for (std::size_t i = 0; i < d; ++i)
            if (v.reals()[i] != 0.0) z[i] = 1.0;
    Hypervector zv(model.space(), z);

    std::vector<double> mask(d, 0.0);
    for (std::size_t k = 0; k < depth; ++k) {
        Hypervector p = permute(zv, model.cdt_permutation(k));
        for (std::size_t i = 0; i < d; ++i)
            if (p.reals()[i] != 0.0) mask[i] = 1.0;
    }
    std::vector<double> out(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) out[i] = (z[i] != 0.0 && mask[i] != 0.0) ? 1.0 : 0.0;
    return Hypervector(model.space(), std::move(out));
}

Hypervector cdt(const ModelAlgebra& model, std::span<const Hypervector> inputs) {
    return cdt(model, inputs, model.params().thinning_depth);
}

Hypervector conjunction_bind(const ModelAlgebra& model, std::span<const Hypervector> inputs,
                             bool* density_underflow) {
    if (model.name() != ModelName::sbdr)
        throw std::invalid_argument("conjunction binding is an SBDR operation");
    if (inputs.size() < 2)
        throw std::invalid_argument("conjunction_bind: needs at least two inputs");
    for (const auto& v : inputs) {
        require_same_space(model, v, "conjunction_bind");
        require_binary_values(v, "conjunction_bind");
    }
    const std::size_t d = model.space().dim;
    std::vector<double> z(d, 1.0);
    for (const auto& v : inputs)
        for (std::size_t i = 0; i < d; ++i)
            if (v.reals()[i] == 0.0) z[i] = 0.0;
    bool all_zero = true;
    for (double x : z)
        if (x != 0.0) { all_zero = false; break; }
    if (density_underflow) *density_underflow = all_zero;
    return Hypervector(model.space(), std::move(z));
}

} // namespace hyperalg
