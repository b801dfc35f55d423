/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/rand_proj.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperalg {

RpSpec::RpSpec(std::size_t output_dim, std::size_t input_dim, std::vector<MatrixSpec> matrices,
               RpPost post, std::uint64_t seed, std::string label)
    : output_dim_(output_dim), input_dim_(input_dim), specs_(std::move(matrices)), post_(post) {
    if (output_dim < 1 || input_dim < 1)
        throw std::invalid_argument("random projection: dimensions must be >= 1");
    if (specs_.empty()) throw std::invalid_argument("random projection: no matrices");
    matrices_.reserve(specs_.size());
    for (std::size_t m = 0; m < specs_.size(); ++m) {
        const auto& ms = specs_[m];
        if (!std::isfinite(ms.weight))
            throw std::invalid_argument("random projection: weight must be finite");
        RngStream rng(seed, label + "/" + std::to_string(m));
        std::vector<double> mat(output_dim * input_dim, 0.0);
        switch (ms.kind) {
            case RpEntryKind::gaussian:
                for (auto& v : mat) v = rng.next_normal();
                break;
            case RpEntryKind::bipolar:
                for (auto& v : mat) v = (rng.next_u64() & 1u) ? 1.0 : -1.0;
                break;
            case RpEntryKind::ternary_sparse: {
                if (!(ms.density > 0.0 && ms.density <= 1.0))
                    throw std::invalid_argument("ternary matrix density must lie in (0, 1]");
                for (auto& v : mat) {
                    if (rng.next_double() < ms.density)
                        v = (rng.next_u64() & 1u) ? 1.0 : -1.0;
                }
                break;
            }
        }
        matrices_.push_back(std::move(mat));
    }
}

RpSpec RpSpec::single(std::size_t output_dim, std::size_t input_dim, RpEntryKind kind,
                      RpPost post, std::uint64_t seed) {
    return RpSpec(output_dim, input_dim, {MatrixSpec{kind, 1.0, 0.1}}, post, seed);
}

void RpSpec::set_thresholds(double binarize, double ternarize_lo, double ternarize_hi) {
    if (!(ternarize_lo <= ternarize_hi))
        throw std::invalid_argument("ternarize thresholds must satisfy lo <= hi");
    bin_threshold_ = binarize;
    ter_lo_ = ternarize_lo;
    ter_hi_ = ternarize_hi;
}

void RpSpec::set_explicit_matrix(std::size_t index, std::vector<double> row_major) {
    if (index >= matrices_.size())
        throw std::invalid_argument("random projection: matrix index out of range");
    if (row_major.size() != output_dim_ * input_dim_)
        throw std::invalid_argument("random projection: explicit matrix has the wrong shape");
    matrices_[index] = std::move(row_major);
}

Hypervector RpSpec::encode(const std::vector<double>& x) const {
    if (x.size() != input_dim_)
        throw std::invalid_argument("random projection: input length does not match matrix shape");
    std::vector<double> z(output_dim_, 0.0);
    for (std::size_t m = 0; m < matrices_.size(); ++m) {
        const double w = specs_[m].weight;
        if (w == 0.0) continue;
        const auto& mat = matrices_[m];
        for (std::size_t r = 0; r < output_dim_; ++r) {
            const double* row = &mat[r * input_dim_];
            double s = 0.0;
            for (std::size_t c = 0; c < input_dim_; ++c) s += row[c] * x[c];
            z[r] += w * s;
        }
    }
    switch (post_) {
        case RpPost::none:
            return Hypervector(SpaceSpec::real(output_dim_), std::move(z));
        case RpPost::binarize:
            for (auto& v : z) v = v > bin_threshold_ ? 1.0 : 0.0;
            return Hypervector(SpaceSpec::dense_binary(output_dim_), std::move(z));
        case RpPost::ternarize:
            for (auto& v : z) v = v > ter_hi_ ? 1.0 : (v < ter_lo_ ? -1.0 : 0.0);
            return Hypervector(SpaceSpec::real(output_dim_), std::move(z));
    }
    throw std::logic_error("unreachable rp post mode");
}

Hypervector encode_vector_rp(const std::vector<double>& x, const RpSpec& spec) {
    return spec.encode(x);
}

} // namespace hyperalg
