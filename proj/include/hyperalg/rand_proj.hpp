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

enum class RpEntryKind { gaussian, bipolar, ternary_sparse };

enum class RpPost { none, binarize, ternarize };

/**
 * One or more random projection matrices with mixing weights and optional
 * post-processing: z = post(sum_i lambda_i R_i x).
 */
class RpSpec {
public:
    struct MatrixSpec {
        RpEntryKind kind = RpEntryKind::gaussian;
        double weight = 1.0;
        double density = 0.1; // ternary_sparse: probability of a nonzero entry
    };

    RpSpec(std::size_t output_dim, std::size_t input_dim, std::vector<MatrixSpec> matrices,
           RpPost post, std::uint64_t seed, std::string label = "rp");

    /// Single identity-free dense projection.
    static RpSpec single(std::size_t output_dim, std::size_t input_dim, RpEntryKind kind,
                         RpPost post, std::uint64_t seed);

    std::size_t output_dim() const noexcept { return output_dim_; }
    std::size_t input_dim() const noexcept { return input_dim_; }
    RpPost post() const noexcept { return post_; }

    /// Thresholds used by binarize (z > threshold -> 1) and ternarize
    /// (z < lo -> -1, z > hi -> +1, else 0). Defaults: 0 and (-0, +0).
    void set_thresholds(double binarize, double ternarize_lo, double ternarize_hi);

    /// Replaces matrix 0 with an explicit row-major matrix (tests, identity cases).
    void set_explicit_matrix(std::size_t index, std::vector<double> row_major);

    Hypervector encode(const std::vector<double>& x) const;

private:
    std::size_t output_dim_, input_dim_;
    std::vector<MatrixSpec> specs_;
    std::vector<std::vector<double>> matrices_; // row-major output_dim x input_dim
    RpPost post_;
    double bin_threshold_ = 0.0;
    double ter_lo_ = 0.0, ter_hi_ = 0.0;
};

/// encode_vector_rp from the operations list.
Hypervector encode_vector_rp(const std::vector<double>& x, const RpSpec& spec);

} // namespace hyperalg
