/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "hyperalg/space.hpp"

namespace hyperalg {

enum class BindingMatrixKind {
    random_pm1,        // entries uniform {-1,+1}; unbinding via pseudo-inverse
    random_orthogonal, // QR-orthonormalized Gaussian; unbinding via transpose
};

/**
 * A D x D role matrix for matrix-vector binding. Seed provenance makes the
 * matrix rematerializable; the pseudo-inverse for the +-1 kind is computed
 * once on first unbind.
 */
class BindingMatrix {
public:
    BindingMatrix(BindingMatrixKind kind, std::size_t dim, std::uint64_t seed,
                  std::string label);
    ~BindingMatrix();
    BindingMatrix(BindingMatrix&&) noexcept;
    BindingMatrix& operator=(BindingMatrix&&) noexcept;
    BindingMatrix(const BindingMatrix&) = delete;
    BindingMatrix& operator=(const BindingMatrix&) = delete;

    BindingMatrixKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::string& label() const noexcept { return label_; }

    /// M * x. Result is real-valued.
    std::vector<double> apply(const std::vector<double>& x) const;

    /// Inverse map: transpose for the orthogonal kind, pseudo-inverse otherwise.
    std::vector<double> apply_inverse(const std::vector<double>& y) const;

    /// Max |(M^T M - I)_ij|; ~0 for the orthogonal kind.
    double orthogonality_defect() const;

private:
    BindingMatrixKind kind_;
    std::size_t dim_;
    std::uint64_t seed_;
    std::string label_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace hyperalg
