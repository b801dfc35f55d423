/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperalg/space.hpp"

namespace hyperalg {

/**
 * Order-2 tensor produced by outer-product binding. Deliberately a separate
 * type from Hypervector: tensors cannot be fed back into bind, which keeps
 * the representation capped at order 2.
 */
struct Tensor2 {
    std::size_t dim = 0;
    std::vector<double> m; // row-major dim x dim

    double& at(std::size_t i, std::size_t j) { return m[i * dim + j]; }
    double at(std::size_t i, std::size_t j) const { return m[i * dim + j]; }
};

/// Outer product a b^T of two real hypervectors of equal dimension.
Tensor2 tpr2_bind(const Hypervector& a, const Hypervector& b);

/// Component-wise tensor addition.
Tensor2 tpr2_superpose(std::span<const Tensor2> tensors);

/**
 * Extracts the filler bound to a role: T^T u, with u the role's unbinding
 * vector. With u = the role itself this is the approximate unbinding; with
 * u from tpr2_unbinding_vectors it is exact for linearly independent roles.
 */
Hypervector tpr2_unbind(const Tensor2& t, const Hypervector& u);

/**
 * Unbinding vectors for a set of atomic role vectors: rows of the inverse of
 * the matrix whose columns are the atoms. For an orthonormal set these are
 * the atoms themselves.
 */
std::vector<Hypervector> tpr2_unbinding_vectors(std::span<const Hypervector> atoms);

double tpr2_dot(const Tensor2& a, const Tensor2& b);

} // namespace hyperalg
