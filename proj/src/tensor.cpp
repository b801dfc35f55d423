/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/tensor.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace hyperalg {

namespace {
void require_real(const Hypervector& v, const char* what) {
    if (v.space().kind != SpaceKind::real)
        throw std::invalid_argument(std::string(what) + ": tensor binding needs real vectors");
}
} // namespace

Tensor2 tpr2_bind(const Hypervector& a, const Hypervector& b) {
    require_real(a, "tpr2_bind");
    require_real(b, "tpr2_bind");
    if (a.dim() != b.dim()) throw std::invalid_argument("tpr2_bind: dimension mismatch");
    Tensor2 t;
    t.dim = a.dim();
    t.m.resize(t.dim * t.dim);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            t.m[i * t.dim + j] = a.reals()[i] * b.reals()[j];
    return t;
}

Tensor2 tpr2_superpose(std::span<const Tensor2> tensors) {
    if (tensors.empty()) throw std::invalid_argument("tpr2_superpose: empty input");
    Tensor2 out = tensors.front();
    for (std::size_t k = 1; k < tensors.size(); ++k) {
        if (tensors[k].dim != out.dim)
            throw std::invalid_argument("tpr2_superpose: dimension mismatch");
        for (std::size_t i = 0; i < out.m.size(); ++i) out.m[i] += tensors[k].m[i];
    }
    return out;
}

Hypervector tpr2_unbind(const Tensor2& t, const Hypervector& u) {
    require_real(u, "tpr2_unbind");
    if (u.dim() != t.dim) throw std::invalid_argument("tpr2_unbind: dimension mismatch");
    std::vector<double> out(t.dim, 0.0);
    // T^T u: sum over rows i of u_i * row_i
    for (std::size_t i = 0; i < t.dim; ++i) {
        const double w = u.reals()[i];
        if (w == 0.0) continue;
        const double* row = &t.m[i * t.dim];
        for (std::size_t j = 0; j < t.dim; ++j) out[j] += w * row[j];
    }
    return Hypervector(SpaceSpec::real(t.dim), std::move(out));
}

std::vector<Hypervector> tpr2_unbinding_vectors(std::span<const Hypervector> atoms) {
    if (atoms.empty()) throw std::invalid_argument("tpr2_unbinding_vectors: empty atom set");
    const std::size_t d = atoms.front().dim();
    if (atoms.size() != d)
        throw std::invalid_argument("tpr2_unbinding_vectors: need exactly D atoms for a D-dim inverse");
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXd a(n, n);
    for (std::size_t c = 0; c < d; ++c) {
        require_real(atoms[c], "tpr2_unbinding_vectors");
        if (atoms[c].dim() != d)
            throw std::invalid_argument("tpr2_unbinding_vectors: dimension mismatch");
        for (std::size_t r = 0; r < d; ++r)
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = atoms[c].reals()[r];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible())
        throw std::invalid_argument("tpr2_unbinding_vectors: atom set is not linearly independent");
    Eigen::MatrixXd inv = lu.inverse();
    std::vector<Hypervector> out;
    out.reserve(d);
    for (std::size_t r = 0; r < d; ++r) {
        std::vector<double> row(d);
        for (std::size_t c = 0; c < d; ++c)
            row[c] = inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        out.emplace_back(SpaceSpec::real(d), std::move(row));
    }
    return out;
}

double tpr2_dot(const Tensor2& a, const Tensor2& b) {
    if (a.dim != b.dim) throw std::invalid_argument("tpr2_dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.m.size(); ++i) s += a.m[i] * b.m[i];
    return s;
}

} // namespace hyperalg
