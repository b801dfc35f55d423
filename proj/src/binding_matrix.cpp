/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/binding_matrix.hpp"

#include <Eigen/Dense>
#include <mutex>
#include <stdexcept>

namespace hyperalg {

struct BindingMatrix::Impl {
    Eigen::MatrixXd m;
    mutable Eigen::MatrixXd pinv; // lazy, pm1 kind only
    mutable std::once_flag pinv_once;
};

BindingMatrix::BindingMatrix(BindingMatrixKind kind, std::size_t dim, std::uint64_t seed,
                             std::string label)
    : kind_(kind), dim_(dim), seed_(seed), label_(std::move(label)),
      impl_(std::make_unique<Impl>()) {
    if (dim < 1) throw std::invalid_argument("binding matrix dimension must be >= 1");
    RngStream rng(seed, "mbat/" + label_);
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd g(n, n);
    if (kind == BindingMatrixKind::random_pm1) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                g(i, j) = (rng.next_u64() & 1u) ? 1.0 : -1.0;
        impl_->m = std::move(g);
    } else {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.next_normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        // fix the sign ambiguity of QR so the matrix is a pure function of the seed
        Eigen::VectorXd rd = qr.matrixQR().diagonal();
        for (Eigen::Index j = 0; j < n; ++j)
            if (rd(j) < 0) q.col(j) = -q.col(j);
        impl_->m = std::move(q);
    }
}

BindingMatrix::~BindingMatrix() = default;
BindingMatrix::BindingMatrix(BindingMatrix&&) noexcept = default;
BindingMatrix& BindingMatrix::operator=(BindingMatrix&&) noexcept = default;

std::vector<double> BindingMatrix::apply(const std::vector<double>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("binding matrix: dimension mismatch");
    Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(dim_));
    Eigen::VectorXd y = impl_->m * v;
    return {y.data(), y.data() + y.size()};
}

std::vector<double> BindingMatrix::apply_inverse(const std::vector<double>& y) const {
    if (y.size() != dim_) throw std::invalid_argument("binding matrix: dimension mismatch");
    Eigen::Map<const Eigen::VectorXd> v(y.data(), static_cast<Eigen::Index>(dim_));
    Eigen::VectorXd x;
    if (kind_ == BindingMatrixKind::random_orthogonal) {
        x = impl_->m.transpose() * v;
    } else {
        std::call_once(impl_->pinv_once, [this] {
            impl_->pinv = impl_->m.completeOrthogonalDecomposition().pseudoInverse();
        });
        x = impl_->pinv * v;
    }
    return {x.data(), x.data() + x.size()};
}

double BindingMatrix::orthogonality_defect() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXd g = impl_->m.transpose() * impl_->m - Eigen::MatrixXd::Identity(n, n);
    return g.cwiseAbs().maxCoeff();
}

} // namespace hyperalg
