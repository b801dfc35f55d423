/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <vector>

#include "hyperalg/space.hpp"

namespace hyperalg {

/**
 * Fractional power encoding base: a random unit-magnitude hypervector z and
 * bandwidth beta; a scalar x maps to z^(beta*x) (component-wise angle
 * multiplication). Similarity of two encodings depends only on x - y, giving
 * a translation-invariant kernel whose width shrinks with beta.
 *
 * The phasor form exponentiates directly. The real form keeps a
 * unit-magnitude, conjugate-symmetric spectrum and materializes encodings by
 * inverse FFT, so the encoded vectors stay real-valued.
 */
class FpeBase {
public:
    enum class Form { phasor, real };

    /// Base angles drawn uniformly; dim must be >= 2.
    FpeBase(Form form, std::size_t dim, double bandwidth, RngStream& rng);

    Form form() const noexcept { return form_; }
    double bandwidth() const noexcept { return bandwidth_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<double>& base_angles() const noexcept { return angles_; }

    /// z^(beta*x); finite x only.
    Hypervector encode(double x) const;

private:
    Form form_;
    std::size_t dim_;
    double bandwidth_;
    std::vector<double> angles_; // phasor: one per component; real: spectrum angles
};

/// z(x, y) = X^x o Y^y bound with component-wise phasor product.
Hypervector encode_fpe_2d(const FpeBase& x_base, const FpeBase& y_base, double x, double y);

} // namespace hyperalg
