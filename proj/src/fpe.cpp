/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/fpe.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hyperalg {

namespace {

// FFTW planning is not thread-safe; execution on private buffers is.
std::mutex& fftw_plan_mutex() {
    static std::mutex m;
    return m;
}

// inverse DFT of a unit-magnitude spectrum given by its angles; the spectrum
// is conjugate-symmetric so the output is real with unit L2 norm
std::vector<double> inverse_dft_real(const std::vector<double>& angles) {
    const std::size_t d = angles.size();
    std::vector<std::complex<double>> spec(d), out(d);
    for (std::size_t k = 0; k < d; ++k) spec[k] = std::polar(1.0, angles[k]);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(d),
                                reinterpret_cast<fftw_complex*>(spec.data()),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = out[j].real() / static_cast<double>(d);
    return z;
}

} // namespace

FpeBase::FpeBase(Form form, std::size_t dim, double bandwidth, RngStream& rng)
    : form_(form), dim_(dim), bandwidth_(bandwidth), angles_(dim, 0.0) {
    if (dim < 2) throw std::invalid_argument("fpe base needs dimension >= 2");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("fpe bandwidth must be positive");
    if (form == Form::phasor) {
        for (auto& a : angles_) a = rng.next_angle();
        return;
    }
    // real form: free angles on the lower half-spectrum, conjugate symmetry on
    // the upper; bins 0 and D/2 stay at angle 0 so any power remains real
    for (std::size_t k = 1; k < (dim + 1) / 2; ++k) {
        angles_[k] = rng.next_angle();
        angles_[dim - k] = -angles_[k];
    }
}

Hypervector FpeBase::encode(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("fpe encode: non-finite input");
    const double e = bandwidth_ * x;
    if (form_ == Form::phasor) {
        std::vector<std::complex<double>> z(dim_);
        for (std::size_t k = 0; k < dim_; ++k) z[k] = std::polar(1.0, angles_[k] * e);
        return Hypervector(SpaceSpec::phasor(dim_), std::move(z));
    }
    std::vector<double> scaled(dim_);
    for (std::size_t k = 0; k < dim_; ++k) scaled[k] = angles_[k] * e;
    return Hypervector(SpaceSpec::real(dim_), inverse_dft_real(scaled));
}

Hypervector encode_fpe_2d(const FpeBase& x_base, const FpeBase& y_base, double x, double y) {
    if (x_base.form() != y_base.form() || x_base.dim() != y_base.dim())
        throw std::invalid_argument("fpe 2d: bases must share form and dimension");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("fpe 2d: non-finite input");
    const std::size_t d = x_base.dim();
    const double ex = x_base.bandwidth() * x;
    const double ey = y_base.bandwidth() * y;
    // binding adds spectrum angles, so the bound pair needs one materialization
    std::vector<double> angles(d);
    for (std::size_t k = 0; k < d; ++k)
        angles[k] = x_base.base_angles()[k] * ex + y_base.base_angles()[k] * ey;
    if (x_base.form() == FpeBase::Form::phasor) {
        std::vector<std::complex<double>> z(d);
        for (std::size_t k = 0; k < d; ++k) z[k] = std::polar(1.0, angles[k]);
        return Hypervector(SpaceSpec::phasor(d), std::move(z));
    }
    return Hypervector(SpaceSpec::real(d), inverse_dft_real(angles));
}

} // namespace hyperalg
