/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <span>

#include "hyperalg/fpe.hpp"
#include "hyperalg/level_codebook.hpp"
#include "hyperalg/model.hpp"

namespace hyperalg {

/// Row-major grid of pixel values.
struct ImageGrid {
    std::size_t width = 0, height = 0;
    std::vector<double> values; // size width * height

    double at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
};

enum class ImageMode {
    permutation, // x-axis permutation applied x times, y-axis y times
    role_filler, // position role (unique or correlated coordinates) bound with the value
    fpe,         // z(x,y) = X^x o Y^y bound with the value vector
};

struct ImageEncoderParams {
    ImageMode mode = ImageMode::permutation;
    std::uint64_t seed = 0;
    bool correlated_coordinates = false; // role_filler: coordinate level codebooks
    double fpe_bandwidth = 1.0;
    std::size_t max_width = 4096, max_height = 4096;
    bool clamp_values = false;
};

/**
 * Superposition over pixels of position-bound value vectors. The value
 * codebook quantizes pixel values; its space must match the model
 * (permutation/role_filler) or be a phasor codebook (fpe mode with FHRR).
 */
Hypervector encode_image(const ModelAlgebra& model, const ImageGrid& image,
                         const LevelCodebook& value_codebook, const ImageEncoderParams& params);

} // namespace hyperalg
