/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/image.hpp"

#include <optional>
#include <stdexcept>

namespace hyperalg {

namespace {

Hypervector coordinate_role(const ModelAlgebra& model, const ImageEncoderParams& params,
                            const LevelCodebook* x_levels, const LevelCodebook* y_levels,
                            std::size_t x, std::size_t y) {
    if (params.correlated_coordinates) {
        return bind(model, x_levels->level(x), y_levels->level(y));
    }
    RngStream rng(params.seed,
                  "img-pos/" + std::to_string(x) + "," + std::to_string(y));
    return model.random_atom(rng);
}

} // namespace

Hypervector encode_image(const ModelAlgebra& model, const ImageGrid& image,
                         const LevelCodebook& value_codebook, const ImageEncoderParams& params) {
    if (image.width == 0 || image.height == 0)
        throw std::invalid_argument("encode_image: empty image");
    if (image.values.size() != image.width * image.height)
        throw std::invalid_argument("encode_image: value buffer does not match the grid");
    if (image.width > params.max_width || image.height > params.max_height)
        throw std::invalid_argument("encode_image: grid exceeds the configured bounds");
    if (!(value_codebook.space() == model.space()))
        throw std::invalid_argument("encode_image: value codebook space does not match the model");

    std::vector<Hypervector> terms;
    terms.reserve(image.values.size());

    switch (params.mode) {
        case ImageMode::permutation: {
            const auto rho_x = PermutationSpec::seeded(params.seed, "img-x");
            const auto rho_y = PermutationSpec::seeded(params.seed, "img-y");
            for (std::size_t y = 0; y < image.height; ++y)
                for (std::size_t x = 0; x < image.width; ++x) {
                    Hypervector v =
                        encode_scalar(value_codebook, image.at(x, y), params.clamp_values);
                    v = permute(v, rho_x.with_power(static_cast<std::int64_t>(x)));
                    v = permute(v, rho_y.with_power(static_cast<std::int64_t>(y)));
                    terms.push_back(std::move(v));
                }
            break;
        }
        case ImageMode::role_filler: {
            std::optional<LevelCodebook> x_levels, y_levels;
            if (params.correlated_coordinates) {
                RngStream rx(params.seed, "img-xlev");
                RngStream ry(params.seed, "img-ylev");
                x_levels.emplace(model.space(), std::max<std::size_t>(image.width, 2),
                                 LevelScheme::flip, 0.0, 1.0, rx);
                y_levels.emplace(model.space(), std::max<std::size_t>(image.height, 2),
                                 LevelScheme::flip, 0.0, 1.0, ry);
            }
            for (std::size_t y = 0; y < image.height; ++y)
                for (std::size_t x = 0; x < image.width; ++x) {
                    Hypervector value =
                        encode_scalar(value_codebook, image.at(x, y), params.clamp_values);
                    Hypervector role =
                        coordinate_role(model, params, x_levels ? &*x_levels : nullptr,
                                        y_levels ? &*y_levels : nullptr, x, y);
                    terms.push_back(bind(model, role, value));
                }
            break;
        }
        case ImageMode::fpe: {
            if (model.space().kind != SpaceKind::phasor)
                throw std::invalid_argument("encode_image: fpe mode needs a phasor model (FHRR)");
            RngStream rx(params.seed, "img-fpe-x");
            RngStream ry(params.seed, "img-fpe-y");
            const FpeBase xb(FpeBase::Form::phasor, model.space().dim, params.fpe_bandwidth, rx);
            const FpeBase yb(FpeBase::Form::phasor, model.space().dim, params.fpe_bandwidth, ry);
            for (std::size_t y = 0; y < image.height; ++y)
                for (std::size_t x = 0; x < image.width; ++x) {
                    Hypervector pos = encode_fpe_2d(xb, yb, static_cast<double>(x),
                                                    static_cast<double>(y));
                    Hypervector value =
                        encode_scalar(value_codebook, image.at(x, y), params.clamp_values);
                    terms.push_back(bind(model, pos, value));
                }
            break;
        }
    }
    return superpose(model, terms, NormMode::none);
}

} // namespace hyperalg
