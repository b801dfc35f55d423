#include <doctest.h>

#include <cmath>

#include "hyperalg/similarity.hpp"
#include "hyperalg/space.hpp"

using namespace hyperalg;

namespace {

Hypervector hv(SpaceSpec space, std::vector<double> v) { return {space, std::move(v)}; }

} // namespace

TEST_CASE("space validation rejects bad parameters") {
    CHECK_THROWS_AS(SpaceSpec::bipolar(0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::sparse_binary(100, 0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::sparse_binary(100, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::block_sparse(100, 3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::modular(100, 1).validate(), std::invalid_argument);
    CHECK_NOTHROW(SpaceSpec::block_sparse(100, 4).validate());
}

TEST_CASE("random draws follow each space's recipe") {
    SUBCASE("sparse binary has exactly round(p1*D) ones") {
        RngStream rng(1, "sparse");
        const auto v = random_hv(SpaceSpec::sparse_binary(1000, 0.01), rng);
        CHECK(v.one_positions().size() == 10);
    }
    SUBCASE("block sparse has one 1 per block") {
        RngStream rng(1, "blocks");
        const auto v = random_hv(SpaceSpec::block_sparse(128, 8), rng);
        for (std::size_t blk = 0; blk < 16; ++blk) {
            int nz = 0;
            for (std::size_t j = 0; j < 8; ++j) nz += v.reals()[blk * 8 + j] != 0.0;
            CHECK(nz == 1);
        }
    }
    SUBCASE("modular components stay in {0..r-1}") {
        RngStream rng(1, "mod");
        const auto v = random_hv(SpaceSpec::modular(256, 7), rng);
        for (double x : v.reals()) {
            CHECK(x >= 0.0);
            CHECK(x < 7.0);
            CHECK(x == std::floor(x));
        }
    }
    SUBCASE("real components have variance about 1/D") {
        RngStream rng(1, "real");
        const auto v = random_hv(SpaceSpec::real(8192), rng);
        double ss = 0.0;
        for (double x : v.reals()) ss += x * x;
        CHECK(ss == doctest::Approx(1.0).epsilon(0.1)); // norm close to 1
    }
    SUBCASE("same (seed, label, counter) reproduces the vector") {
        RngStream r1(77, "det"), r2(77, "det");
        const auto a = random_hv(SpaceSpec::bipolar(512), r1);
        const auto b = random_hv(SpaceSpec::bipolar(512), r2);
        CHECK(a.approx_equal(b));
    }
}

TEST_CASE("independent bipolar draws are quasi-orthogonal at D=8192") {
    // |cos| < 0.05 in at least 99% of 1000 pairs
    const auto space = SpaceSpec::bipolar(8192);
    int ok = 0;
    for (int p = 0; p < 1000; ++p) {
        RngStream rng(2024, "qo/" + std::to_string(p));
        const auto a = random_hv(space, rng);
        const auto b = random_hv(space, rng);
        ok += std::abs(similarity(Metric::cosine, a, b)) < 0.05;
    }
    CHECK(ok >= 990);
}

TEST_CASE("metric definitions match the worked examples") {
    const auto bin4 = SpaceSpec::dense_binary(4);
    SUBCASE("identity cases") {
        const auto a = hv(bin4, {0, 1, 0, 1});
        CHECK(similarity(Metric::hamming, a, a) == 0.0);
        RngStream rng(3, "ident");
        const auto r = random_hv(SpaceSpec::bipolar(64), rng);
        CHECK(similarity(Metric::cosine, r, r) == doctest::Approx(1.0));
    }
    SUBCASE("normalized Hamming by direct count") {
        const auto a = hv(bin4, {0, 1, 0, 1});
        const auto b = hv(bin4, {1, 1, 0, 0});
        CHECK(similarity(Metric::hamming, a, b) == doctest::Approx(0.5));
    }
    SUBCASE("Jaccard = |and| / |or|") {
        const auto a = hv(bin4, {1, 1, 0, 0});
        const auto b = hv(bin4, {1, 0, 1, 0});
        CHECK(similarity(Metric::jaccard, a, b) == doctest::Approx(1.0 / 3.0));
        const auto z = hv(bin4, {0, 0, 0, 0});
        CHECK_THROWS_AS(similarity(Metric::jaccard, z, z), std::invalid_argument);
    }
    SUBCASE("MCR distance: minimum of the two modular gaps") {
        const auto space = SpaceSpec::modular(2, 4);
        const auto a = hv(space, {1, 3});
        const auto b = hv(space, {2, 0});
        // gaps: |1-2| -> 1; |3-0| -> 1 (wrap)
        CHECK(similarity(Metric::manhattan_mod, a, b) == doctest::Approx(2.0));
        CHECK(similarity(Metric::manhattan_mod, a, a) == 0.0);
    }
    SUBCASE("mismatches are rejected") {
        const auto a = hv(bin4, {0, 1, 0, 1});
        const auto b = hv(SpaceSpec::dense_binary(8), {0, 1, 0, 1, 0, 0, 0, 0});
        CHECK_THROWS_AS(similarity(Metric::hamming, a, b), std::invalid_argument);
        const auto r = hv(SpaceSpec::real(4), {0.5, 1, 0, 1});
        CHECK_THROWS_AS(similarity(Metric::hamming, r, r), std::invalid_argument);
    }
}

TEST_CASE("Hamming-dot bridge holds bit-exactly") {
    // sim_dot(2a-1, 2b-1) = D * (1 - 2 * dist_Ham(a, b))
    for (int trial = 0; trial < 200; ++trial) {
        RngStream rng(11, "bridge/" + std::to_string(trial));
        const std::size_t d = 1 + rng.next_below(200);
        const auto space = SpaceSpec::dense_binary(d);
        const auto a = random_hv(space, rng);
        const auto b = random_hv(space, rng);
        std::vector<double> ab(d), bb(d);
        for (std::size_t i = 0; i < d; ++i) {
            ab[i] = 2.0 * a.reals()[i] - 1.0;
            bb[i] = 2.0 * b.reals()[i] - 1.0;
        }
        const auto space_b = SpaceSpec::bipolar(d);
        const double dot = similarity(Metric::dot, hv(space_b, ab), hv(space_b, bb));
        const double ham = similarity(Metric::hamming, a, b);
        // oracle: direct count of differing positions keeps the identity in
        // exact integer arithmetic
        std::size_t diff = 0;
        for (std::size_t i = 0; i < d; ++i) diff += a.reals()[i] != b.reals()[i];
        CHECK(dot == static_cast<double>(d) - 2.0 * static_cast<double>(diff));
        CHECK(ham == static_cast<double>(diff) / static_cast<double>(d));
    }
}

TEST_CASE("unit-norm dot/cosine/Euclidean correspondence") {
    for (int trial = 0; trial < 50; ++trial) {
        RngStream rng(12, "corr/" + std::to_string(trial));
        const auto space = SpaceSpec::real(256);
        auto a = random_hv(space, rng);
        auto b = random_hv(space, rng);
        const double na = a.l2_norm(), nb = b.l2_norm();
        for (auto& x : a.reals()) x /= na;
        for (auto& x : b.reals()) x /= nb;
        const double dot = similarity(Metric::dot, a, b);
        const double cos = similarity(Metric::cosine, a, b);
        const double euc = similarity(Metric::euclidean, a, b);
        CHECK(std::abs(dot - cos) < 1e-9);
        CHECK(std::abs(dot - (1.0 - euc * euc / 2.0)) < 1e-9);
    }
}

TEST_CASE("FHRR similarity is the mean cosine of angle differences") {
    RngStream rng(13, "fhrr-sim");
    const auto space = SpaceSpec::phasor(512);
    const auto a = random_hv(space, rng);
    const auto b = random_hv(space, rng);
    double expect = 0.0;
    for (std::size_t i = 0; i < 512; ++i) expect += std::cos(a.angle(i) - b.angle(i));
    expect /= 512.0;
    CHECK(similarity(Metric::phase_cosine, a, b) == doctest::Approx(expect));
    CHECK(similarity(Metric::phase_cosine, a, a) == doctest::Approx(1.0));
}

TEST_CASE("pairwise cosine concentration narrows as 1/sqrt(D)") {
    // desk-scale version of the full acceptance check
    for (std::size_t d : {128u, 1024u}) {
        const auto space = SpaceSpec::bipolar(d);
        std::vector<Hypervector> hvs;
        for (int i = 0; i < 200; ++i) {
            RngStream rng(21, "conc/" + std::to_string(d) + "/" + std::to_string(i));
            hvs.push_back(random_hv(space, rng));
        }
        double sum = 0.0, sq = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < hvs.size(); ++i)
            for (std::size_t j = i + 1; j < hvs.size(); ++j) {
                const double c = similarity(Metric::cosine, hvs[i], hvs[j]);
                sum += c;
                sq += c * c;
                ++n;
            }
        const double mean = sum / static_cast<double>(n);
        const double sd = std::sqrt((sq - static_cast<double>(n) * mean * mean) /
                                    static_cast<double>(n - 1));
        CHECK(sd == doctest::Approx(1.0 / std::sqrt(static_cast<double>(d))).epsilon(0.1));
    }
}
