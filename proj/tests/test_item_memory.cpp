#include <doctest.h>

#include <cmath>

#include "hyperalg/item_memory.hpp"

using namespace hyperalg;

TEST_CASE("item memory add / lookup / duplicate") {
    const auto space = SpaceSpec::bipolar(64);
    ItemMemory mem(space, Metric::cosine);
    RngStream rng(1, "mem");
    const auto a = random_hv(space, rng);
    mem.add("a", a);
    CHECK(mem.get("a").approx_equal(a));
    CHECK_THROWS_AS(mem.add("a", a), std::invalid_argument);
    CHECK_THROWS_AS(mem.get("nope"), std::invalid_argument);
    CHECK_THROWS_AS(mem.add("b", random_hv(SpaceSpec::bipolar(32), rng)),
                    std::invalid_argument);
    CHECK(mem.size() == 1);
}

TEST_CASE("64 random entries at D=256") {
    const auto mem = ItemMemory::random(SpaceSpec::bipolar(256), Metric::cosine, 64, 7);
    CHECK(mem.size() == 64);
    // insertion order is stable and ids are sequential
    CHECK(mem.id_at(0) == "0");
    CHECK(mem.id_at(63) == "63");
}

TEST_CASE("clean-up returns stored entries verbatim") {
    const auto mem = ItemMemory::random(SpaceSpec::dense_binary(256), Metric::hamming, 16, 9);
    for (std::size_t i = 0; i < mem.size(); ++i) {
        const auto res = mem.cleanup(mem.at(i));
        CHECK(res.id == mem.id_at(i));
        CHECK(res.score == 0.0); // self-distance
        CHECK(res.table.size() == 16);
    }
}

TEST_CASE("clean-up survives 10% bit flips (BSC, D=1024, N=100)") {
    const auto space = SpaceSpec::dense_binary(1024);
    const auto mem = ItemMemory::random(space, Metric::hamming, 100, 10);
    int hits = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        RngStream rng(11, "flip/" + std::to_string(t));
        const std::size_t target = rng.next_below(100);
        auto q = mem.at(target);
        for (int f = 0; f < 102; ++f) { // ~10% of 1024
            const std::size_t i = rng.next_below(1024);
            q.reals()[i] = q.reals()[i] != 0.0 ? 0.0 : 1.0;
        }
        hits += mem.cleanup(q).id == mem.id_at(target);
    }
    CHECK(hits >= 999);
}

TEST_CASE("ties break toward the earlier insertion") {
    const auto space = SpaceSpec::dense_binary(8);
    ItemMemory mem(space, Metric::hamming);
    const Hypervector v(space, std::vector<double>{1, 0, 1, 0, 1, 0, 1, 0});
    mem.add("first", v);
    mem.add("second", v);
    CHECK(mem.cleanup(v).id == "first");
    CHECK_THROWS_AS(ItemMemory(space, Metric::hamming).cleanup(v), std::invalid_argument);
}

TEST_CASE("rematerialization reproduces entries bit-exactly") {
    SeedManifest manifest;
    manifest.seed = 99;
    manifest.label_prefix = "codebook/";
    manifest.ids = {"x", "y", "z"};
    const auto space = SpaceSpec::phasor(128);
    const auto m1 = ItemMemory::materialize(space, Metric::phase_cosine, manifest);
    const auto m2 = ItemMemory::materialize(space, Metric::phase_cosine, manifest);
    REQUIRE(m1.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m1.at(i).approx_equal(m2.at(i), 0.0));
}

TEST_CASE("recover_factor on pairwise bindings") {
    SUBCASE("no superposition: exact recovery under BSC") {
        const auto model = ModelAlgebra::make(ModelName::bsc, 256, 12);
        const auto mem = ItemMemory::random(model.space(), model.metric(), 16, 13);
        const auto s = bind(model, mem.get("3"), mem.get("7"));
        const auto res = recover_factor(model, s, mem.get("3"), mem);
        CHECK(res.id == "7");
        CHECK(res.score == 0.0);
    }
    SUBCASE("a o b + c o d recovery under MAP, D=1024, N=64") {
        const auto model = ModelAlgebra::make(ModelName::map, 1024, 14);
        const auto mem = ItemMemory::random(model.space(), model.metric(), 64, 15);
        int hits = 0;
        const int trials = 300;
        for (int t = 0; t < trials; ++t) {
            RngStream rng(16, "rf/" + std::to_string(t));
            std::size_t idx[4];
            for (int k = 0; k < 4; ++k) {
                bool fresh = false;
                while (!fresh) {
                    idx[k] = rng.next_below(64);
                    fresh = true;
                    for (int p = 0; p < k; ++p) fresh &= idx[p] != idx[k];
                }
            }
            std::vector<Hypervector> pairs{bind(model, mem.at(idx[0]), mem.at(idx[1])),
                                           bind(model, mem.at(idx[2]), mem.at(idx[3]))};
            const auto s = superpose(model, pairs, NormMode::none);
            hits += recover_factor(model, s, mem.at(idx[0]), mem).id == mem.id_at(idx[1]);
        }
        CHECK(hits >= trials - 1); // expected >= 99.9%
    }
    SUBCASE("a query with an unrelated factor scores below a confidence threshold") {
        const auto model = ModelAlgebra::make(ModelName::map, 1024, 17);
        const auto mem = ItemMemory::random(model.space(), model.metric(), 64, 18);
        RngStream rng(19, "null");
        // s built from four fresh vectors outside the memory, then queried with
        // a fifth unrelated vector
        const auto a = model.random_atom(rng);
        const auto b = model.random_atom(rng);
        const auto c = model.random_atom(rng);
        const auto d = model.random_atom(rng);
        const auto e = model.random_atom(rng);
        std::vector<Hypervector> pairs{bind(model, a, b), bind(model, c, d)};
        const auto s = superpose(model, pairs, NormMode::none);
        const auto res = recover_factor(model, s, e, mem);
        const double threshold = 0.3; // caller-declared rejection level
        CHECK(res.score < threshold);
        // near-uniform table: no score sticks out past the threshold
        for (const auto& [id, score] : res.table) CHECK(std::abs(score) < threshold);
    }
}
