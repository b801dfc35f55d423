#include <doctest.h>

#include <cmath>

#include "hyperalg/graph.hpp"
#include "hyperalg/image.hpp"

using namespace hyperalg;

TEST_CASE("image encodings") {
    SUBCASE("a 1x1 image is one position-bound value") {
        const auto model = ModelAlgebra::make(ModelName::map, 512, 1);
        RngStream rng(2, "img-cb");
        const LevelCodebook values(model.space(), 4, LevelScheme::flip, 0.0, 1.0, rng);
        ImageGrid img{1, 1, {0.7}};
        ImageEncoderParams params;
        params.mode = ImageMode::permutation;
        params.seed = 3;
        const auto enc = encode_image(model, img, values, params);
        // oracle: the value vector permuted zero times along both axes
        CHECK(enc.approx_equal(encode_scalar(values, 0.7)));
    }
    SUBCASE("one differing pixel out of 64 keeps ~63/64 similarity") {
        const auto model = ModelAlgebra::make(ModelName::map, 8192, 4);
        RngStream rng(5, "img-cb2");
        const LevelCodebook values(model.space(), 8, LevelScheme::concatenation, 0.0, 1.0, rng);
        ImageEncoderParams params;
        params.mode = ImageMode::permutation;
        params.seed = 6;
        RngStream pix(7, "img-pix");
        ImageGrid a{8, 8, std::vector<double>(64)};
        for (auto& v : a.values) v = pix.next_double();
        ImageGrid b = a;
        b.values[27] = b.values[27] < 0.5 ? 1.0 : 0.0; // force a different grade
        const auto ea = encode_image(model, a, values, params);
        const auto eb = encode_image(model, b, values, params);
        const double self = similarity(Metric::cosine, ea, ea);
        CHECK(std::abs(similarity(Metric::cosine, ea, eb) - self * 63.0 / 64.0) < 0.05);
    }
    SUBCASE("role-filler mode with unique and correlated coordinates") {
        const auto model = ModelAlgebra::make(ModelName::map, 2048, 8);
        RngStream rng(9, "img-cb3");
        const LevelCodebook values(model.space(), 4, LevelScheme::flip, 0.0, 1.0, rng);
        ImageGrid img{3, 3, {0.1, 0.5, 0.9, 0.2, 0.4, 0.8, 0.3, 0.6, 0.95}};
        ImageEncoderParams params;
        params.mode = ImageMode::role_filler;
        params.seed = 10;
        CHECK_NOTHROW(encode_image(model, img, values, params));
        params.correlated_coordinates = true;
        CHECK_NOTHROW(encode_image(model, img, values, params));
    }
    SUBCASE("fpe mode: a 1-pixel shift stays more similar than a random image") {
        const auto model = ModelAlgebra::make(ModelName::fhrr, 1024, 11);
        RngStream rng(12, "img-cb4");
        const LevelCodebook values(model.space(), 4, LevelScheme::concatenation, 0.0, 1.0, rng);
        ImageEncoderParams params;
        params.mode = ImageMode::fpe;
        params.fpe_bandwidth = 0.2; // wide kernel, positions a pixel apart stay similar
        int wins = 0;
        const int seeds = 30;
        for (int s = 0; s < seeds; ++s) {
            params.seed = 100 + s;
            RngStream pix(13, "img-shift/" + std::to_string(s));
            ImageGrid img{6, 6, std::vector<double>(36)};
            for (auto& v : img.values) v = pix.next_double();
            ImageGrid shifted{6, 6, std::vector<double>(36)};
            for (std::size_t y = 0; y < 6; ++y)
                for (std::size_t x = 0; x < 6; ++x)
                    shifted.values[y * 6 + x] = img.at((x + 1) % 6, y);
            ImageGrid random{6, 6, std::vector<double>(36)};
            for (auto& v : random.values) v = pix.next_double();
            const auto e0 = encode_image(model, img, values, params);
            const auto es = encode_image(model, shifted, values, params);
            const auto er = encode_image(model, random, values, params);
            wins += similarity(Metric::phase_cosine, e0, es) >
                    similarity(Metric::phase_cosine, e0, er);
        }
        CHECK(wins >= seeds * 9 / 10);
    }
    SUBCASE("oversized grids and missing codebooks fail loudly") {
        const auto model = ModelAlgebra::make(ModelName::map, 128, 14);
        RngStream rng(15, "img-cb5");
        const LevelCodebook values(model.space(), 4, LevelScheme::flip, 0.0, 1.0, rng);
        ImageEncoderParams params;
        params.max_width = 2;
        ImageGrid img{3, 1, {0.1, 0.2, 0.3}};
        CHECK_THROWS_AS(encode_image(model, img, values, params), std::invalid_argument);
    }
}

TEST_CASE("graph encodings") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 20);
    const auto nodes = ItemMemory::random(model.space(), model.metric(), 5, 21, "node/");

    SUBCASE("a single-edge graph is that edge's binding") {
        const std::vector<GraphEdge> edges{{"0", "1", false}};
        CHECK(encode_graph(model, nodes, edges)
                  .approx_equal(bind(model, nodes.get("0"), nodes.get("1"))));
    }
    SUBCASE("undirected edges commute") {
        const std::vector<GraphEdge> e1{{"0", "1", false}, {"2", "3", false}};
        const std::vector<GraphEdge> e2{{"1", "0", false}, {"3", "2", false}};
        CHECK(encode_graph(model, nodes, e1).approx_equal(encode_graph(model, nodes, e2)));
    }
    SUBCASE("the five-cycle reads out its edges by dot product") {
        // nodes 0-1-2-3-4-0
        std::vector<GraphEdge> cycle;
        for (int i = 0; i < 5; ++i)
            cycle.push_back({std::to_string(i), std::to_string((i + 1) % 5), false});
        const auto g = encode_graph(model, nodes, cycle);
        const double d = 1024.0;
        for (int i = 0; i < 5; ++i) {
            const auto edge =
                bind(model, nodes.get(std::to_string(i)), nodes.get(std::to_string((i + 1) % 5)));
            CHECK(std::abs(similarity(Metric::dot, g, edge) / d - 1.0) < 0.15);
        }
        // non-edges score near zero
        const auto non_edge = bind(model, nodes.get("0"), nodes.get("2"));
        CHECK(std::abs(similarity(Metric::dot, g, non_edge) / d) < 0.15);
    }
    SUBCASE("shared edges show up as the dot product") {
        // g1 and g2 share exactly two edges
        const std::vector<GraphEdge> g1e{{"0", "1", false}, {"1", "2", false}, {"2", "3", false}};
        const std::vector<GraphEdge> g2e{{"0", "1", false}, {"1", "2", false}, {"3", "4", false}};
        const auto g1 = encode_graph(model, nodes, g1e);
        const auto g2 = encode_graph(model, nodes, g2e);
        CHECK(std::abs(similarity(Metric::dot, g1, g2) / 1024.0 - 2.0) < 0.5);
    }
    SUBCASE("directed edges are asymmetric") {
        const std::vector<GraphEdge> ab{{"0", "1", true}};
        const std::vector<GraphEdge> ba{{"1", "0", true}};
        const double sim = similarity(Metric::cosine, encode_graph(model, nodes, ab),
                                      encode_graph(model, nodes, ba));
        CHECK(std::abs(sim) < 0.1);
    }
    SUBCASE("self-loops and unknown nodes are errors") {
        const std::vector<GraphEdge> loop{{"0", "0", false}};
        CHECK_THROWS_AS(encode_graph(model, nodes, loop), std::invalid_argument);
        const std::vector<GraphEdge> missing{{"0", "9", false}};
        CHECK_THROWS_AS(encode_graph(model, nodes, missing), std::invalid_argument);
    }
}

TEST_CASE("relation encodings") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 30);
    RngStream rng(31, "rel");
    const auto spot = model.random_atom(rng);
    const auto jane = model.random_atom(rng);
    const auto fido = model.random_atom(rng);

    SUBCASE("a nullary predicate is its own vector") {
        const RelationCodec fact(model, {"raining", {}, RelationStyle::role_filler}, 32);
        CHECK(fact.encode({}).approx_equal(fact.predicate_hv()));
    }
    SUBCASE("argument order matters but shared structure keeps similarity") {
        const RelationCodec bite(model, {"bite", {"agent", "object"}}, 33);
        int distinct = 0, orderings = 0, shared = 0;
        const int seeds = 100;
        for (int s = 0; s < seeds; ++s) {
            RngStream r(34, "rel-args/" + std::to_string(s));
            const auto x = model.random_atom(r);
            const auto y = model.random_atom(r);
            const auto z = model.random_atom(r);
            const std::vector<Hypervector> xy{x, y}, yx{y, x}, xz{x, z};
            const auto bxy = bite.encode(xy);
            const auto byx = bite.encode(yx);
            const auto bxz = bite.encode(xz);
            const double self = similarity(Metric::cosine, bxy, bxy);
            distinct += similarity(Metric::cosine, bxy, byx) < self - 0.1;
            orderings += similarity(Metric::cosine, bxy, byx) > 0.1; // still related
            shared += similarity(Metric::cosine, bxy, bxz) > 0.1;    // same agent + predicate
        }
        CHECK(distinct >= 95);
        CHECK(orderings >= 95);
        CHECK(shared >= 95);
    }
    SUBCASE("nested cause(bite(...), flee(...)) recovers its antecedent") {
        const RelationCodec bite(model, {"bite", {"agent", "object"}}, 35);
        const RelationCodec flee(model, {"flee", {"agent", "object"}}, 35);
        const RelationCodec cause(model, {"cause", {"antecedent", "consequent"}}, 35);
        int hits = 0;
        const int seeds = 50;
        for (int s = 0; s < seeds; ++s) {
            RngStream r(36, "rel-nest/" + std::to_string(s));
            const auto sp = model.random_atom(r);
            const auto ja = model.random_atom(r);
            const std::vector<Hypervector> sj{sp, ja}, js{ja, sp};
            const auto b = bite.encode(sj);
            const auto f = flee.encode(js);
            const std::vector<Hypervector> bf{b, f};
            const auto episode = cause.encode(bf);
            ItemMemory events(model.space(), model.metric());
            events.add("BITE", b);
            events.add("FLEE", f);
            hits += recover_factor(model, episode, cause.role_hv(0), events).id == "BITE";
        }
        CHECK(hits >= seeds * 9 / 10);
    }
    SUBCASE("SBDR relation style thins the role-filler pairs") {
        ModelParams params;
        params.thinning_depth = 4;
        const auto sbdr =
            ModelAlgebra(ModelName::sbdr, SpaceSpec::sparse_binary(8192, 0.02), 37, params);
        RngStream r(38, "rel-sbdr");
        const auto a1 = sbdr.random_atom(r);
        const auto a2 = sbdr.random_atom(r);
        const RelationCodec bite(sbdr, {"bite", {"agent", "object"}, RelationStyle::sbdr_cdt},
                                 39);
        const std::vector<Hypervector> args{a1, a2};
        const auto enc = bite.encode(args);
        // compact: output stays sparse, similar to its fillers
        CHECK(enc.one_positions().size() <
              2 * sbdr.space().sparse_cardinality() * 4); // bounded growth
        CHECK(similarity(Metric::jaccard, enc, a1) > 0.0);
    }
    SUBCASE("permutation relation style distinguishes argument order") {
        const RelationCodec bite(model, {"bite", {"agent", "object"},
                                         RelationStyle::permutation},
                                 40);
        const std::vector<Hypervector> sj{spot, jane}, js{jane, spot};
        const auto b1 = bite.encode(sj);
        const auto b2 = bite.encode(js);
        const double self = similarity(Metric::cosine, b1, b1);
        CHECK(similarity(Metric::cosine, b1, b2) < self - 0.05);
        (void)fido;
    }
    SUBCASE("arity mismatches are rejected") {
        const RelationCodec bite(model, {"bite", {"agent", "object"}}, 41);
        const std::vector<Hypervector> one{spot};
        CHECK_THROWS_AS(bite.encode(one), std::invalid_argument);
        CHECK_THROWS_AS(RelationCodec(model, {"p", {"x", "x"}}, 42), std::invalid_argument);
    }
}
