#include <doctest.h>

#include <cmath>

#include "hyperalg/sequence.hpp"

using namespace hyperalg;

namespace {

SequenceCodec make_codec(const ModelAlgebra& model, const ItemMemory& memory) {
    SequenceCodec codec;
    codec.model = &model;
    codec.symbols = &memory;
    return codec;
}

} // namespace

TEST_CASE("sequence encodings") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 1);
    const auto mem = ItemMemory::random(model.space(), model.metric(), 26, 2);
    auto codec = make_codec(model, mem);

    SUBCASE("a length-1 superposed sequence is the symbol itself") {
        const std::vector<std::string> one{"5"};
        CHECK(encode_sequence(codec, one).approx_equal(mem.get("5")));
    }
    SUBCASE("bound mode separates reorderings to quasi-orthogonality") {
        codec.composition = SeqComposition::bind;
        const std::vector<std::string> abc{"0", "1", "2"};
        const std::vector<std::string> acb{"0", "2", "1"};
        const double sim = similarity(Metric::cosine, encode_sequence(codec, abc),
                                      encode_sequence(codec, acb));
        CHECK(std::abs(sim) < 0.1);
    }
    SUBCASE("superposed sequences recover their elements by inverse permutation") {
        const std::vector<std::string> seq{"3", "9", "14", "9", "21"};
        const auto s = encode_sequence(codec, seq);
        for (std::size_t i = 0; i < seq.size(); ++i)
            CHECK(mem.cleanup(position_query(codec, s, i)).id == seq[i]);
    }
    SUBCASE("appending matches a full re-encode") {
        const std::vector<std::string> seq{"3", "9", "14"};
        auto s = encode_sequence(codec, std::span<const std::string>(seq.data(), 2));
        s = append_symbol(codec, s, "14", 2);
        CHECK(s.approx_equal(encode_sequence(codec, seq)));
    }
    SUBCASE("appending dilutes the similarity to the old encoding predictably") {
        // sim(s_m, s_{m+1}) ~ sqrt(m / (m+1)) for unconstrained sums
        const std::vector<std::string> seq{"0", "4", "8", "12", "16", "20"};
        for (std::size_t m = 2; m < 6; ++m) {
            const auto prev =
                encode_sequence(codec, std::span<const std::string>(seq.data(), m));
            const auto next =
                encode_sequence(codec, std::span<const std::string>(seq.data(), m + 1));
            const double want = std::sqrt(static_cast<double>(m) / (m + 1.0));
            CHECK(std::abs(similarity(Metric::cosine, prev, next) - want) < 0.05);
        }
    }
    SUBCASE("unknown symbols are rejected") {
        const std::vector<std::string> bad{"zz"};
        CHECK_THROWS_AS(encode_sequence(codec, bad), std::invalid_argument);
    }
}

TEST_CASE("position scheme variants") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 3);
    const auto mem = ItemMemory::random(model.space(), model.metric(), 26, 4);
    const std::vector<std::string> seq{"1", "7", "19"};

    SUBCASE("role vectors per position") {
        auto codec = make_codec(model, mem);
        codec.position = PositionScheme::role_hv;
        codec.seed = 5;
        const auto s = encode_sequence(codec, seq);
        for (std::size_t i = 0; i < seq.size(); ++i)
            CHECK(mem.cleanup(position_query(codec, s, i)).id == seq[i]);
    }
    SUBCASE("correlated positions keep shifted sequences similar") {
        RngStream rng(6, "pos-levels");
        const LevelCodebook levels(model.space(), 16, LevelScheme::flip, 0.0, 1.0, rng);
        auto codec = make_codec(model, mem);
        codec.position = PositionScheme::correlated;
        codec.position_levels = &levels;
        const std::vector<std::string> shifted{"7", "19", "23"};
        auto codec_rand = make_codec(model, mem);
        codec_rand.position = PositionScheme::role_hv;
        codec_rand.seed = 7;
        const double corr = similarity(Metric::cosine, encode_sequence(codec, seq),
                                       encode_sequence(codec, shifted));
        const double rand = similarity(Metric::cosine, encode_sequence(codec_rand, seq),
                                       encode_sequence(codec_rand, shifted));
        CHECK(corr > rand + 0.05); // correlated roles leak similarity across offsets
    }
    SUBCASE("trajectory association needs a non-self-inverse binding") {
        auto codec = make_codec(model, mem);
        codec.position = PositionScheme::trajectory;
        CHECK_THROWS_AS(encode_sequence(codec, seq), std::invalid_argument);
    }
    SUBCASE("trajectory association round-trips under FHRR") {
        const auto fhrr = ModelAlgebra::make(ModelName::fhrr, 1024, 8);
        const auto fmem = ItemMemory::random(fhrr.space(), fhrr.metric(), 26, 9);
        auto codec = make_codec(fhrr, fmem);
        codec.position = PositionScheme::trajectory;
        codec.seed = 10;
        const auto s = encode_sequence(codec, seq);
        for (std::size_t i = 0; i < seq.size(); ++i)
            CHECK(fmem.cleanup(position_query(codec, s, i)).id == seq[i]);
    }
    SUBCASE("hybrid bag plus order keeps similarity across reorderings") {
        auto hybrid = make_codec(model, mem);
        hybrid.composition = SeqComposition::hybrid;
        auto plain = make_codec(model, mem);
        const std::vector<std::string> reordered{"19", "1", "7"};
        const double h = similarity(Metric::cosine, encode_sequence(hybrid, seq),
                                    encode_sequence(hybrid, reordered));
        const double p = similarity(Metric::cosine, encode_sequence(plain, seq),
                                    encode_sequence(plain, reordered));
        CHECK(h > p + 0.1); // the bag half survives the permutation
    }
}

TEST_CASE("n-gram encodings") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 11);
    const auto mem = ItemMemory::random(model.space(), model.metric(), 26, 12);

    SUBCASE("a 1-gram is the raw symbol vector") {
        const std::vector<std::string> g{"9"};
        CHECK(encode_ngram(model, mem, g, NgramScheme::multiplicative)
                  .approx_equal(mem.get("9")));
        CHECK(encode_ngram(model, mem, g, NgramScheme::superposed).approx_equal(mem.get("9")));
    }
    SUBCASE("multiplicative n-grams separate reorderings") {
        const std::vector<std::string> abc{"0", "1", "2"};
        const std::vector<std::string> acb{"0", "2", "1"};
        const double sim = similarity(
            Metric::cosine, encode_ngram(model, mem, abc, NgramScheme::multiplicative),
            encode_ngram(model, mem, acb, NgramScheme::multiplicative));
        CHECK(std::abs(sim) < 0.1);
    }
    SUBCASE("superposed n-grams share 2/3 similarity on a 2-of-3 overlap") {
        const std::vector<std::string> abc{"0", "1", "2"};
        const std::vector<std::string> abd{"0", "1", "3"};
        const auto e1 = encode_ngram(model, mem, abc, NgramScheme::superposed);
        const auto e2 = encode_ngram(model, mem, abd, NgramScheme::superposed);
        const double self = similarity(Metric::dot, e1, e1);
        const double cross = similarity(Metric::dot, e1, e2);
        CHECK(std::abs(cross / self - 2.0 / 3.0) < 0.05);
    }
    SUBCASE("n-gram statistics count multiplicities exactly for 'aaaa'") {
        const std::vector<std::string> text{"7", "7", "7", "7"};
        const auto stats = encode_ngram_stats(model, mem, text, 2);
        const std::vector<std::string> aa{"7", "7"};
        const auto unit = encode_ngram(model, mem, aa, NgramScheme::multiplicative);
        for (std::size_t i = 0; i < 1024; ++i)
            CHECK(stats.reals()[i] == 3.0 * unit.reals()[i]);
    }
    SUBCASE("dot product estimates n-gram counts within +-0.5") {
        const auto big = ModelAlgebra::make(ModelName::map, 8192, 13);
        const auto bmem = ItemMemory::random(big.space(), big.metric(), 8, 14);
        RngStream rng(15, "ngram-text");
        std::vector<std::string> text;
        for (int i = 0; i < 100; ++i) text.push_back(bmem.id_at(rng.next_below(8)));
        const auto stats = encode_ngram_stats(big, bmem, text, 2);
        // oracle: direct sliding-window count
        for (const std::string a : {"0", "3"})
            for (const std::string b : {"1", "5"}) {
                double count = 0;
                for (std::size_t i = 0; i + 2 <= text.size(); ++i)
                    count += text[i] == a && text[i + 1] == b;
                const std::vector<std::string> g{a, b};
                const auto unit = encode_ngram(big, bmem, g, NgramScheme::multiplicative);
                const double est = similarity(Metric::dot, stats, unit) / 8192.0;
                CHECK(std::abs(est - count) <= 0.5);
            }
    }
    SUBCASE("texts with the same n-gram multiset give identical stats") {
        // bigrams of "121" = {(1,2), (2,1)} = bigrams of "212"
        const std::vector<std::string> t1{"1", "2", "1"};
        const std::vector<std::string> t2{"2", "1", "2"};
        const auto s1 = encode_ngram_stats(model, mem, t1, 2);
        const auto s2 = encode_ngram_stats(model, mem, t2, 2);
        CHECK(s1.approx_equal(s2));
    }
    SUBCASE("a stream shorter than n is an error") {
        const std::vector<std::string> t{"1"};
        CHECK_THROWS_AS(encode_ngram_stats(model, mem, t, 2), std::invalid_argument);
    }
}

TEST_CASE("stacks") {
    const auto model = ModelAlgebra::make(ModelName::map, 1024, 16);
    const auto mem = ItemMemory::random(model.space(), model.metric(), 64, 17);

    SUBCASE("pushing onto the empty stack yields the item") {
        const auto empty = Hypervector::zeros(model.space());
        CHECK(stack_push(model, empty, mem.get("4")).approx_equal(mem.get("4")));
    }
    SUBCASE("push a, push b, pop b, pop a - exactly") {
        const auto empty = Hypervector::zeros(model.space());
        auto s = stack_push(model, empty, mem.get("10"));
        s = stack_push(model, s, mem.get("20"));
        auto p1 = stack_pop(model, s, mem);
        CHECK(p1.id == "20");
        auto p2 = stack_pop(model, p1.remaining, mem);
        CHECK(p2.id == "10");
        CHECK(p2.remaining.l2_norm() == doctest::Approx(0.0));
    }
    SUBCASE("five pushes then five pops recover everything (50 trials)") {
        int perfect = 0;
        const int trials = 50;
        for (int t = 0; t < trials; ++t) {
            RngStream rng(18, "stack/" + std::to_string(t));
            std::vector<std::string> items;
            auto s = Hypervector::zeros(model.space());
            for (int k = 0; k < 5; ++k) {
                items.push_back(mem.id_at(rng.next_below(64)));
                s = stack_push(model, s, mem.get(items.back()));
            }
            bool ok = true;
            for (int k = 4; k >= 0; --k) {
                auto pop = stack_pop(model, s, mem);
                ok &= pop.id == items[static_cast<std::size_t>(k)];
                s = pop.remaining;
            }
            perfect += ok;
        }
        CHECK(perfect >= trials * 98 / 100);
    }
    SUBCASE("popping the empty stack is an error") {
        const auto empty = Hypervector::zeros(model.space());
        CHECK_THROWS_AS(stack_pop(model, empty, mem), std::invalid_argument);
    }
    SUBCASE("binary models cannot hold additive stacks") {
        const auto bsc = ModelAlgebra::make(ModelName::bsc, 64, 19);
        const auto bm = ItemMemory::random(bsc.space(), bsc.metric(), 4, 20);
        CHECK_THROWS_AS(stack_push(bsc, Hypervector::zeros(bsc.space()), bm.get("0")),
                        std::invalid_argument);
    }
}
