#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "hyperalg/rng.hpp"

using namespace hyperalg;

TEST_CASE("identical (seed, label, counter) yields identical draws") {
    RngStream a(42, "stream");
    RngStream b(42, "stream");
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // resume mid-stream from the counter
    RngStream c(42, "stream", 50);
    RngStream d(42, "stream");
    for (int i = 0; i < 50; ++i) d.next_u64();
    for (int i = 0; i < 20; ++i) CHECK(c.next_u64() == d.next_u64());
}

TEST_CASE("distinct labels and seeds give distinct streams") {
    RngStream a(42, "one"), b(42, "two"), c(43, "one");
    int same_ab = 0, same_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        same_ab += va == b.next_u64();
        same_ac += va == c.next_u64();
    }
    CHECK(same_ab == 0);
    CHECK(same_ac == 0);
}

TEST_CASE("derive produces an independent child stream") {
    RngStream parent(7, "parent");
    RngStream child = parent.derive("task");
    CHECK(child.label() == "parent/task");
    RngStream again = RngStream(7, "parent").derive("task");
    for (int i = 0; i < 16; ++i) CHECK(child.next_u64() == again.next_u64());
}

TEST_CASE("uniform and normal draws have sane moments") {
    RngStream rng(123, "moments");
    const int n = 20000;
    double usum = 0.0, nsum = 0.0, nsq = 0.0;
    for (int i = 0; i < n; ++i) usum += rng.next_double();
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_normal();
        nsum += x;
        nsq += x * x;
    }
    CHECK(usum / n == doctest::Approx(0.5).epsilon(0.02));
    CHECK(nsum / n == doctest::Approx(0.0).epsilon(0.05));
    CHECK(nsq / n == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("next_below stays in range and covers it") {
    RngStream rng(5, "below");
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.next_below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("angles live in (0, 2*pi]") {
    RngStream rng(9, "angles");
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.next_angle();
        CHECK(a > 0.0);
        CHECK(a <= 2.0 * 3.14159265358979323846 + 1e-12);
    }
}
