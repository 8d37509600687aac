#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "samplekit/general.hpp"
#include "samplekit/source.hpp"
#include "samplekit/uniformity.hpp"
#include "test_support.hpp"

using namespace samplekit;
using samplekit::testing::FakeSource;

namespace {

bool is_ascending(const std::vector<std::uint64_t>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace

TEST_SUITE_BEGIN("general");

TEST_CASE("argument validation across all samplers") {
    WordSource src(1);
    CHECK_THROWS_AS(reservoir_r(5, 0, src), std::invalid_argument);
    CHECK_THROWS_AS(reservoir_r(5, 6, src), std::invalid_argument);
    CHECK_THROWS_AS(reservoir_l(5, 0, src), std::invalid_argument);
    CHECK_THROWS_AS(pool_sampling(5, 6, src), std::invalid_argument);
    CHECK_THROWS_AS(insertion_sampling(5, 0, src), std::invalid_argument);
    CHECK_THROWS_AS(insertion_sampling_uo(5, 6, src), std::invalid_argument);
    std::vector<std::uint64_t> wrong(3);
    CHECK_THROWS_AS(pool_sampling_into(5, 2, src, wrong), std::invalid_argument);
}

TEST_CASE("reservoir R") {
    SUBCASE("n=k returns the identity sample, no draws") {
        WordSource inner(9);
        CountingSource<WordSource> src(inner);
        CHECK(reservoir_r(3, 3, src) == std::vector<std::uint64_t>{0, 1, 2});
        CHECK(src.bounded_draws() == 0);
    }
    SUBCASE("manual trace n=5 k=2, draws j=(0,3,1)") {
        ScriptedSource src({0, 3, 1}, {3, 4, 5});
        CHECK(reservoir_r(5, 2, src) == std::vector<std::uint64_t>{2, 4});
    }
    SUBCASE("exactly n-k bounded draws") {
        WordSource inner(9);
        CountingSource<WordSource> src(inner);
        reservoir_r(100, 2, src);
        CHECK(src.bounded_draws() == 98);
    }
}

TEST_CASE("reservoir L") {
    SUBCASE("n=k is always the identity sample") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            WordSource src(seed);
            CHECK(reservoir_l(5, 5, src) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
        }
    }
    SUBCASE("manual trace: n=10 k=2, U()=0.25 throughout, Rand(2)=(1,0)") {
        // w=0.5, first i=4 -> sample[1]=4; w=0.25, i=9 -> sample[0]=9;
        // w=0.125, next skip passes n. Result [9,4].
        FakeSource src{.bounded = {1, 0}, .units = {0.25}};
        CHECK(reservoir_l(10, 2, src) == std::vector<std::uint64_t>{9, 4});
    }
    SUBCASE("per-element inclusion frequency stays within 5 sigma") {
        const std::uint64_t n = 1000, k = 10, runs = 100'000;
        std::vector<std::uint64_t> inclusions(n, 0);
        WordSource src(42);
        std::vector<std::uint64_t> out(k);
        for (std::uint64_t r = 0; r < runs; ++r) {
            reservoir_l_into(n, k, src, out);
            for (const std::uint64_t v : out) ++inclusions[v];
        }
        const double p = double(k) / double(n);
        const double sigma = std::sqrt(p * (1 - p) / double(runs));
        const double lo = (p - 5 * sigma) * double(runs);
        const double hi = (p + 5 * sigma) * double(runs);
        for (const std::uint64_t count : inclusions) {
            REQUIRE(double(count) >= lo);
            REQUIRE(double(count) <= hi);
        }
    }
    SUBCASE("bounded-draw growth is far below linear") {
        // Expected replacements grow like k ln(n/k): about 3.8 at n=16 and
        // 12.0 at n=1024 for k=2, a ratio near 3.2.
        const auto average_draws = [](std::uint64_t n) {
            WordSource inner(7);
            CountingSource<WordSource> src(inner);
            std::vector<std::uint64_t> out(2);
            const std::uint64_t runs = 20'000;
            for (std::uint64_t r = 0; r < runs; ++r) reservoir_l_into(n, 2, src, out);
            return double(src.bounded_draws()) / double(runs);
        };
        const double at_16 = average_draws(16);
        const double at_1024 = average_draws(1024);
        CHECK(at_1024 < 4.0 * at_16);
        CHECK(at_1024 > at_16); // grows, just slowly
    }
}

TEST_CASE("pool sampling") {
    SUBCASE("manual trace n=5 k=2, draws (4,0)") {
        ScriptedSource src({4, 0}, {5, 4});
        CHECK(pool_sampling(5, 2, src) == std::vector<std::uint64_t>{4, 0});
    }
    SUBCASE("manual trace n=k=4, draws (3,2,1,0) extract the shrinking tail") {
        ScriptedSource src({3, 2, 1, 0}, {4, 3, 2, 1});
        CHECK(pool_sampling(4, 4, src) == std::vector<std::uint64_t>{3, 2, 1, 0});
    }
    SUBCASE("exactly k bounded draws") {
        WordSource inner(3);
        CountingSource<WordSource> src(inner);
        for (const auto [n, k] : {std::pair{50ull, 7ull}, {1000ull, 1ull}, {9ull, 9ull}}) {
            src.reset();
            pool_sampling(n, k, src);
            CHECK(src.bounded_draws() == k);
        }
    }
}

TEST_CASE("insertion sampling") {
    SUBCASE("manual trace n=6 k=3, draws (3,3,2): collision shifts and increments") {
        ScriptedSource src({3, 3, 2}, {6, 5, 4});
        CHECK(insertion_sampling(6, 3, src) == std::vector<std::uint64_t>{2, 3, 4});
    }
    SUBCASE("single draw") {
        ScriptedSource src({5}, {6});
        CHECK(insertion_sampling(6, 1, src) == std::vector<std::uint64_t>{5});
    }
    SUBCASE("k=n always yields the identity") {
        WordSource src(13);
        for (int rep = 0; rep < 20; ++rep)
            CHECK(insertion_sampling(6, 6, src) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
    }
    SUBCASE("output is strictly ascending for random draws") {
        WordSource src(99);
        for (int rep = 0; rep < 500; ++rep) {
            const std::uint64_t n = 2 + src.next_below(60);
            const std::uint64_t k = 1 + src.next_below(n);
            CHECK(is_ascending(insertion_sampling(n, k, src)));
        }
    }
    SUBCASE("exactly k bounded draws") {
        WordSource inner(5);
        CountingSource<WordSource> src(inner);
        insertion_sampling(40, 6, src);
        CHECK(src.bounded_draws() == 6);
    }
}

TEST_CASE("shuffle") {
    SUBCASE("length one is unchanged") {
        WordSource src(1);
        std::vector<std::uint64_t> v{7};
        shuffle(v, src);
        CHECK(v == std::vector<std::uint64_t>{7});
    }
    SUBCASE("manual trace: [0,1,2] with draws (2,1) is unchanged") {
        ScriptedSource src({2, 1}, {3, 2});
        std::vector<std::uint64_t> v{0, 1, 2};
        shuffle(v, src);
        CHECK(v == std::vector<std::uint64_t>{0, 1, 2});
    }
    SUBCASE("length 4 exhaustive: all 24 permutations exactly once") {
        const SampleFn fn = [](std::uint64_t n, std::uint64_t, SourceRef src) {
            std::vector<std::uint64_t> v(n);
            std::iota(v.begin(), v.end(), std::uint64_t{0});
            shuffle(v, src);
            return v;
        };
        const EnumerationReport report = enumerate_bijection(fn, 4, 4);
        CHECK(report.input_count == 24);
        CHECK(report.bijection);
    }
}

TEST_CASE("order-uniform variants") {
    SUBCASE("insertion-uo keeps the sampled set") {
        ScriptedSource base({3, 3, 2}, {6, 5, 4});
        std::vector<std::uint64_t> plain = insertion_sampling(6, 3, base);
        ScriptedSource uo({3, 3, 2, 0, 0}, {6, 5, 4, 3, 2}); // same draws + shuffle draws
        std::vector<std::uint64_t> shuffled = insertion_sampling_uo(6, 3, uo);
        std::sort(shuffled.begin(), shuffled.end());
        CHECK(shuffled == plain);
    }
    SUBCASE("reservoir-r-uo at n=k=3: shuffle draws cover all 6 orderings once") {
        const SampleFn fn = [](std::uint64_t n, std::uint64_t k, SourceRef src) {
            std::vector<std::uint64_t> out(k);
            reservoir_r_uo_into(n, k, src, out);
            return out;
        };
        const EnumerationReport report = enumerate_bijection(fn, 3, 3);
        CHECK(report.input_count == 6);
        CHECK(report.bijection);
    }
    SUBCASE("insertion-uo draw count is k sampling plus k-1 shuffle") {
        WordSource inner(8);
        CountingSource<WordSource> src(inner);
        insertion_sampling_uo(20, 5, src);
        CHECK(src.bounded_draws() == 5 + 4);
    }
    SUBCASE("uo variants are order-uniform: ordered-category chi2 passes") {
        const auto check_ordered = [](auto sample_into) {
            const SampleFn fn = [sample_into](std::uint64_t n, std::uint64_t k, SourceRef s) {
                std::vector<std::uint64_t> out(k);
                sample_into(n, k, s, out);
                return out;
            };
            return frequency_harness(fn, 6, 2, 50'000, 42, true, 0.001).pass;
        };
        CHECK(check_ordered(+[](std::uint64_t n, std::uint64_t k, SourceRef s,
                                std::span<std::uint64_t> out) {
            insertion_sampling_uo_into(n, k, s, out);
        }));
        CHECK(check_ordered(+[](std::uint64_t n, std::uint64_t k, SourceRef s,
                                std::span<std::uint64_t> out) {
            reservoir_r_uo_into(n, k, s, out);
        }));
        CHECK(check_ordered(+[](std::uint64_t n, std::uint64_t k, SourceRef s,
                                std::span<std::uint64_t> out) {
            reservoir_l_uo_into(n, k, s, out);
        }));
    }
    SUBCASE("base reservoir-r is not order-uniform, its uo variant is") {
        // The initial [0..k-1] seeding constrains ordering; at n=k the base
        // algorithm is fully deterministic.
        WordSource src(4);
        CHECK(reservoir_r(3, 3, src) == std::vector<std::uint64_t>{0, 1, 2});
    }
    SUBCASE("reservoir uo variants still sample validly") {
        WordSource src(21);
        for (int rep = 0; rep < 50; ++rep) {
            auto a = reservoir_r_uo(30, 4, src);
            auto b = reservoir_l_uo(30, 4, src);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(is_ascending(a));
            CHECK(is_ascending(b));
            CHECK(a.back() < 30);
            CHECK(b.back() < 30);
        }
    }
}

TEST_CASE("all four algorithms are uniform over unordered combinations") {
    // Chi-squared over all C(10,3) = 120 combinations, a million trials each.
    const std::uint64_t trials = 1'000'000;
    int algo_index = 0;
    for (const auto sample_into :
         {+[](std::uint64_t n, std::uint64_t k, SourceRef s, std::span<std::uint64_t> out) {
              reservoir_r_into(n, k, s, out);
          },
          +[](std::uint64_t n, std::uint64_t k, SourceRef s, std::span<std::uint64_t> out) {
              reservoir_l_into(n, k, s, out);
          },
          +[](std::uint64_t n, std::uint64_t k, SourceRef s, std::span<std::uint64_t> out) {
              pool_sampling_into(n, k, s, out);
          },
          +[](std::uint64_t n, std::uint64_t k, SourceRef s, std::span<std::uint64_t> out) {
              insertion_sampling_into(n, k, s, out);
          }}) {
        CAPTURE(algo_index);
        const SampleFn fn = [sample_into](std::uint64_t n, std::uint64_t k, SourceRef s) {
            std::vector<std::uint64_t> out(k);
            sample_into(n, k, s, out);
            return out;
        };
        const UniformityReport report = frequency_harness(fn, 10, 3, trials, 42, false, 0.001);
        CHECK(report.pass);
        ++algo_index;
    }
}

TEST_SUITE_END();
