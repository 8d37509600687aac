#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "samplekit/registry.hpp"
#include "samplekit/source.hpp"
#include "samplekit/uniformity.hpp"

using namespace samplekit;

TEST_SUITE_BEGIN("registry");

TEST_CASE("lookup") {
    CHECK(find_algorithm("pair") != nullptr);
    CHECK(find_algorithm("reservoir-l-uo") != nullptr);
    CHECK(find_algorithm("bogus") == nullptr);
    CHECK(algorithms().size() == 11);
    CHECK(find_algorithm("pair")->fixed_k == 2);
    CHECK(find_algorithm("quad")->fixed_k == 4);
    CHECK_FALSE(find_algorithm("pool")->fixed_k.has_value());
}

TEST_CASE("order claims") {
    CHECK(find_algorithm("pair")->order_uniform);
    CHECK(find_algorithm("pool")->order_uniform);
    CHECK_FALSE(find_algorithm("insertion")->order_uniform);
    CHECK_FALSE(find_algorithm("reservoir-r")->order_uniform);
    CHECK(find_algorithm("insertion-uo")->order_uniform);
    CHECK(find_algorithm("reservoir-r-uo")->order_uniform);
}

TEST_CASE("every algorithm yields distinct in-range values across random (n,k)") {
    WordSource pick(77);
    WordSource src(123);
    for (const AlgoInfo& algo : algorithms()) {
        CAPTURE(algo.name);
        for (int rep = 0; rep < 100; ++rep) {
            const std::uint64_t n = 4 + pick.next_below(120);
            const std::uint64_t k = algo.fixed_k ? *algo.fixed_k
                                                 : 2 + pick.next_below(std::min<std::uint64_t>(n - 1, 7));
            const std::vector<std::uint64_t> out = algo.sample(n, k, src);
            REQUIRE(out.size() == k);
            std::set<std::uint64_t> seen(out.begin(), out.end());
            REQUIRE(seen.size() == k);
            REQUIRE(*seen.rbegin() < n);
        }
    }
}

TEST_CASE("fixed-arity samplers ignore the k argument") {
    WordSource a(5), b(5);
    const AlgoInfo* pair = find_algorithm("pair");
    CHECK(pair->sample(20, 9, a) == pair->sample(20, 2, b));
}

TEST_CASE("bench ops digest the whole sample deterministically") {
    const AlgoInfo* insertion = find_algorithm("insertion");
    auto fill_op = make_bench_op(*insertion, 30, 4, true);
    auto alloc_op = make_bench_op(*insertion, 30, 4, false);
    WordSource a(9), b(9);
    for (int rep = 0; rep < 50; ++rep) CHECK(fill_op(a) == alloc_op(b));

    WordSource c(9);
    std::vector<std::uint64_t> expected = insertion->sample(30, 4, c);
    std::uint64_t digest = 0;
    for (const std::uint64_t v : expected) digest += v;
    WordSource d(9);
    CHECK(fill_op(d) == digest);

    CHECK_THROWS_AS(make_bench_op(*insertion, 3, 9, true), std::invalid_argument);
}

TEST_CASE("network op through the registry matches the library network") {
    const AlgoInfo* network = find_algorithm("network");
    WordSource a(31), b(31);
    auto op = make_bench_op(*network, 25, 5, true);
    const std::uint64_t digest = op(a);
    const std::vector<std::uint64_t> out = network->sample(25, 5, b);
    std::uint64_t expected = 0;
    for (const std::uint64_t v : out) expected += v;
    CHECK(digest == expected);
}

TEST_SUITE_END();
