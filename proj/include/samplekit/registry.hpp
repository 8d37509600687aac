#pragma once
/*
 * Name-keyed catalog of the sampling algorithms, shared by the CLI and the
 * Python bindings. Fixed-arity algorithms carry their k; the rest take k as
 * an argument.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "samplekit/source.hpp"

namespace samplekit {

struct AlgoInfo {
    std::string name;
    std::optional<std::uint64_t> fixed_k; // pair/triple/quad (and network-free arity)
    bool order_uniform = false;           // output order uniform over permutations
    void (*sample_into)(std::uint64_t n, std::uint64_t k, SourceRef src,
                        std::span<std::uint64_t> out) = nullptr;

    std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t k, SourceRef src) const;
};

/// All algorithm names: pair, triple, quad, network, pool, insertion,
/// reservoir-r, reservoir-l, insertion-uo, reservoir-r-uo, reservoir-l-uo.
const std::vector<AlgoInfo>& algorithms();

/// nullptr when the name is unknown.
const AlgoInfo* find_algorithm(std::string_view name);

/// Benchmark closure for one (algorithm, n, k): invokes the sampler and
/// digests the sample into a 64-bit value. When `preallocated` is true the
/// sampler fills a reused buffer; otherwise every call allocates its result.
std::function<std::uint64_t(WordSource&)> make_bench_op(const AlgoInfo& algo, std::uint64_t n,
                                                        std::uint64_t k, bool preallocated);

} // namespace samplekit
