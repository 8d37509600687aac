#include "samplekit/registry.hpp"

#include <memory>
#include <stdexcept>

#include "samplekit/general.hpp"
#include "samplekit/small.hpp"

namespace samplekit {

namespace {

void pair_into(std::uint64_t n, std::uint64_t, SourceRef src, std::span<std::uint64_t> out) {
    random_pair_into(n, src, std::span<std::uint64_t, 2>(out));
}
void triple_into(std::uint64_t n, std::uint64_t, SourceRef src, std::span<std::uint64_t> out) {
    random_triple_into(n, src, std::span<std::uint64_t, 3>(out));
}
void quad_into(std::uint64_t n, std::uint64_t, SourceRef src, std::span<std::uint64_t> out) {
    random_four_tuple_into(n, src, std::span<std::uint64_t, 4>(out));
}
void network_into(std::uint64_t n, std::uint64_t k, SourceRef src, std::span<std::uint64_t> out) {
    const CompareChangeNetwork net = build_network(std::uint32_t(k));
    run_network_into(net, n, src, out);
}
void pool_into(std::uint64_t n, std::uint64_t k, SourceRef src, std::span<std::uint64_t> out) {
    pool_sampling_into(n, k, src, out);
}
void insertion_into(std::uint64_t n, std::uint64_t k, SourceRef src,
                    std::span<std::uint64_t> out) {
    insertion_sampling_into(n, k, src, out);
}
void reservoir_r_into_(std::uint64_t n, std::uint64_t k, SourceRef src,
                       std::span<std::uint64_t> out) {
    reservoir_r_into(n, k, src, out);
}
void reservoir_l_into_(std::uint64_t n, std::uint64_t k, SourceRef src,
                       std::span<std::uint64_t> out) {
    reservoir_l_into(n, k, src, out);
}
void insertion_uo_into_(std::uint64_t n, std::uint64_t k, SourceRef src,
                        std::span<std::uint64_t> out) {
    insertion_sampling_uo_into(n, k, src, out);
}
void reservoir_r_uo_into_(std::uint64_t n, std::uint64_t k, SourceRef src,
                          std::span<std::uint64_t> out) {
    reservoir_r_uo_into(n, k, src, out);
}
void reservoir_l_uo_into_(std::uint64_t n, std::uint64_t k, SourceRef src,
                          std::span<std::uint64_t> out) {
    reservoir_l_uo_into(n, k, src, out);
}

} // namespace

std::vector<std::uint64_t> AlgoInfo::sample(std::uint64_t n, std::uint64_t k,
                                            SourceRef src) const {
    const std::uint64_t arity = fixed_k.value_or(k);
    std::vector<std::uint64_t> out(arity);
    sample_into(n, arity, src, out);
    return out;
}

const std::vector<AlgoInfo>& algorithms() {
    static const std::vector<AlgoInfo> algos = {
        {"pair", 2, true, &pair_into},
        {"triple", 3, true, &triple_into},
        {"quad", 4, true, &quad_into},
        {"network", std::nullopt, true, &network_into},
        {"pool", std::nullopt, true, &pool_into},
        {"insertion", std::nullopt, false, &insertion_into},
        {"reservoir-r", std::nullopt, false, &reservoir_r_into_},
        {"reservoir-l", std::nullopt, false, &reservoir_l_into_},
        {"insertion-uo", std::nullopt, true, &insertion_uo_into_},
        {"reservoir-r-uo", std::nullopt, true, &reservoir_r_uo_into_},
        {"reservoir-l-uo", std::nullopt, true, &reservoir_l_uo_into_},
    };
    return algos;
}

const AlgoInfo* find_algorithm(std::string_view name) {
    for (const AlgoInfo& algo : algorithms())
        if (algo.name == name) return &algo;
    return nullptr;
}

std::function<std::uint64_t(WordSource&)> make_bench_op(const AlgoInfo& algo, std::uint64_t n,
                                                        std::uint64_t k, bool preallocated) {
    const std::uint64_t arity = algo.fixed_k.value_or(k);
    if (arity == 0 || arity > n)
        throw std::invalid_argument("make_bench_op: need 1 <= k <= n");
    auto into = algo.sample_into;
    if (algo.name == "network") {
        // Build once; per-call construction would benchmark the builder.
        auto net = std::make_shared<const CompareChangeNetwork>(build_network(std::uint32_t(arity)));
        if (preallocated) {
            return [net, n, buf = std::vector<std::uint64_t>(arity)](WordSource& src) mutable {
                run_network_into(*net, n, src, buf);
                std::uint64_t digest = 0;
                for (const std::uint64_t v : buf) digest += v;
                return digest;
            };
        }
        return [net, n](WordSource& src) {
            const std::vector<std::uint64_t> out = run_network(*net, n, src);
            std::uint64_t digest = 0;
            for (const std::uint64_t v : out) digest += v;
            return digest;
        };
    }
    if (preallocated) {
        return [into, n, arity, buf = std::vector<std::uint64_t>(arity)](WordSource& src) mutable {
            into(n, arity, src, buf);
            std::uint64_t digest = 0;
            for (const std::uint64_t v : buf) digest += v;
            return digest;
        };
    }
    return [into, n, arity](WordSource& src) {
        std::vector<std::uint64_t> out(arity);
        into(n, arity, src, out);
        std::uint64_t digest = 0;
        for (const std::uint64_t v : out) digest += v;
        return digest;
    };
}

} // namespace samplekit
