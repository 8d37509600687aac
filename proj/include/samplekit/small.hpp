#pragma once
/*
 * Constant-time sampling of k distinct integers from [0,n).
 *
 * The fixed-arity samplers draw one bounded integer per output slot, with
 * shrinking bounds n, n-1, ..., n-k+1, then resolve duplicates with a fixed
 * sequence of compare-change steps: if the target slot equals an earlier
 * anchor slot, the target is reassigned to a value the shrunken bound could
 * not produce. The steps form layers (one per anchor, highest anchor first);
 * steps within a layer are independent of each other. The map from draw
 * tuples to output tuples is a bijection onto the ordered distinct k-tuples,
 * so outputs are exactly uniform over both combinations and permutations.
 *
 * Every sampler comes in two shapes: returning a fresh tuple, and filling a
 * caller-provided buffer.
 */

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "samplekit/source.hpp"

namespace samplekit {

template <random_source S>
void random_pair_into(std::uint64_t n, S& src, std::span<std::uint64_t, 2> out) {
    if (n < 2) throw std::invalid_argument("random_pair: n must be >= 2");
    const std::uint64_t i = src.next_below(n);
    std::uint64_t j = src.next_below(n - 1);
    if (j == i) j = n - 1;
    out[0] = i;
    out[1] = j;
}

template <random_source S>
std::array<std::uint64_t, 2> random_pair(std::uint64_t n, S& src) {
    std::array<std::uint64_t, 2> out;
    random_pair_into(n, src, out);
    return out;
}

template <random_source S>
void random_triple_into(std::uint64_t n, S& src, std::span<std::uint64_t, 3> out) {
    if (n < 3) throw std::invalid_argument("random_triple: n must be >= 3");
    const std::uint64_t i = src.next_below(n);
    std::uint64_t j = src.next_below(n - 1);
    std::uint64_t k = src.next_below(n - 2);
    if (k == j) k = n - 2;
    if (j == i) j = n - 1;
    if (k == i) k = n - 1;
    out[0] = i;
    out[1] = j;
    out[2] = k;
}

template <random_source S>
std::array<std::uint64_t, 3> random_triple(std::uint64_t n, S& src) {
    std::array<std::uint64_t, 3> out;
    random_triple_into(n, src, out);
    return out;
}

template <random_source S>
void random_four_tuple_into(std::uint64_t n, S& src, std::span<std::uint64_t, 4> out) {
    if (n < 4) throw std::invalid_argument("random_four_tuple: n must be >= 4");
    const std::uint64_t h = src.next_below(n);
    std::uint64_t i = src.next_below(n - 1);
    std::uint64_t j = src.next_below(n - 2);
    std::uint64_t k = src.next_below(n - 3);
    if (k == j) k = n - 3;
    if (j == i) j = n - 2;
    if (k == i) k = n - 2;
    if (i == h) i = n - 1;
    if (j == h) j = n - 1;
    if (k == h) k = n - 1;
    out[0] = h;
    out[1] = i;
    out[2] = j;
    out[3] = k;
}

template <random_source S>
std::array<std::uint64_t, 4> random_four_tuple(std::uint64_t n, S& src) {
    std::array<std::uint64_t, 4> out;
    random_four_tuple_into(n, src, out);
    return out;
}

// One compare-change: if slot `target` equals slot `anchor`, the target is
// reassigned to n - 1 - anchor (a value the target's draw bound excludes).
struct CompareChangeStep {
    std::uint32_t target;
    std::uint32_t anchor; // anchor < target
};

// Draw schedule plus layered compare-changes for arbitrary fixed k. Layers
// are ordered by strictly decreasing anchor: a comparison must see its
// anchor's original draw, and an anchor slot is only rewritten by layers with
// smaller anchors, which run later. Steps within one layer touch distinct
// targets and may run in any order. Immutable once built, shareable across
// threads.
struct CompareChangeNetwork {
    std::uint32_t k = 0;
    std::vector<std::vector<CompareChangeStep>> layers;

    std::size_t step_count() const {
        std::size_t total = 0;
        for (const auto& layer : layers) total += layer.size();
        return total;
    }
};

// Builds the k(k-1)/2-step network; reproduces the explicit pair/triple/quad
// samplers at k = 2, 3, 4.
CompareChangeNetwork build_network(std::uint32_t k);

template <random_source S>
void run_network_into(const CompareChangeNetwork& net, std::uint64_t n, S& src,
                      std::span<std::uint64_t> out) {
    if (n < net.k) throw std::invalid_argument("run_network: n must be >= k");
    if (out.size() != net.k) throw std::invalid_argument("run_network: output size must equal k");
    for (std::uint32_t i = 0; i < net.k; ++i) out[i] = src.next_below(n - i);
    for (const auto& layer : net.layers)
        for (const auto& step : layer)
            if (out[step.target] == out[step.anchor]) out[step.target] = n - 1 - step.anchor;
}

template <random_source S>
std::vector<std::uint64_t> run_network(const CompareChangeNetwork& net, std::uint64_t n, S& src) {
    std::vector<std::uint64_t> out(net.k);
    run_network_into(net, n, src, out);
    return out;
}

} // namespace samplekit
