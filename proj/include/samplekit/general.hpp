#pragma once
/*
 * Reference algorithms for sampling k of n without replacement: reservoir
 * sampling variants R and L, pool sampling, and insertion sampling, plus a
 * Fisher-Yates shuffle and order-uniform variants.
 *
 * Cost profile, for a sample of size k from [0,n):
 *   reservoir_r          O(n) time, n-k bounded draws
 *   reservoir_l          O(k(1+ln(n/k))) expected, geometric skips
 *   pool_sampling        O(n) time (pool init), k bounded draws, O(n) storage
 *   insertion_sampling   O(k^2) time, k bounded draws, sorted output
 *
 * Base reservoir R/L leave the initial positions constrained and insertion
 * returns ascending order; the *_uo variants add the O(k) shuffle that makes
 * the output order uniform as well.
 */

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "samplekit/source.hpp"

namespace samplekit {

namespace detail {

inline void check_sample_args(std::uint64_t n, std::uint64_t k, std::size_t out_size,
                              const char* what) {
    if (k == 0 || k > n)
        throw std::invalid_argument(std::string(what) + ": need 1 <= k <= n");
    if (out_size != k)
        throw std::invalid_argument(std::string(what) + ": output size must equal k");
}

template <random_source S>
void reservoir_r_loop(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    for (std::uint64_t i = k; i < n; ++i) {
        const std::uint64_t j = src.next_below(i + 1);
        if (j < k) out[j] = i;
    }
}

template <random_source S>
void reservoir_l_loop(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    double w = std::exp(std::log(src.next_unit()) / double(k));
    std::uint64_t i = k;
    for (;;) {
        const double denom = std::log1p(-w); // ln(1-w), exact zero only if w underflowed
        if (denom == 0.0) break;             // skip is +inf
        const double skip = std::floor(std::log(src.next_unit()) / denom);
        if (!(skip < double(n - i))) break;  // also catches inf
        i += std::uint64_t(skip);
        if (i >= n) break;
        out[src.next_below(k)] = i;
        w *= std::exp(std::log(src.next_unit()) / double(k));
        i += 1;
    }
}

} // namespace detail

/// Vitter's algorithm R: seed the reservoir with [0..k-1], then give element i
/// a k/(i+1) chance to displace a random slot. n-k bounded draws.
template <random_source S>
void reservoir_r_into(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "reservoir_r");
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    detail::reservoir_r_loop(n, k, src, out);
}

/// Li's algorithm L: like R but jumps over geometrically distributed runs of
/// skipped elements, at the price of two unit draws plus exp/log work per
/// accepted element. The w -> 0 limit (skip divisor rounding to zero) is
/// treated as an infinite skip and ends the scan.
template <random_source S>
void reservoir_l_into(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "reservoir_l");
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    detail::reservoir_l_loop(n, k, src, out);
}

/// Draws k elements from an explicit pool of unused values, refilling each
/// hole with the pool's last element. The O(n) pool is allocated per call;
/// that cost is part of the algorithm's profile.
template <random_source S>
void pool_sampling_into(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "pool_sampling");
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    std::uint64_t remaining = n;
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t j = src.next_below(remaining);
        out[i] = pool[j];
        --remaining;
        pool[j] = pool[remaining];
    }
}

/// Treats each draw as a rank among the still-unused elements and inserts it
/// into the sorted sample, skipping over used values. Output is strictly
/// ascending. k bounded draws, O(k) storage, O(k^2) time.
template <random_source S>
void insertion_sampling_into(std::uint64_t n, std::uint64_t k, S& src,
                             std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "insertion_sampling");
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t v = src.next_below(n - i);
        std::uint64_t j = k - i;
        while (j < k && v >= out[j]) {
            ++v;
            out[j - 1] = out[j];
            ++j;
        }
        out[j - 1] = v;
    }
}

/// In-place Durstenfeld shuffle: for i from len-1 down to 1, swap i with a
/// random position in [0, i]. Uniform over permutations.
template <std::ranges::contiguous_range R, random_source S>
void shuffle(R&& seq, S& src) {
    auto s = std::span(seq);
    for (std::size_t i = s.size(); i > 1; --i) {
        const auto j = std::size_t(src.next_below(i));
        std::swap(s[i - 1], s[j]);
    }
}

// Order-uniform variants. Insertion shuffles the finished sample; the
// reservoir variants shuffle the initial [0..k-1] seed before the main scan,
// which is where the ordering constraint enters. Each adds k-1 bounded draws.

template <random_source S>
void insertion_sampling_uo_into(std::uint64_t n, std::uint64_t k, S& src,
                                std::span<std::uint64_t> out) {
    insertion_sampling_into(n, k, src, out);
    shuffle(out, src);
}

template <random_source S>
void reservoir_r_uo_into(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "reservoir_r_uo");
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    shuffle(out, src);
    detail::reservoir_r_loop(n, k, src, out);
}

template <random_source S>
void reservoir_l_uo_into(std::uint64_t n, std::uint64_t k, S& src, std::span<std::uint64_t> out) {
    detail::check_sample_args(n, k, out.size(), "reservoir_l_uo");
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    shuffle(out, src);
    detail::reservoir_l_loop(n, k, src, out);
}

// Allocate-and-return shapes.

template <random_source S>
std::vector<std::uint64_t> reservoir_r(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    reservoir_r_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> reservoir_l(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    reservoir_l_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> pool_sampling(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    pool_sampling_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> insertion_sampling(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    insertion_sampling_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> insertion_sampling_uo(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    insertion_sampling_uo_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> reservoir_r_uo(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    reservoir_r_uo_into(n, k, src, out);
    return out;
}

template <random_source S>
std::vector<std::uint64_t> reservoir_l_uo(std::uint64_t n, std::uint64_t k, S& src) {
    std::vector<std::uint64_t> out(k);
    reservoir_l_uo_into(n, k, src, out);
    return out;
}

} // namespace samplekit
