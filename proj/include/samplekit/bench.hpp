#pragma once
/*
 * Microbenchmark harness: timed warmup iterations followed by timed
 * measurement iterations, each invoking the operation in batches sized so
 * clock reads stay below ~1% of the time. Reports the mean ns/op across
 * measurement iterations with a 99.9% two-sided Student-t confidence
 * half-width over the per-iteration means.
 *
 * Every benchmarked value is folded into a Blackhole accumulator; the
 * accumulator feeds back into the generator state between batches, so the
 * compiler cannot prove any sample unused. Measurement is elapsed monotonic
 * time, not CPU time. Run one benchmark per process and keep the machine
 * quiet; competing load lands directly in the numbers.
 */

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "samplekit/source.hpp"

namespace samplekit {

struct BenchConfig {
    std::uint32_t warmup_iters = 3;
    double warmup_secs = 1.0;
    std::uint32_t measure_iters = 5;
    double measure_secs = 1.0;
    std::uint64_t seed = 42;
};

/// Consumes benchmarked values so dead-code elimination cannot drop the work
/// that produced them. The final sink value is reported at the end of a run.
class Blackhole {
public:
    void consume(std::uint64_t v) noexcept { sink_ += v; }
    std::uint64_t sink() const noexcept { return sink_; }

private:
    std::uint64_t sink_ = 0;
};

struct BenchResult {
    std::string algo;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<double> per_iter_means; // ns/op per measurement iteration
    double mean_ns = 0.0;
    double ci999_half_width = 0.0;
    std::uint64_t ops_total = 0; // measurement-phase invocations
};

/// Half-width of the two-sided 99.9% confidence interval over per-iteration
/// means: t.crit(df = m-1) * sample stddev / sqrt(m). Requires m >= 2.
double confidence_interval_999(std::span<const double> means);

enum class TableFormat { markdown, csv, json };

/// Renders results as a markdown grid (rows n, columns algorithm, cells
/// "mean +- ci" to the nearest tenth of a nanosecond), as CSV with columns
/// algo,n,k,mean_ns,ci999_ns,ops_total,iters, or as JSON.
std::string emit_table(std::span<const BenchResult> results, TableFormat format);

/// "15.73" -> "15.7"; nanosecond means are only meaningful to tenths.
std::string format_ns_tenths(double ns);

namespace detail {

// Throws if the monotonic clock cannot resolve 1us.
void check_clock_resolution();

inline std::uint64_t now_ns() {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now().time_since_epoch())
                             .count());
}

// Keeps the accumulated sink live across optimization.
inline void keep(std::uint64_t v) {
#if defined(__GNUC__) || defined(__clang__)
    asm volatile("" : "+r"(v));
#else
    volatile std::uint64_t hole = v;
    (void)hole;
#endif
}

void validate_config(const BenchConfig& cfg);
BenchResult summarize(std::string_view algo, std::uint64_t n, std::uint64_t k,
                      std::vector<double> per_iter_means, std::uint64_t ops_total);

} // namespace detail

/// Runs the full warmup + measurement schedule for one operation. `op` is
/// invoked as op(src) and must return a 64-bit digest of the sample it
/// produced, which is folded into the blackhole.
template <class Fn>
BenchResult run_benchmark(std::string_view algo, std::uint64_t n, std::uint64_t k,
                          const BenchConfig& cfg, Blackhole& blackhole, Fn&& op) {
    detail::validate_config(cfg);
    detail::check_clock_resolution();

    WordSource src(cfg.seed);

    // Size one batch to >= 100us so the two clock reads around it cost < 1%.
    std::uint64_t batch = 1;
    for (;;) {
        const std::uint64_t t0 = detail::now_ns();
        for (std::uint64_t b = 0; b < batch; ++b) blackhole.consume(op(src));
        const std::uint64_t elapsed = detail::now_ns() - t0;
        detail::keep(blackhole.sink());
        if (elapsed >= 100'000 || batch >= (std::uint64_t{1} << 32)) break;
        batch *= 2;
    }

    const auto run_iteration = [&](double secs, std::uint64_t& ops_out) -> double {
        const auto budget = std::uint64_t(secs * 1e9);
        std::uint64_t elapsed = 0;
        std::uint64_t ops = 0;
        while (elapsed < budget) {
            const std::uint64_t t0 = detail::now_ns();
            for (std::uint64_t b = 0; b < batch; ++b) blackhole.consume(op(src));
            elapsed += detail::now_ns() - t0;
            ops += batch;
            // The next batch reads what this one accumulated.
            src.perturb(blackhole.sink() & 1u);
            detail::keep(blackhole.sink());
        }
        ops_out = ops;
        return double(elapsed) / double(ops);
    };

    std::uint64_t discard = 0;
    for (std::uint32_t w = 0; w < cfg.warmup_iters; ++w) run_iteration(cfg.warmup_secs, discard);

    std::vector<double> means;
    means.reserve(cfg.measure_iters);
    std::uint64_t ops_total = 0;
    for (std::uint32_t m = 0; m < cfg.measure_iters; ++m) {
        std::uint64_t ops = 0;
        means.push_back(run_iteration(cfg.measure_secs, ops));
        ops_total += ops;
    }
    return detail::summarize(algo, n, k, std::move(means), ops_total);
}

} // namespace samplekit
