#pragma once
/*
 * Mechanical verification of distributional claims.
 *
 * enumerate_bijection drives a sampler with every possible draw tuple exactly
 * once and checks the outputs form a bijection onto the ordered distinct
 * k-tuples; that is an exact, exhaustive uniformity proof at small (n, k).
 * frequency_harness is the statistical fallback: repeated sampling binned
 * into ordered or unordered categories, gated with a chi-squared test.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "samplekit/source.hpp"

namespace samplekit {

/// Replays a fixed script of bounded draws and checks the requesting
/// algorithm asks for the expected bound at every step, so enumeration also
/// pins each algorithm's draw schedule. In recording mode (no script) it
/// returns 0 for every draw and captures the bounds requested.
/// Word and unit draws are rejected: enumeration covers bounded-draw
/// algorithms only.
class ScriptedSource {
public:
    ScriptedSource() = default; // recording mode
    ScriptedSource(std::vector<std::uint64_t> draws, std::vector<std::uint64_t> expected_bounds);

    std::uint64_t next_below(std::uint64_t bound);
    [[noreturn]] std::uint64_t next_word();
    [[noreturn]] double next_unit();

    const std::vector<std::uint64_t>& recorded_bounds() const noexcept { return recorded_; }
    std::size_t draws_consumed() const noexcept { return cursor_; }

private:
    bool recording_ = true;
    std::size_t cursor_ = 0;
    std::vector<std::uint64_t> draws_;
    std::vector<std::uint64_t> expected_bounds_;
    std::vector<std::uint64_t> recorded_;
};

static_assert(random_source<ScriptedSource>);

/// Samples k values from [0,n) using the given source. The type-erased shape
/// lets verification drive any algorithm with scripted or counted sources.
using SampleFn =
    std::function<std::vector<std::uint64_t>(std::uint64_t n, std::uint64_t k, SourceRef src)>;

struct EnumerationReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t input_count = 0;           // product of the draw bounds
    std::uint64_t expected_output_count = 0; // n(n-1)...(n-k+1)
    std::uint64_t distinct_output_count = 0; // distinct valid tuples produced
    std::uint64_t invalid_output_count = 0;  // out-of-range or repeated values
    std::uint64_t missing_outputs_count = 0;
    std::vector<std::vector<std::uint64_t>> duplicated_outputs; // capped sample
    bool bijection = false;
};

/// Exhaustively enumerates the sampler's draw-tuple space. The sampler's
/// bound schedule is probed with a recording source first and must not depend
/// on the drawn values. Throws if the space exceeds `guard` tuples.
EnumerationReport enumerate_bijection(const SampleFn& algo, std::uint64_t n, std::uint64_t k,
                                      std::uint64_t guard = 10'000'000);

struct UniformityReport {
    std::uint64_t categories = 0;
    std::uint64_t trials = 0;
    double chi2 = 0.0;
    std::uint64_t df = 0;
    double p_value = 0.0;
    double alpha = 0.0;
    bool pass = false;
};

/// Chi-squared goodness of fit against the uniform distribution over the
/// observed categories. Requires expected count >= 5 per category.
UniformityReport chi_squared_uniform(std::span<const std::uint64_t> observed, double alpha);

/// Samples `trials` times and bins outputs by ordered tuple (rank among the
/// n!/(n-k)! permutations) or, when `ordered` is false, by unordered
/// combination - required for samplers whose output order is deterministic.
UniformityReport frequency_harness(const SampleFn& algo, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t trials, std::uint64_t seed, bool ordered,
                                   double alpha);

namespace detail {
// Category index helpers, exposed for tests.
std::uint64_t rank_ordered_tuple(std::span<const std::uint64_t> tuple, std::uint64_t n);
std::uint64_t rank_combination(std::span<const std::uint64_t> tuple);
std::uint64_t permutation_count(std::uint64_t n, std::uint64_t k);
std::uint64_t combination_count(std::uint64_t n, std::uint64_t k);
} // namespace detail

} // namespace samplekit
