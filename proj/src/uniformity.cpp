#include "samplekit/uniformity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "samplekit/stats.hpp"

namespace samplekit {

ScriptedSource::ScriptedSource(std::vector<std::uint64_t> draws,
                               std::vector<std::uint64_t> expected_bounds)
    : recording_(false), draws_(std::move(draws)), expected_bounds_(std::move(expected_bounds)) {
    if (draws_.size() != expected_bounds_.size())
        throw std::invalid_argument("ScriptedSource: draws and bounds must have equal length");
}

std::uint64_t ScriptedSource::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("ScriptedSource: bound must be positive");
    if (recording_) {
        recorded_.push_back(bound);
        ++cursor_;
        return 0;
    }
    if (cursor_ >= draws_.size())
        throw std::logic_error("ScriptedSource: more draws requested than scripted");
    if (bound != expected_bounds_[cursor_])
        throw std::logic_error("ScriptedSource: bound " + std::to_string(bound) +
                               " at draw " + std::to_string(cursor_) + " does not match schedule " +
                               std::to_string(expected_bounds_[cursor_]));
    const std::uint64_t v = draws_[cursor_++];
    if (v >= bound) throw std::logic_error("ScriptedSource: scripted draw out of range");
    return v;
}

std::uint64_t ScriptedSource::next_word() {
    throw std::logic_error("ScriptedSource: raw word draws are not scriptable");
}

double ScriptedSource::next_unit() {
    throw std::logic_error("ScriptedSource: unit draws are not scriptable");
}

namespace {

constexpr std::size_t kDuplicateReportCap = 16;

// Packed base-n key for an output tuple; fits easily at enumeration scale.
std::uint64_t pack_tuple(std::span<const std::uint64_t> tuple, std::uint64_t n) {
    std::uint64_t key = 0;
    for (const std::uint64_t v : tuple) key = key * n + v;
    return key;
}

std::vector<std::uint64_t> unpack_tuple(std::uint64_t key, std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> tuple(k);
    for (std::uint64_t i = k; i-- > 0;) {
        tuple[i] = key % n;
        key /= n;
    }
    return tuple;
}

bool valid_tuple(std::span<const std::uint64_t> tuple, std::uint64_t n, std::uint64_t k) {
    if (tuple.size() != k) return false;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= n) return false;
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j]) return false;
    }
    return true;
}

} // namespace

namespace detail {

std::uint64_t permutation_count(std::uint64_t n, std::uint64_t k) {
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < k; ++i) count *= n - i;
    return count;
}

std::uint64_t combination_count(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t count = 1;
    for (std::uint64_t i = 1; i <= k; ++i) count = count * (n - k + i) / i;
    return count;
}

std::uint64_t rank_ordered_tuple(std::span<const std::uint64_t> tuple, std::uint64_t n) {
    // Mixed-radix rank with digit i in [0, n-i): each value's rank among the
    // elements not used by earlier positions.
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        std::uint64_t reduced = tuple[i];
        for (std::size_t j = 0; j < i; ++j)
            if (tuple[j] < tuple[i]) --reduced;
        rank = rank * (n - i) + reduced;
    }
    return rank;
}

std::uint64_t rank_combination(std::span<const std::uint64_t> tuple) {
    // Combinatorial number system (colex): rank = sum C(c_i, i+1) over the
    // ascending combination c_0 < c_1 < ...
    std::vector<std::uint64_t> sorted(tuple.begin(), tuple.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank += combination_count(sorted[i], i + 1);
    return rank;
}

} // namespace detail

EnumerationReport enumerate_bijection(const SampleFn& algo, std::uint64_t n, std::uint64_t k,
                                      std::uint64_t guard) {
    if (k == 0 || k > n) throw std::invalid_argument("enumerate_bijection: need 1 <= k <= n");

    // Probe the draw schedule; it must not depend on the drawn values.
    ScriptedSource recorder;
    algo(n, k, SourceRef(recorder));
    const std::vector<std::uint64_t> schedule = recorder.recorded_bounds();

    std::uint64_t input_count = 1;
    for (const std::uint64_t bound : schedule) {
        if (bound == 0 || input_count > guard / bound)
            throw std::invalid_argument(
                "enumerate_bijection: draw space exceeds the enumeration guard; "
                "use the chi-squared harness instead");
        input_count *= bound;
    }

    EnumerationReport report;
    report.n = n;
    report.k = k;
    report.input_count = input_count;
    report.expected_output_count = detail::permutation_count(n, k);

    std::unordered_map<std::uint64_t, std::uint64_t> tally;
    tally.reserve(input_count);

    std::vector<std::uint64_t> draws(schedule.size(), 0);
    for (std::uint64_t step = 0; step < input_count; ++step) {
        ScriptedSource replay(draws, schedule);
        const std::vector<std::uint64_t> out = algo(n, k, SourceRef(replay));
        if (replay.draws_consumed() != schedule.size())
            throw std::logic_error("enumerate_bijection: draw count varied across inputs");
        if (!valid_tuple(out, n, k))
            ++report.invalid_output_count;
        else
            ++tally[pack_tuple(out, n)];

        // Odometer increment over the mixed-radix draw space.
        for (std::size_t pos = draws.size(); pos-- > 0;) {
            if (++draws[pos] < schedule[pos]) break;
            draws[pos] = 0;
        }
    }

    report.distinct_output_count = tally.size();
    for (const auto& [key, count] : tally) {
        if (count > 1 && report.duplicated_outputs.size() < kDuplicateReportCap)
            report.duplicated_outputs.push_back(unpack_tuple(key, n, k));
    }
    std::sort(report.duplicated_outputs.begin(), report.duplicated_outputs.end());
    report.missing_outputs_count = report.expected_output_count - report.distinct_output_count;
    report.bijection = report.duplicated_outputs.empty() && report.invalid_output_count == 0 &&
                       report.missing_outputs_count == 0 &&
                       report.input_count == report.expected_output_count;
    return report;
}

UniformityReport chi_squared_uniform(std::span<const std::uint64_t> observed, double alpha) {
    if (observed.size() < 2)
        throw std::invalid_argument("chi_squared_uniform: need at least 2 categories");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("chi_squared_uniform: alpha must be in (0,1)");

    std::uint64_t trials = 0;
    for (const std::uint64_t count : observed) trials += count;
    const double expected = double(trials) / double(observed.size());
    if (expected < 5.0)
        throw std::invalid_argument(
            "chi_squared_uniform: expected count per category below 5; run more trials");

    double chi2 = 0.0;
    for (const std::uint64_t count : observed) {
        const double diff = double(count) - expected;
        chi2 += diff * diff / expected;
    }

    UniformityReport report;
    report.categories = observed.size();
    report.trials = trials;
    report.chi2 = chi2;
    report.df = observed.size() - 1;
    report.p_value = stats::chi_squared_survival(chi2, report.df);
    report.alpha = alpha;
    report.pass = report.p_value >= alpha;
    return report;
}

UniformityReport frequency_harness(const SampleFn& algo, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t trials, std::uint64_t seed, bool ordered,
                                   double alpha) {
    if (k == 0 || k > n) throw std::invalid_argument("frequency_harness: need 1 <= k <= n");
    const std::uint64_t categories =
        ordered ? detail::permutation_count(n, k) : detail::combination_count(n, k);
    if (categories < 2) throw std::invalid_argument("frequency_harness: need >= 2 categories");
    if (trials / categories < 5)
        throw std::invalid_argument(
            "frequency_harness: fewer than 5 expected per category; run more trials");

    std::vector<std::uint64_t> counts(categories, 0);
    WordSource src(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::vector<std::uint64_t> out = algo(n, k, SourceRef(src));
        if (!valid_tuple(out, n, k))
            throw std::logic_error("frequency_harness: sampler produced an invalid tuple");
        const std::uint64_t idx =
            ordered ? detail::rank_ordered_tuple(out, n) : detail::rank_combination(out);
        ++counts[idx];
    }
    return chi_squared_uniform(counts, alpha);
}

} // namespace samplekit
