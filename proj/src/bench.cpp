#include "samplekit/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include <json.hpp>

#include "samplekit/stats.hpp"

namespace samplekit {

double confidence_interval_999(std::span<const double> means) {
    if (means.size() < 2)
        throw std::invalid_argument("confidence_interval_999: need at least 2 iteration means");
    const std::size_t m = means.size();
    double mean = 0.0;
    for (const double v : means) mean += v;
    mean /= double(m);
    double ss = 0.0;
    for (const double v : means) ss += (v - mean) * (v - mean);
    const double stddev = std::sqrt(ss / double(m - 1));
    const double t_crit = stats::student_t_two_sided_critical(0.999, m - 1);
    return t_crit * stddev / std::sqrt(double(m));
}

std::string format_ns_tenths(double ns) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", ns);
    return buf;
}

namespace detail {

void check_clock_resolution() {
    // The clock must tick at least every microsecond.
    std::uint64_t min_delta = ~std::uint64_t{0};
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = now_ns();
        std::uint64_t b = now_ns();
        while (b == a) b = now_ns();
        min_delta = std::min(min_delta, b - a);
        if (min_delta <= 1000) return;
    }
    throw std::runtime_error("benchmark clock resolution coarser than 1us (min step " +
                             std::to_string(min_delta) + "ns); results would be meaningless");
}

void validate_config(const BenchConfig& cfg) {
    if (cfg.warmup_iters < 1 || cfg.measure_iters < 1)
        throw std::invalid_argument("BenchConfig: iteration counts must be >= 1");
    if (!(cfg.warmup_secs > 0.0) || !(cfg.measure_secs > 0.0))
        throw std::invalid_argument("BenchConfig: iteration durations must be positive");
}

BenchResult summarize(std::string_view algo, std::uint64_t n, std::uint64_t k,
                      std::vector<double> per_iter_means, std::uint64_t ops_total) {
    BenchResult result;
    result.algo = std::string(algo);
    result.n = n;
    result.k = k;
    result.per_iter_means = std::move(per_iter_means);
    double sum = 0.0;
    for (const double v : result.per_iter_means) sum += v;
    result.mean_ns = sum / double(result.per_iter_means.size());
    result.ci999_half_width = result.per_iter_means.size() >= 2
                                  ? confidence_interval_999(result.per_iter_means)
                                  : 0.0;
    result.ops_total = ops_total;
    return result;
}

} // namespace detail

namespace {

std::string csv_table(std::span<const BenchResult> results) {
    std::string out = "algo,n,k,mean_ns,ci999_ns,ops_total,iters\n";
    char line[256];
    for (const BenchResult& r : results) {
        std::snprintf(line, sizeof line, "%s,%llu,%llu,%.17g,%.17g,%llu,%zu\n", r.algo.c_str(),
                      (unsigned long long)r.n, (unsigned long long)r.k, r.mean_ns,
                      r.ci999_half_width, (unsigned long long)r.ops_total,
                      r.per_iter_means.size());
        out += line;
    }
    return out;
}

std::string json_table(std::span<const BenchResult> results) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchResult& r : results) {
        rows.push_back({{"algo", r.algo},
                        {"n", r.n},
                        {"k", r.k},
                        {"mean_ns", r.mean_ns},
                        {"ci999_ns", r.ci999_half_width},
                        {"ops_total", r.ops_total},
                        {"iters", r.per_iter_means.size()},
                        {"per_iter_means_ns", r.per_iter_means}});
    }
    return rows.dump(2) + "\n";
}

std::string markdown_cell(const BenchResult& r) {
    // Tenth-of-a-nanosecond reporting, with sub-tenth intervals shown as <0.1.
    const std::string ci = r.ci999_half_width < 0.05 ? "<0.1"
                                                     : format_ns_tenths(r.ci999_half_width);
    return format_ns_tenths(r.mean_ns) + " ± " + ci;
}

std::string markdown_table(std::span<const BenchResult> results) {
    std::vector<std::string> algos;
    std::set<std::uint64_t> ns;
    for (const BenchResult& r : results) {
        if (std::find(algos.begin(), algos.end(), r.algo) == algos.end()) algos.push_back(r.algo);
        ns.insert(r.n);
    }
    std::map<std::pair<std::uint64_t, std::string>, const BenchResult*> cells;
    for (const BenchResult& r : results) cells.emplace(std::make_pair(r.n, r.algo), &r);

    std::string out = "| n |";
    for (const std::string& a : algos) out += " " + a + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < algos.size(); ++i) out += "---|";
    out += "\n";
    for (const std::uint64_t n : ns) {
        out += "| " + std::to_string(n) + " |";
        for (const std::string& a : algos) {
            const auto it = cells.find({n, a});
            out += it == cells.end() ? " |" : " " + markdown_cell(*it->second) + " |";
        }
        out += "\n";
    }
    return out;
}

} // namespace

std::string emit_table(std::span<const BenchResult> results, TableFormat format) {
    switch (format) {
        case TableFormat::csv: return csv_table(results);
        case TableFormat::json: return json_table(results);
        case TableFormat::markdown: return markdown_table(results);
    }
    throw std::invalid_argument("emit_table: unknown format");
}

} // namespace samplekit
