// samplekit command-line tool: sample / bench / verify.
//
// Exit codes: 0 success (and verification pass), 1 verification fail,
// 2 usage or I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "samplekit/bench.hpp"
#include "samplekit/registry.hpp"
#include "samplekit/uniformity.hpp"
#include "samplekit/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t parse_seed(const std::string& text) {
    std::size_t pos = 0;
    const bool hex = text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(hex ? text.substr(2) : text, &pos, hex ? 16 : 10);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "expected a decimal or 0x-prefixed integer");
    }
    if (pos != (hex ? text.size() - 2 : text.size()))
        throw CLI::ValidationError("--seed", "expected a decimal or 0x-prefixed integer");
    return value;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

const samplekit::AlgoInfo& algo_or_throw(const std::string& name) {
    const samplekit::AlgoInfo* algo = samplekit::find_algorithm(name);
    if (algo == nullptr) throw std::invalid_argument("unknown algorithm: " + name);
    return *algo;
}

// Resolves the effective arity, warning when --k is ignored for a fixed-arity
// algorithm.
std::uint64_t effective_k(const samplekit::AlgoInfo& algo, std::optional<std::uint64_t> k) {
    if (algo.fixed_k) {
        if (k && *k != *algo.fixed_k)
            std::cerr << "warning: --k ignored for fixed-arity algorithm '" << algo.name
                      << "' (k=" << *algo.fixed_k << ")\n";
        return *algo.fixed_k;
    }
    if (!k) throw std::invalid_argument("--k is required for algorithm '" + algo.name + "'");
    return *k;
}

std::string header_line(const std::string& command, const std::string& detail) {
    return "# samplekit " SAMPLEKIT_VERSION " | " + command + " | " + detail;
}

struct SampleOptions {
    std::string algo;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    std::uint64_t count = 1;
    std::string seed_text = "42";
    std::string format = "csv";
};

int run_sample(const SampleOptions& opt) {
    const samplekit::AlgoInfo& algo = algo_or_throw(opt.algo);
    const std::uint64_t k = effective_k(algo, opt.k);
    if (k == 0 || k > opt.n) throw std::invalid_argument("need 1 <= k <= n");
    const std::uint64_t seed = parse_seed(opt.seed_text);

    std::ostringstream detail;
    detail << "algo=" << algo.name << " n=" << opt.n << " k=" << k << " count=" << opt.count
           << " seed=" << seed << " format=" << opt.format;
    const std::string header = header_line("sample", detail.str());

    samplekit::WordSource src(seed);
    if (opt.format == "csv") {
        std::cout << header << "\n";
        std::vector<std::uint64_t> out(k);
        for (std::uint64_t c = 0; c < opt.count; ++c) {
            algo.sample_into(opt.n, k, src, out);
            for (std::size_t i = 0; i < out.size(); ++i)
                std::cout << (i ? "," : "") << out[i];
            std::cout << "\n";
        }
    } else if (opt.format == "json") {
        std::cerr << header << "\n";
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint64_t c = 0; c < opt.count; ++c)
            rows.push_back(algo.sample(opt.n, k, src));
        std::cout << rows.dump() << "\n";
    } else {
        throw std::invalid_argument("unknown sample format: " + opt.format);
    }
    return kExitOk;
}

struct BenchOptions {
    std::string algos = "pair";
    std::string n_list = "16,64,256,1024";
    std::optional<std::uint64_t> k;
    samplekit::BenchConfig cfg;
    std::string seed_text = "42";
    std::string format = "markdown";
    std::string shape = "fill";
    std::string out_path;
};

int run_bench(const BenchOptions& opt) {
    const std::vector<std::string> algo_names = split_list(opt.algos);
    if (algo_names.empty()) throw std::invalid_argument("--algos list is empty");
    std::vector<std::uint64_t> ns;
    for (const std::string& item : split_list(opt.n_list)) ns.push_back(std::stoull(item));
    if (ns.empty()) throw std::invalid_argument("--n-list is empty");
    if (opt.shape != "fill" && opt.shape != "alloc")
        throw std::invalid_argument("--shape must be fill or alloc");

    samplekit::TableFormat format = samplekit::TableFormat::markdown;
    if (opt.format == "csv")
        format = samplekit::TableFormat::csv;
    else if (opt.format == "json")
        format = samplekit::TableFormat::json;
    else if (opt.format != "markdown")
        throw std::invalid_argument("unknown bench format: " + opt.format);

    samplekit::BenchConfig cfg = opt.cfg;
    cfg.seed = parse_seed(opt.seed_text);

    // Validate the whole grid before any measurement or output.
    struct Cell {
        const samplekit::AlgoInfo* algo;
        std::uint64_t n;
        std::uint64_t k;
    };
    std::vector<Cell> grid;
    for (const std::string& name : algo_names) {
        const samplekit::AlgoInfo& algo = algo_or_throw(name);
        const std::uint64_t k = effective_k(algo, opt.k);
        for (const std::uint64_t n : ns) {
            if (k == 0 || k > n)
                throw std::invalid_argument("need 1 <= k <= n for algorithm '" + name +
                                            "' at n=" + std::to_string(n));
            grid.push_back({&algo, n, k});
        }
    }

    std::ostringstream detail;
    detail << "algos=" << opt.algos << " n-list=" << opt.n_list << " shape=" << opt.shape
           << " warmup=" << cfg.warmup_iters << "x" << cfg.warmup_secs << "s"
           << " measure=" << cfg.measure_iters << "x" << cfg.measure_secs << "s"
           << " seed=" << cfg.seed << " ci=student-t-99.9-flat";
    const std::string header = header_line("bench", detail.str());
    std::cerr << header << "\n";

    samplekit::Blackhole blackhole;
    std::vector<samplekit::BenchResult> results;
    for (const Cell& cell : grid) {
        std::cerr << "# running " << cell.algo->name << " n=" << cell.n << " k=" << cell.k
                  << " ...\n";
        auto op = samplekit::make_bench_op(*cell.algo, cell.n, cell.k, opt.shape == "fill");
        results.push_back(samplekit::run_benchmark(cell.algo->name, cell.n, cell.k, cfg,
                                                   blackhole, std::move(op)));
    }

    std::string table = samplekit::emit_table(results, format);
    if (format != samplekit::TableFormat::json) table = header + "\n" + table;

    if (opt.out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << table) || !file.flush())
            throw std::runtime_error("failed to write " + opt.out_path);
    }
    std::cerr << "# blackhole sink: " << blackhole.sink() << "\n";
    return kExitOk;
}

struct VerifyOptions {
    std::string algo;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    std::string mode = "exhaustive";
    std::uint64_t trials = 1'000'000;
    double alpha = 0.001;
    std::string seed_text = "42";
    std::optional<bool> ordered;
};

int run_verify(const VerifyOptions& opt) {
    const samplekit::AlgoInfo& algo = algo_or_throw(opt.algo);
    const std::uint64_t k = effective_k(algo, opt.k);
    if (k == 0 || k > opt.n) throw std::invalid_argument("need 1 <= k <= n");
    const std::uint64_t seed = parse_seed(opt.seed_text);
    // Order-uniform algorithms default to the stronger ordered-category test.
    const bool ordered = opt.ordered.value_or(algo.order_uniform);

    const samplekit::SampleFn fn = [&algo](std::uint64_t n, std::uint64_t kk,
                                           samplekit::SourceRef src) {
        return algo.sample(n, kk, src);
    };

    std::ostringstream detail;
    detail << "algo=" << algo.name << " n=" << opt.n << " k=" << k << " mode=" << opt.mode
           << " trials=" << opt.trials << " alpha=" << opt.alpha << " seed=" << seed
           << " ordered=" << (ordered ? "true" : "false");
    std::cout << header_line("verify", detail.str()) << "\n";

    if (opt.mode == "exhaustive") {
        const samplekit::EnumerationReport report = samplekit::enumerate_bijection(fn, opt.n, k);
        std::cout << "inputs: " << report.input_count
                  << "\ndistinct outputs: " << report.distinct_output_count
                  << "\nexpected outputs: " << report.expected_output_count
                  << "\nduplicates: " << report.duplicated_outputs.size()
                  << (report.duplicated_outputs.size() >= 16 ? "+" : "")
                  << "\ninvalid: " << report.invalid_output_count
                  << "\nmissing: " << report.missing_outputs_count
                  << "\nbijection: " << (report.bijection ? "yes" : "NO") << "\n";
        return report.bijection ? kExitOk : kExitVerifyFail;
    }
    if (opt.mode == "chi2") {
        const samplekit::UniformityReport report =
            samplekit::frequency_harness(fn, opt.n, k, opt.trials, seed, ordered, opt.alpha);
        std::cout << "categories: " << report.categories << "\ntrials: " << report.trials
                  << "\nchi2: " << report.chi2 << "\ndf: " << report.df
                  << "\np-value: " << report.p_value << "\nalpha: " << report.alpha
                  << "\nresult: " << (report.pass ? "pass" : "FAIL") << "\n";
        return report.pass ? kExitOk : kExitVerifyFail;
    }
    throw std::invalid_argument("unknown verify mode: " + opt.mode);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"samplekit: random samples of k distinct integers from [0,n)"};
    app.require_subcommand(1);

    SampleOptions sample_opt;
    CLI::App* sample = app.add_subcommand("sample", "emit samples, one per line");
    sample->add_option("--algo", sample_opt.algo, "algorithm name")->required();
    sample->add_option("--n", sample_opt.n, "domain size")->required();
    sample->add_option("--k", sample_opt.k, "sample size (general algorithms)");
    sample->add_option("--count", sample_opt.count, "number of samples");
    sample->add_option("--seed", sample_opt.seed_text, "seed, decimal or 0x-prefixed");
    sample->add_option("--format", sample_opt.format, "csv|json");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "microbenchmark algorithms");
    bench->add_option("--algos", bench_opt.algos, "comma-separated algorithm names");
    bench->add_option("--n-list", bench_opt.n_list, "comma-separated domain sizes");
    bench->add_option("--k", bench_opt.k, "sample size (general algorithms)");
    bench->add_option("--warmup-iters", bench_opt.cfg.warmup_iters, "warmup iterations");
    bench->add_option("--warmup-secs", bench_opt.cfg.warmup_secs, "seconds per warmup iteration");
    bench->add_option("--measure-iters", bench_opt.cfg.measure_iters, "measurement iterations");
    bench->add_option("--measure-secs", bench_opt.cfg.measure_secs,
                      "seconds per measurement iteration");
    bench->add_option("--seed", bench_opt.seed_text, "seed, decimal or 0x-prefixed");
    bench->add_option("--format", bench_opt.format, "markdown|csv|json");
    bench->add_option("--shape", bench_opt.shape,
                      "fill: reuse a preallocated buffer; alloc: allocate per call");
    bench->add_option("--out", bench_opt.out_path, "write the table to a file");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check uniformity claims");
    verify->add_option("--algo", verify_opt.algo, "algorithm name")->required();
    verify->add_option("--n", verify_opt.n, "domain size")->required();
    verify->add_option("--k", verify_opt.k, "sample size (general algorithms)");
    verify->add_option("--mode", verify_opt.mode, "exhaustive|chi2");
    verify->add_option("--trials", verify_opt.trials, "chi2 trials");
    verify->add_option("--alpha", verify_opt.alpha, "chi2 significance level");
    verify->add_option("--seed", verify_opt.seed_text, "seed, decimal or 0x-prefixed");
    verify->add_option("--ordered", verify_opt.ordered,
                       "bin by ordered tuple (default: algorithm's order claim)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sample->parsed()) return run_sample(sample_opt);
        if (bench->parsed()) return run_bench(bench_opt);
        if (verify->parsed()) return run_verify(verify_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
