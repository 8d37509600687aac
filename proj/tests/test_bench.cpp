#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "samplekit/bench.hpp"
#include "samplekit/registry.hpp"
#include "samplekit/stats.hpp"

using namespace samplekit;

TEST_SUITE_BEGIN("bench");

TEST_CASE("student-t critical values match standard tables") {
    CHECK(stats::student_t_two_sided_critical(0.999, 1) == doctest::Approx(636.619).epsilon(0.002));
    CHECK(stats::student_t_two_sided_critical(0.999, 2) == doctest::Approx(31.599).epsilon(0.002));
    CHECK(stats::student_t_two_sided_critical(0.999, 4) == doctest::Approx(8.610).epsilon(0.002));
    CHECK(stats::student_t_two_sided_critical(0.999, 9) == doctest::Approx(4.781).epsilon(0.002));
    CHECK(stats::student_t_two_sided_critical(0.999, 30) == doctest::Approx(3.646).epsilon(0.002));
    CHECK(stats::student_t_two_sided_critical(0.95, 10) == doctest::Approx(2.228).epsilon(0.002));
}

TEST_CASE("confidence interval over iteration means") {
    SUBCASE("constant means have zero width") {
        const std::vector<double> means{10, 10, 10};
        CHECK(confidence_interval_999(means) == 0.0);
    }
    SUBCASE("two means: width is t-crit times unit standard error") {
        // stddev([9,11]) = sqrt(2), so half-width = t(df=1) * sqrt(2)/sqrt(2).
        const std::vector<double> means{9, 11};
        CHECK(confidence_interval_999(means) ==
              doctest::Approx(stats::student_t_two_sided_critical(0.999, 1)).epsilon(1e-9));
    }
    SUBCASE("an outlier strictly widens the interval") {
        const std::vector<double> flat{10, 10, 10, 10, 10};
        const std::vector<double> bumped{10, 10, 10, 10, 12};
        CHECK(confidence_interval_999(bumped) > confidence_interval_999(flat));
    }
    SUBCASE("fewer than two means is an error") {
        const std::vector<double> one{10};
        CHECK_THROWS_AS(confidence_interval_999(one), std::invalid_argument);
    }
}

TEST_CASE("nanosecond means are reported to tenths") {
    CHECK(format_ns_tenths(15.73) == "15.7");
    CHECK(format_ns_tenths(15.78) == "15.8");
    CHECK(format_ns_tenths(1209.94) == "1209.9");
}

TEST_CASE("config validation") {
    BenchConfig cfg;
    cfg.warmup_iters = 0;
    CHECK_THROWS_AS(detail::validate_config(cfg), std::invalid_argument);
    cfg = BenchConfig{};
    cfg.measure_secs = 0.0;
    CHECK_THROWS_AS(detail::validate_config(cfg), std::invalid_argument);
    CHECK_NOTHROW(detail::validate_config(BenchConfig{}));
}

TEST_CASE("summarize computes the mean of iteration means") {
    BenchResult r = detail::summarize("x", 8, 2, {10, 10, 10, 10, 10}, 500);
    CHECK(r.mean_ns == 10.0);
    CHECK(r.ci999_half_width == 0.0);
    CHECK(r.ops_total == 500);
    CHECK(r.per_iter_means.size() == 5);
}

TEST_CASE("emit_table") {
    BenchResult r = detail::summarize("pair", 16, 2, {15.6, 15.8}, 1000);
    SUBCASE("csv: header-only when empty, exact column order otherwise") {
        CHECK(emit_table({}, TableFormat::csv) == "algo,n,k,mean_ns,ci999_ns,ops_total,iters\n");
        const std::string csv = emit_table(std::vector<BenchResult>{r}, TableFormat::csv);
        std::istringstream lines(csv);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        CHECK(header == "algo,n,k,mean_ns,ci999_ns,ops_total,iters");
        CHECK(row.rfind("pair,16,2,", 0) == 0);
        CHECK(row.substr(row.size() - 7) == ",1000,2");
    }
    SUBCASE("csv round-trips the result fields losslessly") {
        const std::string csv = emit_table(std::vector<BenchResult>{r}, TableFormat::csv);
        std::istringstream lines(csv);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        std::vector<std::string> fields;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        REQUIRE(fields.size() == 7);
        CHECK(fields[0] == r.algo);
        CHECK(std::stoull(fields[1]) == r.n);
        CHECK(std::stoull(fields[2]) == r.k);
        CHECK(std::stod(fields[3]) == r.mean_ns);
        CHECK(std::stod(fields[4]) == r.ci999_half_width);
        CHECK(std::stoull(fields[5]) == r.ops_total);
        CHECK(std::stoull(fields[6]) == r.per_iter_means.size());
    }
    SUBCASE("markdown rounds to tenths") {
        const std::string md = emit_table(std::vector<BenchResult>{r}, TableFormat::markdown);
        CHECK(md.find("| n | pair |") != std::string::npos);
        CHECK(md.find("15.7 ±") != std::string::npos);
    }
    SUBCASE("markdown grid keys rows by n and columns by algorithm") {
        const std::vector<BenchResult> grid{
            detail::summarize("pair", 16, 2, {10.0, 10.0}, 10),
            detail::summarize("pool", 16, 2, {50.0, 50.0}, 10),
            detail::summarize("pair", 64, 2, {11.0, 11.0}, 10),
            detail::summarize("pool", 64, 2, {90.0, 90.0}, 10),
        };
        const std::string md = emit_table(grid, TableFormat::markdown);
        CHECK(md.find("| n | pair | pool |") != std::string::npos);
        CHECK(md.find("| 16 |") != std::string::npos);
        CHECK(md.find("| 64 |") != std::string::npos);
        CHECK(md.find("90.0") != std::string::npos);
    }
    SUBCASE("json carries every field") {
        const std::string text = emit_table(std::vector<BenchResult>{r}, TableFormat::json);
        const nlohmann::json parsed = nlohmann::json::parse(text);
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0]["algo"] == "pair");
        CHECK(parsed[0]["n"] == 16);
        CHECK(parsed[0]["mean_ns"].get<double>() == r.mean_ns);
        CHECK(parsed[0]["per_iter_means_ns"].size() == 2);
    }
}

TEST_CASE("run_benchmark smoke: sane means, enough invocations") {
    BenchConfig cfg;
    cfg.warmup_iters = 1;
    cfg.warmup_secs = 0.02;
    cfg.measure_iters = 2;
    cfg.measure_secs = 0.05;
    Blackhole blackhole;
    const AlgoInfo* pair = find_algorithm("pair");
    REQUIRE(pair != nullptr);
    const BenchResult r = run_benchmark("pair", 16, 2, cfg, blackhole,
                                        make_bench_op(*pair, 16, 2, true));
    CHECK(r.mean_ns > 0.1);
    CHECK(r.mean_ns < 100'000.0);
    CHECK(r.per_iter_means.size() == 2);
    // ns-scale op timed for 0.05s twice: must reach far beyond 1us-granularity counts.
    CHECK(r.ops_total >= 2 * 50'000);
    CHECK(r.ci999_half_width >= 0.0);
}

TEST_CASE("blackhole accumulates") {
    Blackhole bh;
    bh.consume(3);
    bh.consume(4);
    CHECK(bh.sink() == 7);
}

TEST_SUITE_END();
