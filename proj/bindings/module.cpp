// Python bindings for the samplekit core: sources, samplers, verification,
// and the benchmark harness.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "samplekit/bench.hpp"
#include "samplekit/general.hpp"
#include "samplekit/registry.hpp"
#include "samplekit/small.hpp"
#include "samplekit/uniformity.hpp"
#include "samplekit/version.hpp"

namespace py = pybind11;
using namespace samplekit;

namespace {

const AlgoInfo& lookup(const std::string& name) {
    const AlgoInfo* algo = find_algorithm(name);
    if (algo == nullptr) throw std::invalid_argument("unknown algorithm: " + name);
    return *algo;
}

SampleFn as_sample_fn(const AlgoInfo& algo) {
    return [&algo](std::uint64_t n, std::uint64_t k, SourceRef src) {
        return algo.sample(n, k, src);
    };
}

} // namespace

PYBIND11_MODULE(samplekit, m) {
    m.doc() = "Random samples of k distinct integers from [0,n): constant-time "
              "pair/triple/quad samplers, compare-change sampling networks, reference "
              "algorithms, uniformity verification, and a benchmark harness.";
    m.attr("__version__") = SAMPLEKIT_VERSION;

    py::class_<WordSource>(m, "WordSource",
                           "SplitMix64 word source with Lemire bounded draws. Deterministic "
                           "for a fixed seed; not safe to share across threads.")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
             py::arg("gamma") = WordSource::default_gamma)
        .def("next_word", &WordSource::next_word)
        .def("next_below", &WordSource::next_below, py::arg("bound"))
        .def("next_unit", &WordSource::next_unit)
        .def_property_readonly("state", &WordSource::state)
        .def_property_readonly("gamma", &WordSource::gamma);

    m.def(
        "random_pair",
        [](std::uint64_t n, WordSource& src) { return random_pair(n, src); },
        py::arg("n"), py::arg("src"), "Uniform ordered pair of distinct integers from [0,n).");
    m.def(
        "random_triple",
        [](std::uint64_t n, WordSource& src) { return random_triple(n, src); },
        py::arg("n"), py::arg("src"));
    m.def(
        "random_four_tuple",
        [](std::uint64_t n, WordSource& src) { return random_four_tuple(n, src); },
        py::arg("n"), py::arg("src"));

    py::class_<CompareChangeNetwork>(m, "CompareChangeNetwork")
        .def_readonly("k", &CompareChangeNetwork::k)
        .def_property_readonly("step_count", &CompareChangeNetwork::step_count)
        .def_property_readonly("layers",
                               [](const CompareChangeNetwork& net) {
                                   py::list layers;
                                   for (const auto& layer : net.layers) {
                                       py::list steps;
                                       for (const auto& s : layer)
                                           steps.append(py::make_tuple(s.target, s.anchor));
                                       layers.append(steps);
                                   }
                                   return layers;
                               })
        .def("sample",
             [](const CompareChangeNetwork& net, std::uint64_t n, WordSource& src) {
                 return run_network(net, n, src);
             },
             py::arg("n"), py::arg("src"));

    m.def("build_network", &build_network, py::arg("k"),
          "Compare-change sampling network for arbitrary fixed k.");

    m.def(
        "sample",
        [](const std::string& algo, std::uint64_t n, std::uint64_t k, WordSource& src) {
            return lookup(algo).sample(n, k, src);
        },
        py::arg("algo"), py::arg("n"), py::arg("k"), py::arg("src"),
        "Sample by algorithm name: pair, triple, quad, network, pool, insertion, "
        "reservoir-r, reservoir-l, insertion-uo, reservoir-r-uo, reservoir-l-uo.");
    m.def("algorithms", [] {
        std::vector<std::string> names;
        for (const AlgoInfo& algo : algorithms()) names.push_back(algo.name);
        return names;
    });

    m.def(
        "shuffle",
        [](std::vector<std::uint64_t> values, WordSource& src) {
            shuffle(values, src);
            return values;
        },
        py::arg("values"), py::arg("src"), "Fisher-Yates shuffled copy of the input list.");

    py::class_<EnumerationReport>(m, "EnumerationReport")
        .def_readonly("n", &EnumerationReport::n)
        .def_readonly("k", &EnumerationReport::k)
        .def_readonly("input_count", &EnumerationReport::input_count)
        .def_readonly("expected_output_count", &EnumerationReport::expected_output_count)
        .def_readonly("distinct_output_count", &EnumerationReport::distinct_output_count)
        .def_readonly("invalid_output_count", &EnumerationReport::invalid_output_count)
        .def_readonly("missing_outputs_count", &EnumerationReport::missing_outputs_count)
        .def_readonly("duplicated_outputs", &EnumerationReport::duplicated_outputs)
        .def_readonly("bijection", &EnumerationReport::bijection)
        .def("__repr__", [](const EnumerationReport& r) {
            return "<EnumerationReport n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                   " bijection=" + (r.bijection ? "True" : "False") + ">";
        });

    py::class_<UniformityReport>(m, "UniformityReport")
        .def_readonly("categories", &UniformityReport::categories)
        .def_readonly("trials", &UniformityReport::trials)
        .def_readonly("chi2", &UniformityReport::chi2)
        .def_readonly("df", &UniformityReport::df)
        .def_readonly("p_value", &UniformityReport::p_value)
        .def_readonly("alpha", &UniformityReport::alpha)
        .def_readonly("pass_", &UniformityReport::pass)
        .def("__repr__", [](const UniformityReport& r) {
            return "<UniformityReport chi2=" + std::to_string(r.chi2) +
                   " p=" + std::to_string(r.p_value) + " pass=" + (r.pass ? "True" : "False") +
                   ">";
        });

    m.def(
        "enumerate_bijection",
        [](const std::string& algo, std::uint64_t n, std::uint64_t k, std::uint64_t guard) {
            return enumerate_bijection(as_sample_fn(lookup(algo)), n, k, guard);
        },
        py::arg("algo"), py::arg("n"), py::arg("k"), py::arg("guard") = 10'000'000,
        "Exhaustively prove (or refute) that the sampler maps its draw space "
        "bijectively onto the ordered distinct k-tuples.");

    m.def(
        "frequency_harness",
        [](const std::string& algo, std::uint64_t n, std::uint64_t k, std::uint64_t trials,
           std::uint64_t seed, std::optional<bool> ordered, double alpha) {
            const AlgoInfo& info = lookup(algo);
            return frequency_harness(as_sample_fn(info), n, k, trials, seed,
                                     ordered.value_or(info.order_uniform), alpha);
        },
        py::arg("algo"), py::arg("n"), py::arg("k"), py::arg("trials") = 1'000'000,
        py::arg("seed") = 42, py::arg("ordered") = std::nullopt, py::arg("alpha") = 0.001,
        "Chi-squared uniformity gate over ordered tuples or unordered combinations.");

    py::class_<BenchResult>(m, "BenchResult")
        .def_readonly("algo", &BenchResult::algo)
        .def_readonly("n", &BenchResult::n)
        .def_readonly("k", &BenchResult::k)
        .def_readonly("per_iter_means", &BenchResult::per_iter_means)
        .def_readonly("mean_ns", &BenchResult::mean_ns)
        .def_readonly("ci999_half_width", &BenchResult::ci999_half_width)
        .def_readonly("ops_total", &BenchResult::ops_total)
        .def("__repr__", [](const BenchResult& r) {
            return "<BenchResult " + r.algo + " n=" + std::to_string(r.n) + " " +
                   format_ns_tenths(r.mean_ns) + "ns/op>";
        });

    m.def(
        "run_benchmark",
        [](const std::string& algo, std::uint64_t n, std::uint64_t k, std::uint32_t warmup_iters,
           double warmup_secs, std::uint32_t measure_iters, double measure_secs,
           std::uint64_t seed, bool preallocated) {
            const AlgoInfo& info = lookup(algo);
            BenchConfig cfg;
            cfg.warmup_iters = warmup_iters;
            cfg.warmup_secs = warmup_secs;
            cfg.measure_iters = measure_iters;
            cfg.measure_secs = measure_secs;
            cfg.seed = seed;
            Blackhole blackhole;
            auto op = make_bench_op(info, n, info.fixed_k.value_or(k), preallocated);
            return run_benchmark(info.name, n, info.fixed_k.value_or(k), cfg, blackhole,
                                 std::move(op));
        },
        py::arg("algo"), py::arg("n"), py::arg("k") = 2, py::arg("warmup_iters") = 3,
        py::arg("warmup_secs") = 1.0, py::arg("measure_iters") = 5, py::arg("measure_secs") = 1.0,
        py::arg("seed") = 42, py::arg("preallocated") = true,
        "Mean ns/op with a 99.9% confidence half-width.");
}
