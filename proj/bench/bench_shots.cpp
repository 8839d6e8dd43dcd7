// Parallel vs serial shot execution on a few representative programs.

#include <benchmark/benchmark.h>

#include "qsim/program.hpp"
#include "qsim/shots.hpp"

namespace {

constexpr const char *kBell = "h q[0];\ncx q[0], q[1];\nmeasure q[0];\nmeasure q[1];\n";

constexpr const char *kGhz5 = "h q[0];\ncx q[0], q[1];\ncx q[1], q[2];\ncx q[2], q[3];\n"
                              "cx q[3], q[4];\nmeasure q[0];\n";

constexpr const char *kSwap = "x q[2];\ncx q[1], q[2];\nh q[1];\nh q[2];\ncx q[1], q[2];\n"
                              "h q[1];\nh q[2];\ncx q[1], q[2];\nmeasure q[1];\nmeasure q[2];\n";

using Runner = qsim::ShotSummary (*)(std::span<const qsim::Statement>, std::size_t, std::uint64_t,
                                     std::size_t);

void run(benchmark::State &state, const char *source, Runner runner) {
    const auto statements = qsim::parse(source);
    const auto shots = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto summary = runner(statements, shots, 7, qsim::QuantumComputer::kDefaultQubits);
        benchmark::DoNotOptimize(summary.histogram);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Serial(benchmark::State &state, const char *source) {
    run(state, source, qsim::run_shots_serial);
}

void BM_Parallel(benchmark::State &state, const char *source) {
    run(state, source, qsim::run_shots);
}

} // namespace

BENCHMARK_CAPTURE(BM_Serial, bell_serial, kBell)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(BM_Parallel, bell_parallel, kBell)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(BM_Serial, ghz5_serial, kGhz5)->Arg(1000);
BENCHMARK_CAPTURE(BM_Parallel, ghz5_parallel, kGhz5)->Arg(1000);
BENCHMARK_CAPTURE(BM_Serial, swap_serial, kSwap)->Arg(1000);
BENCHMARK_CAPTURE(BM_Parallel, swap_parallel, kSwap)->Arg(1000);

BENCHMARK_MAIN();
