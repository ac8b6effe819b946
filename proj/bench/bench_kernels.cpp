// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "stickel/cyclotomic.hpp"
#include "stickel/gauss_sums.hpp"
#include "stickel/principality.hpp"
#include "stickel/regularity.hpp"

using namespace stickel;

namespace {

// g(q) for f = 1 is a dense p x q element; its square is the benchmark input.
BiCycInt sample(u64 p, u64 q) { return resolvent_form(p, q, 1); }

void BM_bicyc_mul_omp(benchmark::State& st) {
    const u64 p = static_cast<u64>(st.range(0)), q = static_cast<u64>(st.range(1));
    const BiCycInt a = sample(p, q), b = bicyc_mul(a, a);
    for (auto _ : st) benchmark::DoNotOptimize(bicyc_mul(a, b));
}

void BM_bicyc_mul_serial(benchmark::State& st) {
    const u64 p = static_cast<u64>(st.range(0)), q = static_cast<u64>(st.range(1));
    const BiCycInt a = sample(p, q), b = reference::bicyc_mul(a, a);
    for (auto _ : st) benchmark::DoNotOptimize(reference::bicyc_mul(a, b));
}

void BM_scan_omp(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(scan_irregular(static_cast<u64>(st.range(0))));
}

void BM_scan_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(reference::scan_irregular(static_cast<u64>(st.range(0))));
}

ProbeOptions probe_opts(benchmark::State& st) {
    ProbeOptions o;
    o.bound = static_cast<u64>(st.range(1));
    o.coeff_bound = 8;
    return o;
}

void BM_probe_omp(benchmark::State& st) {
    const auto o = probe_opts(st);
    for (auto _ : st) benchmark::DoNotOptimize(principal_norm_probe(static_cast<u64>(st.range(0)), o));
}

void BM_probe_serial(benchmark::State& st) {
    const auto o = probe_opts(st);
    for (auto _ : st) benchmark::DoNotOptimize(reference::principal_norm_probe(static_cast<u64>(st.range(0)), o));
}

}  // namespace

BENCHMARK(BM_bicyc_mul_omp)->Args({11, 23})->Args({23, 47})->Args({29, 59})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_bicyc_mul_serial)->Args({11, 23})->Args({23, 47})->Args({29, 59})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_scan_omp)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_scan_serial)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_probe_omp)->Args({5, 10000})->Args({7, 10000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_probe_serial)->Args({5, 10000})->Args({7, 10000})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
