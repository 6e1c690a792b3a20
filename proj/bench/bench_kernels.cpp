// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Scan
//
// Each pair runs the same inputs; arg 0 is serial, 1 is parallel.

#include "apdtm/bvp_solver.hpp"
#include "apdtm/cli.hpp"
#include "apdtm/eig_solver.hpp"
#include "apdtm/reference_exact.hpp"

#include <benchmark/benchmark.h>

using namespace apdtm;
using R = Rational;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

const EigProblem kRobin{unit_interval(), R(1), R(1), R(1), R(-1), AlphaParam(R(1, 2)), 20};

BvpProblem dirichlet(std::size_t order) {
    return BvpProblem{LinearOde2{R(0), R(1), {}},
                      {Endpoint::left, R(1), R(0), R(0)},
                      {Endpoint::right, R(1), R(0), R(1)},
                      AlphaParam(R(1, 2)),
                      unit_interval(),
                      order};
}

void ScanCharacteristicPolynomial(benchmark::State& state) {
    const LambdaPoly det = characteristic_det(characteristic_entries(kRobin));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_real_roots(det, 0.0, 500.0, static_cast<int>(state.range(1)), 1e-12, mode(state)));
    }
    label(state);
}
BENCHMARK(ScanCharacteristicPolynomial)->ArgsProduct({{0, 1}, {10'000, 1'000'000}})->Unit(benchmark::kMillisecond);

void ScanExactCharacteristic(benchmark::State& state) {
    const exact::ExactCharFn robin{1, 1, 1, -1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::exact_eigenvalues(robin, 0.1, 60.0, 1'000'000, 1e-13, mode(state)));
    }
    label(state);
}
BENCHMARK(ScanExactCharacteristic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void SolveEig(benchmark::State& state) {
    EigOptions opt;
    opt.lambda_hi = 200.0;
    opt.exec = mode(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_eig(kRobin, opt));
    }
    label(state);
}
BENCHMARK(SolveEig)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BvpErrorReport(benchmark::State& state) {
    const BvpSolution sol = solve_bvp(dirichlet(24));
    auto oracle = [](double x) { return exact::dirichlet_solution(1.0, x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(error_report(sol, oracle, 2001, mode(state)));
    }
    label(state);
}
BENCHMARK(BvpErrorReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Sweeps always run their points in parallel; this measures end-to-end cost.
void OrderSweep(benchmark::State& state) {
    const BvpProblem problem = dirichlet(16);
    std::vector<std::size_t> orders;
    for (std::size_t n = 2; n <= 24; ++n) orders.push_back(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::order_sweep(problem, orders, 101));
    }
}
BENCHMARK(OrderSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
