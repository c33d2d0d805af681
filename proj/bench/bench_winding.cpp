// Compares the serial reference winding kernel against the OpenMP one on the
// contour integrand of z*(exp(z)-1), the densest numeric loop in the engine.

#include <benchmark/benchmark.h>

#include "ddeq/growth.hpp"
#include "ddeq/parser.hpp"

namespace {

using namespace ddeq;

struct Setup {
    NumericContext ctx{256};
    ExpPoly f;
    CompiledExpPoly cf;
    CompiledExpPoly cfp;

    Setup()
        : f(lower_exppoly(*parse_expression("z*(exp(z)-1)"), Session{})),
          cf(f, ctx),
          cfp(f.derivative(), ctx) {}
};

Setup& setup() {
    static Setup s;
    return s;
}

void BM_WindingSerial(benchmark::State& state) {
    Setup& s = setup();
    Real r(40);
    for (auto _ : state) {
        WindingStats w = winding_sum_serial(s.cf, s.cfp, r,
                                            unsigned(state.range(0)), s.ctx);
        benchmark::DoNotOptimize(w.mean.re);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_WindingParallel(benchmark::State& state) {
    Setup& s = setup();
    Real r(40);
    for (auto _ : state) {
        WindingStats w = winding_sum_parallel(s.cf, s.cfp, r,
                                              unsigned(state.range(0)), s.ctx);
        benchmark::DoNotOptimize(w.mean.re);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_WindingSerial)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindingParallel)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
