#include <benchmark/benchmark.h>

#include <vector>

#include "lattes/dynamics.hpp"

using namespace lattes;

namespace {

QuadInt g(long a, long b) { return QuadInt{RingId::gaussian, a, b}; }

void BM_EndoFromQuadInt(benchmark::State& state) {
    Curve c = Curve::gaussian_default();
    for (auto _ : state) {
        Endo e = endo_from_quadint(c, g(2, 1));
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EndoFromQuadInt);

void BM_EndoSquare(benchmark::State& state) {
    Curve c = Curve::gaussian_default();
    Endo e = endo_from_quadint(c, g(2, 1));
    for (auto _ : state) {
        Endo s = endo_compose(c, e, e);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_EndoSquare);

void BM_LattesSquare(benchmark::State& state) {
    Curve c = Curve::gaussian_default();
    RatFunc m = lattes::lattes(c, g(2, 1)).map;
    for (auto _ : state) {
        RatFunc s = rf_compose(m, m);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_LattesSquare);

void BM_DecideDiagonal(benchmark::State& state) {
    for (auto _ : state) {
        Verdict v = decide_diagonal(g(2, 1), g(1, -2));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DecideDiagonal);

void BM_PolyGcdPlanted(benchmark::State& state) {
    RingId r = RingId::gaussian;
    Poly common = Poly::from_coeffs(
        r, {KNum{r, 3, 0}, KNum{r, 0, 0}, KNum{r, 1, 0}});
    Poly f = common;
    Poly h = common;
    for (long k = 1; k <= 12; ++k) {
        Poly lin = Poly::from_coeffs(r, {KNum{r, k, 0}, KNum{r, 1, 0}});
        if (k % 2 == 0) {
            f = f * lin;
        } else {
            h = h * lin;
        }
    }
    for (auto _ : state) {
        Poly d = poly_gcd(f, h);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_PolyGcdPlanted);

void BM_VerifySymbolicP1(benchmark::State& state) {
    Curve c = Curve::gaussian_default();
    for (auto _ : state) {
        SymbolicWorkspace ws;
        VerifyOutcome o =
            verify_pair_symbolic(Level::p1, c, g(2, 1), g(1, -2), 2, 0,
                                 kDefaultDegreeBudget, &ws);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_VerifySymbolicP1);

}  // namespace

BENCHMARK_MAIN();
