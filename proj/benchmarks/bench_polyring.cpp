#include "opcoact/polynomial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace opcoact;

namespace {

Polynomial dense_poly(int nvars, int terms, unsigned seed, RingMode mode = RingMode::Plain) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9), e(0, 2);
    Polynomial p(mode);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 1; v <= nvars; ++v) {
            int ev = e(rng);
            if (ev) m = mono_mul(m, monomial_var(VariableId{0, v, 1, 0}, ev));
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

void BM_poly_mul(benchmark::State& state) {
    Polynomial p = dense_poly(static_cast<int>(state.range(0)), 24, 1);
    Polynomial q = dense_poly(static_cast<int>(state.range(0)), 24, 2);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_poly_substitute(benchmark::State& state) {
    Polynomial p = dense_poly(4, 16, 3);
    std::map<VariableId, Polynomial> images;
    for (int v = 1; v <= 4; ++v)
        images[VariableId{0, v, 1, 0}] = dense_poly(4, 4, 10 + v);
    for (auto _ : state) benchmark::DoNotOptimize(p.substitute(images, RingMode::Plain));
}
BENCHMARK(BM_poly_substitute);

void BM_graded_mul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    Polynomial p(RingMode::Graded), q(RingMode::Graded);
    for (int v = 1; v <= 8; ++v) {
        p.add_term(monomial_var(VariableId{0, v, 1, v % 3}), 1);
        q.add_term(monomial_var(VariableId{0, v, 2, (v + 1) % 3}), 1);
    }
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_graded_mul);

} // namespace

BENCHMARK_MAIN();
