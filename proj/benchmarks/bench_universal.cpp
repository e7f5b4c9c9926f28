#include "opcoact/universal.hpp"

#include <benchmark/benchmark.h>

using namespace opcoact;

namespace {

StructureAlgebra sl2(const OperadPresentation& lie) {
    auto j = nlohmann::json::parse(R"RS({
        "name": "sl2", "dim": 3, "shorthand": "antisymmetric",
        "operations": {"c": {"entries": [
            {"in": [1,2], "out": {"3": "1"}},
            {"in": [3,1], "out": {"1": "2"}},
            {"in": [3,2], "out": {"2": "-2"}}
        ]}}
    })RS");
    return load_algebra(j, lie);
}

void BM_universal_polynomials_sl2(benchmark::State& state) {
    OperadPresentation lie = preset("lie");
    StructureAlgebra alg = sl2(lie);
    for (auto _ : state) benchmark::DoNotOptimize(universal_polynomials(alg, alg, lie));
}
BENCHMARK(BM_universal_polynomials_sl2);

void BM_verify_generation_sl2(benchmark::State& state) {
    OperadPresentation lie = preset("lie");
    StructureAlgebra alg = sl2(lie);
    UniversalPresentation univ = universal_polynomials(alg, alg, lie);
    univ.groebner(); // cache outside the loop
    for (auto _ : state) benchmark::DoNotOptimize(verify_generation(alg, lie, univ, 3));
}
BENCHMARK(BM_verify_generation_sl2);

void BM_eval_tree_arity5(benchmark::State& state) {
    OperadPresentation tass = preset("tass", 3);
    auto j = nlohmann::json::parse(R"RS({
        "name": "tass3-2d", "dim": 2, "shorthand": "none",
        "operations": {"mu": {"entries": [
            {"in": [1,1,1], "out": {"1": "1"}},
            {"in": [1,1,2], "out": {"2": "1"}},
            {"in": [1,2,1], "out": {"2": "1"}},
            {"in": [2,1,1], "out": {"2": "1"}}
        ]}}
    })RS");
    StructureAlgebra alg = load_algebra(j, tass);
    OperadElement comb =
        partial_compose(tass, op_generator(tass, 0), 1, op_generator(tass, 0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_tree(alg, tass, comb));
}
BENCHMARK(BM_eval_tree_arity5);

} // namespace
