#include "opcoact/groebner.hpp"
#include "opcoact/operad.hpp"
#include "opcoact/palgebra.hpp"
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

void BM_buchberger_sl2(benchmark::State& state) {
    OperadPresentation lie = preset("lie");
    StructureAlgebra alg = sl2(lie);
    UniversalPresentation univ = universal_polynomials(alg, alg, lie);
    Ideal ideal = univ.ideal();
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_buchberger_sl2);

void BM_normal_form_sl2(benchmark::State& state) {
    OperadPresentation lie = preset("lie");
    StructureAlgebra alg = sl2(lie);
    UniversalPresentation univ = universal_polynomials(alg, alg, lie);
    GroebnerBasis gb = buchberger(univ.ideal());
    Polynomial p = univ.jgens[0].poly * univ.jgens[1].poly + univ.jgens[2].poly;
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, gb));
}
BENCHMARK(BM_normal_form_sl2);

} // namespace
