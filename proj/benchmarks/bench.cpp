#include "jumploci/casegen.hpp"
#include "jumploci/deformation.hpp"
#include "jumploci/verify_artinian.hpp"

#include <benchmark/benchmark.h>

using namespace jumploci;

namespace {

void BM_JumpIdeal(benchmark::State& state) {
    FreeComplex fam = koszul_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Ideal j = jump_ideal(fam, 1, 1);
        benchmark::DoNotOptimize(j.groebner().size());
    }
}
BENCHMARK(BM_JumpIdeal)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_ReducedBasis(benchmark::State& state) {
    Rng rng(static_cast<std::uint64_t>(state.range(0)));
    Ideal base = casegen::random_ideal(rng);
    std::vector<Polynomial> gens = casegen::shuffled_generators(rng, base);
    for (auto _ : state) {
        Ideal i(base.ring(), gens);
        benchmark::DoNotOptimize(i.groebner().size());
    }
}
BENCHMARK(BM_ReducedBasis)->Arg(1)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_IdealIntersect(benchmark::State& state) {
    auto r = make_ring({"x", "y"});
    Rng rng(7);
    Ideal a(r, {casegen::random_polynomial(rng, r, 2), casegen::random_polynomial(rng, r, 2)});
    Ideal b(r, {casegen::random_polynomial(rng, r, 2)});
    for (auto _ : state) {
        Ideal both = ideal_intersect(a, b);
        benchmark::DoNotOptimize(both.groebner().size());
    }
}
BENCHMARK(BM_IdealIntersect)->Unit(benchmark::kMicrosecond);

void BM_Minors(benchmark::State& state) {
    auto r = make_ring({"x", "y"});
    Rng rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    PolyMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = casegen::random_polynomial(rng, r, 1);
    for (auto _ : state) {
        auto out = minors(m, n - 1);
        benchmark::DoNotOptimize(out.size());
    }
}
BENCHMARK(BM_Minors)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_ModuleCohomology(benchmark::State& state) {
    auto catalog = algebra_catalog();
    auto a = catalog[static_cast<std::size_t>(state.range(0))];
    FreeComplex fam = koszul_family(2);
    Rng rng(13);
    MapSpec s = casegen::random_map(rng, fam.ring(), a, {Scalar(0), Scalar(0)});
    AComplex ac = specialize_complex(fam, s);
    for (auto _ : state) {
        Subquotient h = module_cohomology(ac, 1);
        benchmark::DoNotOptimize(h.module.dim);
    }
}
BENCHMARK(BM_ModuleCohomology)->Arg(0)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_BoundaryFormula(benchmark::State& state) {
    AlgebraModel model = AlgebraModel::exterior(3);
    auto a = algebra_catalog()[3];
    Rng rng(17);
    RationalPoint p(3, Scalar(0));
    MapSpec s = casegen::random_map(rng, make_ring(3), a, p);
    for (auto _ : state) {
        BoundaryVerdict v = verify_boundary_formula(model, p, s, 2, 2);
        benchmark::DoNotOptimize(v.matches_step);
    }
}
BENCHMARK(BM_BoundaryFormula)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
