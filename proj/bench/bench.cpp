// Serial reference against the OpenMP kernels on the three expensive paths.

#include <benchmark/benchmark.h>

#include <jacquet/spclassifier.hpp>
#include <jacquet/structure.hpp>
#include <jacquet/weyl.hpp>

using namespace jacquet;

namespace
{

Exec exec_of(const benchmark::State &state)
{
    return state.range(0) ? Exec::parallel : Exec::serial;
}

void label_exec(benchmark::State &state)
{
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_mu_star(benchmark::State &state)
{
    LabelRegistry reg;
    const GLLabel rho = reg.declare_gl("rho", 1, true);
    const GLLabel pi = reg.declare_gl("pi", 2, true);
    const GULabel sigma = reg.declare_gu("sigma", 1, {{rho, 1}}, {rho});
    const int len = static_cast<int>(state.range(1));
    const GUClass g(sigma, GLMonomial{Segment(rho, 1, len), Segment(pi, HalfInt::from_twice(1), HalfInt::from_twice(2 * len - 1)),
                                      Segment(rho, -1, len - 1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mu_star(g, GroupMode::GU, exec_of(state)));
    }
    label_exec(state);
}
BENCHMARK(BM_mu_star)->ArgsProduct({{0, 1}, {3, 5, 7}})->Unit(benchmark::kMillisecond);

void BM_weyl_brute_force(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_coset_reps(n, 2, 2, n, exec_of(state)));
    }
    label_exec(state);
}
BENCHMARK(BM_weyl_brute_force)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

void BM_enumerate_sp(benchmark::State &state)
{
    LabelRegistry reg;
    const GLLabel rho = reg.declare_gl("rho", 1, true);
    const GLLabel pi = reg.declare_gl("pi", 1, true);
    const GULabel sigma = reg.declare_gu("sigma", 0, {{rho, 2}, {pi, HalfInt::from_twice(3)}}, {rho, pi});
    const std::vector<GLLabel> labels{rho, pi};
    const HalfInt max_b = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_sp(labels, sigma, max_b, GroupMode::GU, JordConvention::permissive,
                                              exec_of(state)));
    }
    label_exec(state);
}
BENCHMARK(BM_enumerate_sp)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
