#include <benchmark/benchmark.h>

#include <random>

#include "optibench/functions.hpp"
#include "optibench/registry.hpp"

using namespace optibench;

namespace
{
    Bits random_bits(const std::size_t n, const std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        Bits x(n);
        for (auto &b : x)
            b = static_cast<int>(rng() & 1);
        return x;
    }

    // Raw OneMax, no transform and no bookkeeping.
    void BM_OneMaxRaw(benchmark::State &state)
    {
        const auto x = random_bits(static_cast<std::size_t>(state.range(0)), 1);
        for (auto _ : state)
            benchmark::DoNotOptimize(functions::onemax(x));
        state.SetItemsProcessed(state.iterations());
    }
    BENCHMARK(BM_OneMaxRaw)->Arg(100)->Arg(1000)->Arg(10000);

    void BM_BooleanProblem(benchmark::State &state)
    {
        const auto n = static_cast<std::size_t>(state.range(1));
        auto p = FunctionRegistry::instance()
                     .lookup(static_cast<int>(state.range(0)), Domain::Boolean)
                     .create(static_cast<int>(state.range(2)), n);
        const auto x = random_bits(n, 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(p(x));
        state.SetItemsProcessed(state.iterations());
    }
    BENCHMARK(BM_BooleanProblem)
        ->ArgNames({"pid", "n", "iid"})
        ->ArgsProduct({{1, 2, 6}, {100, 1000}, {1, 2}});

    void BM_ContinuousProblem(benchmark::State &state)
    {
        const auto n = static_cast<std::size_t>(state.range(1));
        auto p = FunctionRegistry::instance()
                     .lookup(static_cast<int>(state.range(0)), Domain::Continuous)
                     .create(2, n);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-5, 5);
        Solution x(n);
        for (auto &v : x)
            v = u(rng);
        for (auto _ : state)
            benchmark::DoNotOptimize(p(x));
        state.SetItemsProcessed(state.iterations());
    }
    BENCHMARK(BM_ContinuousProblem)->ArgNames({"pid", "n"})->ArgsProduct({{1, 10}, {10, 40}});

    void BM_CreateInstance(benchmark::State &state)
    {
        const auto &entry = FunctionRegistry::instance().lookup(10, Domain::Continuous);
        int iid = 2;
        for (auto _ : state)
            benchmark::DoNotOptimize(entry.create(iid++, static_cast<std::size_t>(state.range(0))));
    }
    BENCHMARK(BM_CreateInstance)->Arg(10)->Arg(40);
} // namespace
