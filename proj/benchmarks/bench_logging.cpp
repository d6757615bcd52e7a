#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "optibench/analyzer.hpp"
#include "optibench/registry.hpp"

using namespace optibench;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch()
    {
        return fs::temp_directory_path() / ("optibench-bench-" + std::to_string(std::random_device{}()));
    }

    // Evaluation cost of OneMax n=100 with the given logger attached (nullptr: none).
    void run_with(benchmark::State &state, Logger *logger)
    {
        auto p = FunctionRegistry::instance().lookup(1, Domain::Boolean).create(1, 100);
        if (logger)
            p.attach_logger(*logger);
        std::mt19937_64 rng(4);
        Bits x(100);
        for (auto _ : state)
        {
            x[rng() % 100] ^= 1;
            benchmark::DoNotOptimize(p(x));
        }
        state.SetItemsProcessed(state.iterations());
    }

    void BM_NoLogger(benchmark::State &state) { run_with(state, nullptr); }
    BENCHMARK(BM_NoLogger);

    void BM_FinalValueLogger(benchmark::State &state)
    {
        FinalValueLogger logger;
        run_with(state, &logger);
    }
    BENCHMARK(BM_FinalValueLogger);

    void BM_AnalyzerOnImprovement(benchmark::State &state)
    {
        const auto root = scratch();
        {
            AnalyzerLogger logger({root, "bench", "bench", "", AnalyzerLogger::FolderPolicy::Unique},
                                  TriggerSet{Trigger::on_improvement()});
            run_with(state, &logger);
        }
        fs::remove_all(root);
    }
    BENCHMARK(BM_AnalyzerOnImprovement);

    void BM_AnalyzerAlways(benchmark::State &state)
    {
        const auto root = scratch();
        {
            double param = 0.5;
            AnalyzerLogger logger({root, "bench", "bench", "", AnalyzerLogger::FolderPolicy::Unique},
                                  TriggerSet{Trigger::always()}, {watch("param", param)});
            run_with(state, &logger);
        }
        fs::remove_all(root);
    }
    BENCHMARK(BM_AnalyzerAlways);
} // namespace
