#pragma once

// Fixed write scenario behind tests/data/golden. Uses hand-set transforms only, so the bytes do
// not depend on the standard library's random distributions.

#include <filesystem>
#include <limits>
#include <optional>

#include "optibench/analyzer.hpp"
#include "optibench/registry.hpp"

namespace golden
{
    inline std::filesystem::path write(const std::filesystem::path &root)
    {
        using namespace optibench;
        std::optional<double> step;
        AnalyzerLogger logger({root, "golden", "rls", "golden scenario, two problems", AnalyzerLogger::FolderPolicy::Unique},
                              TriggerSet{Trigger::on_improvement(), Trigger::at({4})},
                              {Watcher{"step", [&step] { return step; }}});

        const auto &registry = FunctionRegistry::instance();
        {
            auto p = registry.lookup(1, Domain::Boolean).create(1, 4);
            p.attach_logger(logger);
            const Bits run1[] = {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}};
            double s = 0.5;
            for (const auto &x : run1)
            {
                step = s;
                (void)p(x);
                s *= 0.5;
            }
            p.reset();

            step.reset();
            (void)p(Bits{1, 1, 1, 0});
            (void)p(Bits{1, 1, 1, 1});
            p.reset();
            p.detach_logger(logger);
        }
        {
            auto p = registry.lookup(1, Domain::Boolean).create(1, 8);
            p.attach_logger(logger);
            step = 3.0;
            (void)p(Bits{1, 0, 1, 0, 1, 0, 1, 0});
            (void)p(Bits{1, 0, 1, 0, 1, 0, 1, 1});
            p.reset();
            p.detach_logger(logger);
        }
        {
            auto t = transform::ContinuousTransform::make_identity(2);
            t.identity = false;
            t.shift = {0.5, -1.25};
            t.f_offset = 12.34;
            auto p = registry.lookup(1, Domain::Continuous).create(2, 2, {t, {}});
            p.attach_logger(logger);
            step = 0.1;
            (void)p(Solution{0.0, 0.0});
            step = 1e-7;
            (void)p(Solution{0.5, -1.0});
            step = std::numeric_limits<double>::infinity();
            (void)p(Solution{3.0, 3.0});
            p.reset();
            p.detach_logger(logger);
        }
        return logger.output_directory();
    }
} // namespace golden
