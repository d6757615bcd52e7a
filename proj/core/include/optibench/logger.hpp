#pragma once

#include <cstddef>

#include "metadata.hpp"

namespace optibench
{
    //! What a problem offers its loggers after every evaluation.
    struct Evaluation
    {
        std::size_t evaluations;
        double y;
        double y_best;
        bool improved;
    };

    //! Emitted once per completed run.
    struct RunSummary
    {
        std::size_t evaluations;
        double y_best;
    };

    //! Observer attached to a Problem.
    //!
    //! Lifecycle: on_run_start on attach and after every reset, on_evaluation per evaluate call,
    //! on_run_end when a run with at least one evaluation finishes (reset or detach).
    class Logger
    {
    public:
        virtual ~Logger() = default;

        virtual void on_run_start(const ProblemMetadata &meta) = 0;
        virtual void on_evaluation(const Evaluation &evaluation) = 0;
        virtual void on_run_end(const RunSummary &summary) = 0;
        virtual void flush() {}
    };
} // namespace optibench
