#pragma once

#include <vector>

#include "optibench/logger.hpp"

//! Keeps every callback it receives.
class RecordingLogger final : public optibench::Logger
{
public:
    void on_run_start(const optibench::ProblemMetadata &meta) override { starts.push_back(meta); }
    void on_evaluation(const optibench::Evaluation &e) override { evaluations.push_back(e); }
    void on_run_end(const optibench::RunSummary &s) override { ends.push_back(s); }
    void flush() override { ++flushes; }

    [[nodiscard]] std::vector<double> values() const
    {
        std::vector<double> out;
        for (const auto &e : evaluations)
            out.push_back(e.y);
        return out;
    }

    std::vector<optibench::ProblemMetadata> starts;
    std::vector<optibench::Evaluation> evaluations;
    std::vector<optibench::RunSummary> ends;
    int flushes = 0;
};
