#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "logger.hpp"
#include "metadata.hpp"
#include "transform.hpp"

namespace optibench
{
    using BooleanFunction = std::function<double(std::span<const int>)>;
    using ContinuousFunction = std::function<double(std::span<const double>)>;
    using RawFunction = std::variant<BooleanFunction, ContinuousFunction>;

    //! Optimum of an untransformed base function.
    struct RawOptimum
    {
        double y;
        std::optional<Solution> x;
    };

    //! Maps a raw optimum through an instance transform: y -> T_y(y), x -> T_x^{-1}(x).
    [[nodiscard]] OptimumInfo transform_optimum(const RawOptimum &raw, const transform::InstanceTransform &t);

    //! A problem instance F = T_y o f o T_x with its run state and attached loggers.
    //!
    //! Single-threaded: one run at a time, no concurrent evaluate/reset. Move-only so an
    //! attachment is never duplicated.
    class Problem
    {
    public:
        Problem(ProblemMetadata meta, RawFunction f, transform::InstanceTransform t, OptimumInfo optimum = {});

        Problem(const Problem &) = delete;
        Problem &operator=(const Problem &) = delete;
        Problem(Problem &&) noexcept = default;
        Problem &operator=(Problem &&) noexcept = default;
        ~Problem() = default;

        double operator()(std::span<const int> x);
        double operator()(std::span<const double> x);
        double operator()(const Bits &x) { return (*this)(std::span<const int>(x)); }
        double operator()(const Solution &x) { return (*this)(std::span<const double>(x)); }

        //! Ends the current run (loggers get a summary if anything was evaluated) and clears the state.
        void reset();

        void attach_logger(Logger &logger);
        void detach_logger(Logger &logger);
        [[nodiscard]] std::size_t logger_count() const noexcept { return loggers_.size(); }

        //! Tags the instance with the suite that produced it. Only allowed while no logger is attached.
        void set_suite(std::string suite);

        [[nodiscard]] TargetStatus final_target_hit() const noexcept;

        [[nodiscard]] const ProblemMetadata &meta_data() const noexcept { return meta_; }
        [[nodiscard]] const ProblemState &state() const noexcept { return state_; }
        [[nodiscard]] const OptimumInfo &optimum() const noexcept { return optimum_; }
        [[nodiscard]] const transform::InstanceTransform &transform() const noexcept { return transform_; }

    private:
        double evaluate_bits(std::span<const int> x);
        double evaluate_reals(std::span<const double> x);
        void record(double y, std::span<const double> x);
        void clear_state();

        ProblemMetadata meta_;
        RawFunction function_;
        transform::InstanceTransform transform_;
        OptimumInfo optimum_;
        ProblemState state_;
        std::vector<Logger *> loggers_;
    };
} // namespace optibench
