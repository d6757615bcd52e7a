#include "optibench/problem.hpp"

#include <algorithm>
#include <string>

#include "optibench/errors.hpp"

namespace optibench
{
    void ProblemMetadata::validate() const
    {
        if (problem_id < 1)
            throw DomainError("problem id must be >= 1, got " + std::to_string(problem_id));
        if (instance_id < 1)
            throw DomainError("instance id must be >= 1, got " + std::to_string(instance_id));
        if (dimension < 1)
            throw DomainError("dimension must be >= 1");
        if (bounds.size() != dimension)
            throw DimensionError("expected " + std::to_string(dimension) + " bounds, got " +
                                 std::to_string(bounds.size()));
        for (const auto &b : bounds)
            if (!(b.lower < b.upper))
                throw DomainError("bounds require lower < upper");
    }

    OptimumInfo transform_optimum(const RawOptimum &raw, const transform::InstanceTransform &t)
    {
        OptimumInfo info;
        info.known = true;
        info.y = t.apply_range(raw.y);
        if (!raw.x)
            return info;

        const auto &x_raw = *raw.x;
        if (const auto *b = std::get_if<transform::BooleanTransform>(&t.domain_transform))
        {
            // T_x(x)_j = x_{perm[j]} ^ z_j == x_raw_j  <=>  x_{perm[j]} = x_raw_j ^ z_j
            Solution x(x_raw.size());
            for (std::size_t j = 0; j < x.size(); ++j)
                x[b->permutation[j]] = static_cast<double>(static_cast<int>(x_raw[j]) ^ b->xor_mask[j]);
            info.x = std::move(x);
        }
        else
        {
            // R (x - shift) == x_raw  <=>  x = shift + R^T x_raw
            const auto &c = t.continuous();
            Solution x = c.shift;
            const auto n = x.size();
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t col = 0; col < n; ++col)
                    x[col] += c.rotation(r, col) * x_raw[r];
            info.x = std::move(x);
        }
        return info;
    }

    Problem::Problem(ProblemMetadata meta, RawFunction f, transform::InstanceTransform t, OptimumInfo optimum)
        : meta_(std::move(meta)), function_(std::move(f)), transform_(std::move(t)), optimum_(std::move(optimum))
    {
        meta_.validate();
        if (transform_.dimension() != meta_.dimension)
            throw DimensionError("transform dimension " + std::to_string(transform_.dimension()) +
                                 " does not match problem dimension " + std::to_string(meta_.dimension));
        if (transform_.domain() != meta_.domain)
            throw DomainError("transform domain does not match problem domain");
        const bool boolean_fn = std::holds_alternative<BooleanFunction>(function_);
        if (boolean_fn != (meta_.domain == Domain::Boolean))
            throw DomainError("base function type does not match problem domain");
        clear_state();
    }

    void Problem::clear_state()
    {
        state_ = ProblemState{};
        state_.y_best = worst_value(meta_.direction);
    }

    double Problem::operator()(const std::span<const int> x)
    {
        if (meta_.domain == Domain::Boolean)
            return evaluate_bits(x);
        const Solution reals(x.begin(), x.end());
        return evaluate_reals(reals);
    }

    double Problem::operator()(const std::span<const double> x)
    {
        if (meta_.domain == Domain::Continuous)
            return evaluate_reals(x);
        Bits bits(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            if (x[i] != 0.0 && x[i] != 1.0)
                throw DomainError("entry " + std::to_string(i) + " of a boolean solution is " + std::to_string(x[i]) +
                                  ", expected 0 or 1");
            bits[i] = static_cast<int>(x[i]);
        }
        return evaluate_bits(bits);
    }

    double Problem::evaluate_bits(const std::span<const int> x)
    {
        if (x.size() != meta_.dimension)
            throw DimensionError("solution has length " + std::to_string(x.size()) + ", problem " + meta_.name +
                                 " has dimension " + std::to_string(meta_.dimension));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0 && x[i] != 1)
                throw DomainError("entry " + std::to_string(i) + " of a boolean solution is " + std::to_string(x[i]) +
                                  ", expected 0 or 1");

        const auto inner = transform::apply_boolean(transform_.boolean(), x);
        const auto y = transform_.apply_range(std::get<BooleanFunction>(function_)(inner));
        const Solution as_reals(x.begin(), x.end());
        record(y, as_reals);
        return y;
    }

    double Problem::evaluate_reals(const std::span<const double> x)
    {
        if (x.size() != meta_.dimension)
            throw DimensionError("solution has length " + std::to_string(x.size()) + ", problem " + meta_.name +
                                 " has dimension " + std::to_string(meta_.dimension));

        const auto inner = transform::apply_continuous(transform_.continuous(), x);
        const auto y = transform_.apply_range(std::get<ContinuousFunction>(function_)(inner));
        record(y, x);
        return y;
    }

    void Problem::record(const double y, const std::span<const double> x)
    {
        ++state_.evaluations;
        state_.y_current = y;
        state_.improved_last_eval = state_.evaluations == 1 || strictly_better(meta_.direction, y, state_.y_best);
        if (state_.improved_last_eval)
        {
            state_.y_best = y;
            state_.x_best.assign(x.begin(), x.end());
        }

        const Evaluation e{state_.evaluations, y, state_.y_best, state_.improved_last_eval};
        for (auto *logger : loggers_)
            logger->on_evaluation(e);
    }

    void Problem::reset()
    {
        if (state_.evaluations > 0)
        {
            const RunSummary summary{state_.evaluations, state_.y_best};
            for (auto *logger : loggers_)
                logger->on_run_end(summary);
        }
        clear_state();
        for (auto *logger : loggers_)
            logger->on_run_start(meta_);
    }

    void Problem::attach_logger(Logger &logger)
    {
        if (std::find(loggers_.begin(), loggers_.end(), &logger) != loggers_.end())
            throw UsageError("logger is already attached to problem " + meta_.name);
        loggers_.push_back(&logger);
        logger.on_run_start(meta_);
    }

    void Problem::detach_logger(Logger &logger)
    {
        const auto it = std::find(loggers_.begin(), loggers_.end(), &logger);
        if (it == loggers_.end())
            throw UsageError("logger is not attached to problem " + meta_.name);
        loggers_.erase(it);
        if (state_.evaluations > 0)
            logger.on_run_end({state_.evaluations, state_.y_best});
        logger.flush();
    }

    void Problem::set_suite(std::string suite)
    {
        if (!loggers_.empty())
            throw UsageError("cannot rename the suite of " + meta_.name + " while loggers are attached");
        meta_.suite = std::move(suite);
    }

    TargetStatus Problem::final_target_hit() const noexcept
    {
        if (!optimum_.known)
            return TargetStatus::Unknown;
        if (state_.evaluations == 0)
            return TargetStatus::Missed;
        const bool hit = meta_.direction == Direction::Maximize ? state_.y_best >= optimum_.y - optimum_tolerance
                                                                : state_.y_best <= optimum_.y + optimum_tolerance;
        return hit ? TargetStatus::Hit : TargetStatus::Missed;
    }
} // namespace optibench
