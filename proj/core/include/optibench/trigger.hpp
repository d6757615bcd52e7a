#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "types.hpp"

namespace optibench
{
    //! One candidate row: the evaluation counter, the value the algorithm saw, and the best-so-far.
    struct LogRecord
    {
        std::size_t evaluations;
        double raw_y;
        double raw_y_best;
        bool improved = false;
        //! Watched parameters in declaration order.
        std::vector<std::pair<std::string, double>> parameters;
    };

    namespace trigger
    {
        struct Always
        {
        };

        struct OnImprovement
        {
        };

        //! Fires when evaluations % interval == 0.
        struct Each
        {
            std::size_t interval;
        };

        //! Fires at the listed evaluation counts (sorted, distinct).
        struct At
        {
            std::vector<std::size_t> points;
        };

        //! Fires the first time best-so-far reaches each value; re-armed per run.
        struct Targets
        {
            std::vector<double> values;
            std::vector<bool> fired;
        };
    } // namespace trigger

    //! Predicate deciding whether a LogRecord gets stored.
    class Trigger
    {
    public:
        using Variant = std::variant<trigger::Always, trigger::OnImprovement, trigger::Each, trigger::At,
                                     trigger::Targets>;

        static Trigger always();
        static Trigger on_improvement();
        //! Throws DomainError for k == 0.
        static Trigger each(std::size_t k);
        //! Throws DomainError for duplicates or a zero point.
        static Trigger at(std::vector<std::size_t> points);
        //! Throws DomainError for NaN or duplicate values.
        static Trigger targets(std::vector<double> values);

        //! May mark newly reached targets as fired.
        [[nodiscard]] bool fires(const LogRecord &record, Direction direction);

        //! Clears per-run state.
        void reset();

        [[nodiscard]] const Variant &variant() const noexcept { return v_; }

    private:
        explicit Trigger(Variant v) : v_(std::move(v)) {}

        Variant v_;
    };

    //! OR-combination of triggers. Every member is evaluated (no short-circuit) so that
    //! targets reached on a row stored for another reason are still consumed.
    class TriggerSet
    {
    public:
        TriggerSet() = default;
        explicit TriggerSet(std::vector<Trigger> triggers);
        TriggerSet(std::initializer_list<Trigger> triggers) : TriggerSet(std::vector<Trigger>(triggers)) {}

        [[nodiscard]] bool fires(const LogRecord &record, Direction direction);
        void reset();

        [[nodiscard]] bool empty() const noexcept { return triggers_.empty(); }
        [[nodiscard]] const std::vector<Trigger> &triggers() const noexcept { return triggers_; }

    private:
        std::vector<Trigger> triggers_;
    };

    //! A named scalar polled every time a row is stored. nullopt means "unavailable" and is written as nan.
    struct Watcher
    {
        std::string name;
        std::function<std::optional<double>()> source;
    };

    //! Watches a variable owned by the caller; it must outlive every logger holding the watcher.
    [[nodiscard]] Watcher watch(std::string name, const double &value);

    //! Throws DomainError for empty names, whitespace or quotes, reserved column names, or duplicates.
    void validate_watchers(const std::vector<Watcher> &watchers);
} // namespace optibench
