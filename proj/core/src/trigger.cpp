#include "optibench/trigger.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "optibench/errors.hpp"

namespace optibench
{
    Trigger Trigger::always() { return Trigger(trigger::Always{}); }

    Trigger Trigger::on_improvement() { return Trigger(trigger::OnImprovement{}); }

    Trigger Trigger::each(const std::size_t k)
    {
        if (k < 1)
            throw DomainError("each(k) needs k >= 1");
        return Trigger(trigger::Each{k});
    }

    Trigger Trigger::at(std::vector<std::size_t> points)
    {
        std::sort(points.begin(), points.end());
        if (std::adjacent_find(points.begin(), points.end()) != points.end())
            throw DomainError("at() points must be distinct");
        if (!points.empty() && points.front() == 0)
            throw DomainError("at() points must be >= 1");
        return Trigger(trigger::At{std::move(points)});
    }

    Trigger Trigger::targets(std::vector<double> values)
    {
        if (std::any_of(values.begin(), values.end(), [](const double v) { return std::isnan(v); }))
            throw DomainError("targets must not be NaN");
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw DomainError("targets must be distinct");
        std::vector<bool> fired(values.size(), false);
        return Trigger(trigger::Targets{std::move(values), std::move(fired)});
    }

    bool Trigger::fires(const LogRecord &record, const Direction direction)
    {
        return std::visit(
            [&](auto &t) -> bool {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, trigger::Always>)
                    return true;
                else if constexpr (std::is_same_v<T, trigger::OnImprovement>)
                    return record.improved;
                else if constexpr (std::is_same_v<T, trigger::Each>)
                    return record.evaluations % t.interval == 0;
                else if constexpr (std::is_same_v<T, trigger::At>)
                    return std::binary_search(t.points.begin(), t.points.end(), record.evaluations);
                else
                {
                    bool any = false;
                    for (std::size_t i = 0; i < t.values.size(); ++i)
                    {
                        if (t.fired[i])
                            continue;
                        const bool reached = direction == Direction::Maximize ? record.raw_y_best >= t.values[i]
                                                                              : record.raw_y_best <= t.values[i];
                        if (reached)
                        {
                            t.fired[i] = true;
                            any = true;
                        }
                    }
                    return any;
                }
            },
            v_);
    }

    void Trigger::reset()
    {
        if (auto *t = std::get_if<trigger::Targets>(&v_))
            std::fill(t->fired.begin(), t->fired.end(), false);
    }

    TriggerSet::TriggerSet(std::vector<Trigger> triggers) : triggers_(std::move(triggers)) {}

    bool TriggerSet::fires(const LogRecord &record, const Direction direction)
    {
        bool any = false;
        for (auto &t : triggers_)
            any = t.fires(record, direction) || any;
        return any;
    }

    void TriggerSet::reset()
    {
        for (auto &t : triggers_)
            t.reset();
    }

    Watcher watch(std::string name, const double &value)
    {
        return {std::move(name), [&value]() -> std::optional<double> { return value; }};
    }

    void validate_watchers(const std::vector<Watcher> &watchers)
    {
        static const std::set<std::string> reserved{"evaluations", "raw_y", "raw_y_best"};
        std::set<std::string> seen;
        for (const auto &w : watchers)
        {
            if (w.name.empty())
                throw DomainError("watcher names must not be empty");
            if (w.name.find_first_of(" \t\r\n\"'") != std::string::npos)
                throw DomainError("watcher name '" + w.name + "' contains whitespace or quotes");
            if (reserved.contains(w.name))
                throw DomainError("watcher name '" + w.name + "' clashes with a built-in column");
            if (!seen.insert(w.name).second)
                throw DomainError("duplicate watcher name '" + w.name + "'");
        }
    }
} // namespace optibench
