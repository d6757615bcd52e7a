#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace optibench
{
    enum class Direction
    {
        Maximize,
        Minimize
    };

    enum class Domain
    {
        Boolean,
        Continuous
    };

    //! Bit strings are carried as 0/1 ints; reals as doubles.
    using Bits = std::vector<int>;
    using Solution = std::vector<double>;

    struct Bounds
    {
        double lower;
        double upper;
    };

    //! True iff lhs is strictly better than rhs under the given direction.
    [[nodiscard]] constexpr bool strictly_better(const Direction d, const double lhs, const double rhs) noexcept
    {
        return d == Direction::Maximize ? lhs > rhs : lhs < rhs;
    }

    //! The best-so-far sentinel before any evaluation.
    [[nodiscard]] constexpr double worst_value(const Direction d) noexcept
    {
        return d == Direction::Maximize ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity();
    }

    [[nodiscard]] constexpr std::string_view to_string(const Domain d) noexcept
    {
        return d == Domain::Boolean ? "boolean" : "continuous";
    }

    [[nodiscard]] constexpr std::string_view to_string(const Direction d) noexcept
    {
        return d == Direction::Maximize ? "maximize" : "minimize";
    }
} // namespace optibench
