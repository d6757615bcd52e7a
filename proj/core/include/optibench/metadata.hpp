#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace optibench
{
    struct ProblemMetadata
    {
        int problem_id = 1;
        std::string name;
        std::size_t dimension = 1;
        int instance_id = 1;
        Direction direction = Direction::Maximize;
        Domain domain = Domain::Boolean;
        std::vector<Bounds> bounds;
        //! Name of the suite the instance was produced by, "none" for standalone problems.
        std::string suite = "none";

        //! Throws DomainError when an id or the dimension is < 1, or bounds are inconsistent.
        void validate() const;
    };

    struct ProblemState
    {
        std::size_t evaluations = 0;
        double y_current = std::numeric_limits<double>::quiet_NaN();
        double y_best = std::numeric_limits<double>::quiet_NaN();
        Solution x_best;
        bool improved_last_eval = false;
    };

    struct OptimumInfo
    {
        double y = std::numeric_limits<double>::quiet_NaN();
        std::optional<Solution> x;
        bool known = false;
    };

    enum class TargetStatus
    {
        Hit,
        Missed,
        Unknown
    };

    //! Absolute tolerance used by Problem::final_target_hit.
    inline constexpr double optimum_tolerance = 1e-8;
} // namespace optibench
