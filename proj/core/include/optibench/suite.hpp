#pragma once

#include <optional>
#include <string>
#include <vector>

#include "registry.hpp"

namespace optibench
{
    //! Recipe for a problem instance inside a suite.
    struct SuiteEntry
    {
        int problem_id;
        std::size_t dimension;
        int instance_id;

        bool operator==(const SuiteEntry &) const = default;
    };

    //! Ordered cross product of problem ids x dimensions x instance ids.
    //!
    //! Holds recipes, not live instances: next() constructs a fresh Problem each time. Iteration order is
    //! problem (outer), dimension, instance (inner).
    class Suite
    {
    public:
        Suite(std::string name, Domain domain, std::vector<int> problem_ids, std::vector<int> instance_ids,
              std::vector<std::size_t> dimensions, const FunctionRegistry &registry = FunctionRegistry::instance());

        [[nodiscard]] std::size_t size() const noexcept
        {
            return problem_ids_.size() * dimensions_.size() * instance_ids_.size();
        }

        //! The recipe at flat position i in iteration order.
        [[nodiscard]] SuiteEntry entry(std::size_t i) const;

        //! Next instance, or nullopt once the suite is exhausted (repeatedly).
        [[nodiscard]] std::optional<Problem> next();

        //! Rewinds the cursor.
        void reset() noexcept { cursor_ = 0; }

        //! Builds the instance for a recipe, tagged with the suite name.
        [[nodiscard]] Problem create(const SuiteEntry &e) const;

        [[nodiscard]] const std::string &name() const noexcept { return name_; }
        [[nodiscard]] Domain domain() const noexcept { return domain_; }
        [[nodiscard]] const std::vector<int> &problem_ids() const noexcept { return problem_ids_; }
        [[nodiscard]] const std::vector<int> &instance_ids() const noexcept { return instance_ids_; }
        [[nodiscard]] const std::vector<std::size_t> &dimensions() const noexcept { return dimensions_; }

    private:
        std::string name_;
        Domain domain_;
        std::vector<int> problem_ids_;
        std::vector<int> instance_ids_;
        std::vector<std::size_t> dimensions_;
        const FunctionRegistry *registry_;
        std::size_t cursor_ = 0;
    };

    namespace suites
    {
        inline constexpr const char *pbo_mini_name = "PBO-mini";
        inline constexpr const char *bbob_mini_name = "BBOB-mini";

        [[nodiscard]] std::vector<int> pbo_mini_ids();
        [[nodiscard]] std::vector<int> bbob_mini_ids();

        [[nodiscard]] Suite pbo_mini(std::vector<int> instance_ids, std::vector<std::size_t> dimensions);
        [[nodiscard]] Suite bbob_mini(std::vector<int> instance_ids, std::vector<std::size_t> dimensions);

        //! Names of the predefined suites.
        [[nodiscard]] std::vector<std::string> names();

        //! Predefined suite by name; throws UnknownIdError.
        [[nodiscard]] Suite by_name(const std::string &name, std::vector<int> instance_ids,
                                    std::vector<std::size_t> dimensions);
    } // namespace suites
} // namespace optibench
