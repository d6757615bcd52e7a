#include "optibench/suite.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "optibench/errors.hpp"

namespace optibench
{
    namespace
    {
        template <typename T>
        void require_unique_nonempty(const std::vector<T> &values, const std::string &what)
        {
            if (values.empty())
                throw DomainError("suite needs at least one " + what);
            if (std::set<T>(values.begin(), values.end()).size() != values.size())
                throw DomainError("suite has duplicate " + what + " entries");
        }
    } // namespace

    Suite::Suite(std::string name, const Domain domain, std::vector<int> problem_ids, std::vector<int> instance_ids,
                 std::vector<std::size_t> dimensions, const FunctionRegistry &registry)
        : name_(std::move(name)), domain_(domain), problem_ids_(std::move(problem_ids)),
          instance_ids_(std::move(instance_ids)), dimensions_(std::move(dimensions)), registry_(&registry)
    {
        require_unique_nonempty(problem_ids_, "problem id");
        require_unique_nonempty(instance_ids_, "instance id");
        require_unique_nonempty(dimensions_, "dimension");

        for (const auto i : instance_ids_)
            if (i < 1)
                throw DomainError("instance ids must be >= 1, got " + std::to_string(i));
        for (const auto id : problem_ids_)
        {
            const auto &entry = registry_->lookup(id, domain_);
            for (const auto n : dimensions_)
            {
                if (n < 1)
                    throw DomainError("dimensions must be >= 1");
                entry.check_dimension(n);
            }
            if (entry.instance_one_only && (instance_ids_.size() != 1 || instance_ids_.front() != 1))
                throw DomainError(entry.name + " only provides instance 1");
        }
    }

    SuiteEntry Suite::entry(const std::size_t i) const
    {
        const auto per_problem = dimensions_.size() * instance_ids_.size();
        const auto p = i / per_problem;
        const auto rest = i % per_problem;
        return {problem_ids_.at(p), dimensions_.at(rest / instance_ids_.size()),
                instance_ids_.at(rest % instance_ids_.size())};
    }

    std::optional<Problem> Suite::next()
    {
        if (cursor_ >= size())
            return std::nullopt;
        return create(entry(cursor_++));
    }

    Problem Suite::create(const SuiteEntry &e) const
    {
        auto p = registry_->lookup(e.problem_id, domain_).create(e.instance_id, e.dimension);
        p.set_suite(name_);
        return p;
    }

    namespace suites
    {
        std::vector<int> pbo_mini_ids() { return {1, 2, 3, 4, 5, 6}; }
        std::vector<int> bbob_mini_ids() { return {1, 2, 3, 8, 10}; }

        Suite pbo_mini(std::vector<int> instance_ids, std::vector<std::size_t> dimensions)
        {
            return {pbo_mini_name, Domain::Boolean, pbo_mini_ids(), std::move(instance_ids), std::move(dimensions)};
        }

        Suite bbob_mini(std::vector<int> instance_ids, std::vector<std::size_t> dimensions)
        {
            return {bbob_mini_name, Domain::Continuous, bbob_mini_ids(), std::move(instance_ids),
                    std::move(dimensions)};
        }

        std::vector<std::string> names() { return {pbo_mini_name, bbob_mini_name}; }

        Suite by_name(const std::string &name, std::vector<int> instance_ids, std::vector<std::size_t> dimensions)
        {
            if (name == pbo_mini_name)
                return pbo_mini(std::move(instance_ids), std::move(dimensions));
            if (name == bbob_mini_name)
                return bbob_mini(std::move(instance_ids), std::move(dimensions));
            throw UnknownIdError("unknown suite " + name);
        }
    } // namespace suites
} // namespace optibench
