#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "functions.hpp"
#include "problem.hpp"

namespace optibench
{
    //! A base function f and everything needed to build instances of it.
    struct FunctionEntry
    {
        int problem_id = 0;
        std::string name;
        Domain domain = Domain::Boolean;
        Direction direction = Direction::Maximize;
        //! Builds the raw function for dimension n.
        std::function<RawFunction(std::size_t n)> make_function;
        //! Optimum of the raw function for dimension n; empty when unknown.
        std::function<std::optional<RawOptimum>(std::size_t n)> raw_optimum;
        std::size_t min_dimension = 1;
        Bounds bounds = {0.0, 1.0};
        //! Continuous only: instances >= 2 carry a random rotation.
        bool use_rotation = false;
        //! Custom entries are only available as instance 1 and never get generated transforms.
        bool instance_one_only = false;

        //! Builds instance `instance_id` of dimension n with the generated transform.
        [[nodiscard]] Problem create(int instance_id, std::size_t n) const;

        //! Builds an instance with a caller-supplied transform (e.g. XOR-only instances).
        [[nodiscard]] Problem create(int instance_id, std::size_t n, transform::InstanceTransform t) const;

        //! Throws DomainError when n is below min_dimension.
        void check_dimension(std::size_t n) const;
    };

    //! Maps (domain, problem id) to FunctionEntry. Registration happens before use; lookups may run concurrently.
    class FunctionRegistry
    {
    public:
        //! A registry pre-filled with the built-in catalog.
        static FunctionRegistry with_catalog();

        //! Process-wide registry holding the catalog.
        static FunctionRegistry &instance();

        //! Throws UsageError when the id is already taken within the domain.
        void register_function(FunctionEntry entry);

        //! Throws UnknownIdError.
        [[nodiscard]] const FunctionEntry &lookup(int problem_id, Domain domain) const;
        [[nodiscard]] bool contains(int problem_id, Domain domain) const;

        //! Entries of one domain sorted by id.
        [[nodiscard]] std::vector<const FunctionEntry *> entries(Domain domain) const;

    private:
        std::map<std::pair<Domain, int>, FunctionEntry> entries_;
    };

    namespace catalog
    {
        inline constexpr int onemax = 1;
        inline constexpr int leadingones = 2;
        inline constexpr int linear_harmonic = 3;
        inline constexpr int onemax_dummy = 4;
        inline constexpr int onemax_neutrality = 5;
        inline constexpr int onemax_epistasis_ruggedness = 6;

        inline constexpr int sphere = 1;
        inline constexpr int ellipsoid = 2;
        inline constexpr int rastrigin = 3;
        inline constexpr int rosenbrock = 8;
        inline constexpr int rotated_ellipsoid = 10;

        //! Dummy layer size used by problem 4: ceil(0.9 n).
        [[nodiscard]] constexpr std::size_t dummy_size(const std::size_t n) noexcept { return (9 * n + 9) / 10; }

        //! The W-model parameters of boolean catalog problems 4-6.
        [[nodiscard]] functions::WModelParams wmodel_params(int problem_id, std::size_t n);
    } // namespace catalog
} // namespace optibench
