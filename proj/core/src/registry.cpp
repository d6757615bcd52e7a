#include "optibench/registry.hpp"

#include <string>

#include "optibench/errors.hpp"
#include "optibench/functions.hpp"

namespace optibench
{
    void FunctionEntry::check_dimension(const std::size_t n) const
    {
        if (n < min_dimension)
            throw DomainError(name + " needs dimension >= " + std::to_string(min_dimension) + ", got " +
                              std::to_string(n));
    }

    Problem FunctionEntry::create(const int instance_id, const std::size_t n) const
    {
        if (instance_id < 1)
            throw DomainError("instance id must be >= 1, got " + std::to_string(instance_id));
        if (instance_one_only && instance_id != 1)
            throw DomainError(name + " only provides instance 1");
        check_dimension(n);
        auto t = domain == Domain::Boolean ? transform::make_boolean_transform(problem_id, instance_id, n)
                                           : transform::make_continuous_transform(problem_id, instance_id, n,
                                                                                  use_rotation);
        return create(instance_id, n, std::move(t));
    }

    Problem FunctionEntry::create(const int instance_id, const std::size_t n, transform::InstanceTransform t) const
    {
        check_dimension(n);
        ProblemMetadata meta;
        meta.problem_id = problem_id;
        meta.name = name;
        meta.dimension = n;
        meta.instance_id = instance_id;
        meta.direction = direction;
        meta.domain = domain;
        meta.bounds.assign(n, bounds);

        OptimumInfo optimum;
        if (raw_optimum)
            if (const auto raw = raw_optimum(n))
                optimum = transform_optimum(*raw, t);
        return Problem(std::move(meta), make_function(n), std::move(t), std::move(optimum));
    }

    void FunctionRegistry::register_function(FunctionEntry entry)
    {
        if (entry.problem_id < 1)
            throw DomainError("problem id must be >= 1");
        if (!entry.make_function)
            throw UsageError("function entry " + entry.name + " has no constructor");
        const auto key = std::make_pair(entry.domain, entry.problem_id);
        if (entries_.contains(key))
            throw UsageError("duplicate " + std::string(to_string(entry.domain)) + " problem id " +
                             std::to_string(entry.problem_id));
        entries_.emplace(key, std::move(entry));
    }

    const FunctionEntry &FunctionRegistry::lookup(const int problem_id, const Domain domain) const
    {
        const auto it = entries_.find({domain, problem_id});
        if (it == entries_.end())
            throw UnknownIdError("unknown " + std::string(to_string(domain)) + " problem id " +
                                 std::to_string(problem_id));
        return it->second;
    }

    bool FunctionRegistry::contains(const int problem_id, const Domain domain) const
    {
        return entries_.contains({domain, problem_id});
    }

    std::vector<const FunctionEntry *> FunctionRegistry::entries(const Domain domain) const
    {
        std::vector<const FunctionEntry *> out;
        for (const auto &[key, entry] : entries_)
            if (key.first == domain)
                out.push_back(&entry);
        return out;
    }

    namespace catalog
    {
        functions::WModelParams wmodel_params(const int problem_id, const std::size_t n)
        {
            // Dummy positions belong to the base function, not the instance, so they use the
            // instance-0 seed slot that derive_seed never hands out.
            functions::WModelParams p;
            p.dummy_m = n;
            p.dummy_seed = static_cast<std::uint64_t>(problem_id) * 10000u;
            switch (problem_id)
            {
            case onemax_dummy:
                p.dummy_m = dummy_size(n);
                break;
            case onemax_neutrality:
                p.neutrality_mu = 3;
                break;
            case onemax_epistasis_ruggedness:
                p.epistasis_nu = 4;
                p.ruggedness = true;
                break;
            default:
                throw UnknownIdError("boolean problem " + std::to_string(problem_id) + " is not a W-model problem");
            }
            return p;
        }
    } // namespace catalog

    namespace
    {
        FunctionEntry boolean_entry(const int id, std::string name,
                                    std::function<RawFunction(std::size_t)> make,
                                    std::function<std::optional<RawOptimum>(std::size_t)> optimum)
        {
            FunctionEntry e;
            e.problem_id = id;
            e.name = std::move(name);
            e.domain = Domain::Boolean;
            e.direction = Direction::Maximize;
            e.make_function = std::move(make);
            e.raw_optimum = std::move(optimum);
            e.bounds = {0.0, 1.0};
            return e;
        }

        FunctionEntry continuous_entry(const int id, std::string name, double (*f)(std::span<const double>),
                                       const double x_star, const bool rotate = false)
        {
            FunctionEntry e;
            e.problem_id = id;
            e.name = std::move(name);
            e.domain = Domain::Continuous;
            e.direction = Direction::Minimize;
            e.make_function = [f](std::size_t) -> RawFunction { return ContinuousFunction(f); };
            e.raw_optimum = [x_star](const std::size_t n) -> std::optional<RawOptimum> {
                return RawOptimum{0.0, Solution(n, x_star)};
            };
            e.bounds = {-5.0, 5.0};
            e.use_rotation = rotate;
            return e;
        }

        std::optional<RawOptimum> all_ones(const std::size_t n, const double y)
        {
            return RawOptimum{y, Solution(n, 1.0)};
        }

        FunctionEntry wmodel_entry(const int id, std::string name, const std::size_t min_dimension)
        {
            auto e = boolean_entry(
                id, std::move(name),
                [id](const std::size_t n) -> RawFunction {
                    return BooleanFunction(functions::WModel(n, catalog::wmodel_params(id, n)));
                },
                [id](const std::size_t n) -> std::optional<RawOptimum> {
                    const functions::WModel model(n, catalog::wmodel_params(id, n));
                    const auto x = model.optimal_solution();
                    return RawOptimum{static_cast<double>(model.effective_length()), Solution(x.begin(), x.end())};
                });
            e.min_dimension = min_dimension;
            return e;
        }
    } // namespace

    FunctionRegistry FunctionRegistry::with_catalog()
    {
        using namespace catalog;
        FunctionRegistry r;

        r.register_function(boolean_entry(
            onemax, "OneMax", [](std::size_t) -> RawFunction { return BooleanFunction(functions::onemax); },
            [](const std::size_t n) { return all_ones(n, static_cast<double>(n)); }));
        r.register_function(boolean_entry(
            leadingones, "LeadingOnes",
            [](std::size_t) -> RawFunction { return BooleanFunction(functions::leadingones); },
            [](const std::size_t n) { return all_ones(n, static_cast<double>(n)); }));
        r.register_function(boolean_entry(
            linear_harmonic, "LinearHarmonic",
            [](std::size_t) -> RawFunction { return BooleanFunction(functions::linear_harmonic); },
            [](const std::size_t n) { return all_ones(n, static_cast<double>(n * (n + 1) / 2)); }));
        r.register_function(wmodel_entry(onemax_dummy, "OneMaxDummy", 1));
        r.register_function(wmodel_entry(onemax_neutrality, "OneMaxNeutrality", 3));
        r.register_function(wmodel_entry(onemax_epistasis_ruggedness, "OneMaxEpistasisRuggedness", 1));

        r.register_function(continuous_entry(sphere, "Sphere", functions::sphere, 0.0));
        r.register_function(continuous_entry(ellipsoid, "Ellipsoid", functions::ellipsoid, 0.0));
        r.register_function(continuous_entry(rastrigin, "Rastrigin", functions::rastrigin, 0.0));
        r.register_function(continuous_entry(rosenbrock, "Rosenbrock", functions::rosenbrock, 1.0));
        r.register_function(continuous_entry(rotated_ellipsoid, "RotatedEllipsoid", functions::ellipsoid, 0.0, true));
        return r;
    }

    FunctionRegistry &FunctionRegistry::instance()
    {
        static FunctionRegistry registry = with_catalog();
        return registry;
    }
} // namespace optibench
