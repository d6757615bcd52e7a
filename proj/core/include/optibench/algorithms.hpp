#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "problem.hpp"

//! Baseline solvers used to exercise the benchmarking pipeline.
namespace optibench::algorithms
{
    struct RunOptions
    {
        std::size_t budget = 1000;
        std::uint64_t seed = 0;
        //! Return as soon as the problem reports its optimum as hit.
        bool stop_on_optimum = true;
    };

    //! A solver that may expose named control parameters for watchers.
    class Algorithm
    {
    public:
        virtual ~Algorithm() = default;

        [[nodiscard]] virtual std::string_view name() const noexcept = 0;
        [[nodiscard]] virtual bool supports(Domain domain) const noexcept = 0;

        //! Names accepted by parameter().
        [[nodiscard]] virtual std::vector<std::string> parameter_names() const { return {}; }

        //! Current value of an exposed parameter; nullopt when unknown or not yet set.
        [[nodiscard]] virtual std::optional<double> parameter(std::string_view) const { return std::nullopt; }

        //! Runs on a freshly reset problem. Throws DomainError for unsupported domains.
        virtual void run(Problem &problem, const RunOptions &options) = 0;
    };

    //! Uniform sampling of the search space.
    class RandomSearch final : public Algorithm
    {
    public:
        [[nodiscard]] std::string_view name() const noexcept override { return "random_search"; }
        [[nodiscard]] bool supports(Domain) const noexcept override { return true; }
        void run(Problem &problem, const RunOptions &options) override;
    };

    //! Flips one uniformly chosen bit per step, accepts the offspring if it is not worse.
    class RandomLocalSearch final : public Algorithm
    {
    public:
        RandomLocalSearch() = default;
        //! Fixed starting point instead of a random one (no random draw is spent on it).
        explicit RandomLocalSearch(Bits start) : start_(std::move(start)) {}

        [[nodiscard]] std::string_view name() const noexcept override { return "rls"; }
        [[nodiscard]] bool supports(Domain d) const noexcept override { return d == Domain::Boolean; }
        void run(Problem &problem, const RunOptions &options) override;

    private:
        std::optional<Bits> start_;
    };

    //! (1+1) EA with standard bit mutation; all-zero flip masks are resampled.
    class OnePlusOneEA final : public Algorithm
    {
    public:
        //! Default rate is 1/n. Throws UsageError for a rate outside (0, 1].
        explicit OnePlusOneEA(std::optional<double> mutation_rate = std::nullopt);

        [[nodiscard]] std::string_view name() const noexcept override { return "one_plus_one_ea"; }
        [[nodiscard]] bool supports(Domain d) const noexcept override { return d == Domain::Boolean; }
        [[nodiscard]] std::vector<std::string> parameter_names() const override { return {"mutation_rate"}; }
        [[nodiscard]] std::optional<double> parameter(std::string_view name) const override;
        void run(Problem &problem, const RunOptions &options) override;

    private:
        std::optional<double> configured_rate_;
        std::optional<double> rate_;
    };

    //! (1+1) ES with Gaussian mutation and the 1/5th success rule.
    class OnePlusOneES final : public Algorithm
    {
    public:
        static constexpr double success_factor = 1.5;

        //! Default initial step size is 0.3 * (upper - lower). Throws UsageError unless sigma0 > 0.
        explicit OnePlusOneES(std::optional<double> sigma0 = std::nullopt);

        [[nodiscard]] std::string_view name() const noexcept override { return "one_plus_one_es"; }
        [[nodiscard]] bool supports(Domain d) const noexcept override { return d == Domain::Continuous; }
        [[nodiscard]] std::vector<std::string> parameter_names() const override { return {"sigma"}; }
        [[nodiscard]] std::optional<double> parameter(std::string_view name) const override;
        void run(Problem &problem, const RunOptions &options) override;

    private:
        std::optional<double> sigma0_;
        std::optional<double> sigma_;
    };

    void random_search(Problem &problem, std::size_t budget, std::uint64_t seed);
    void rls(Problem &problem, std::size_t budget, std::uint64_t seed);
    void one_plus_one_ea(Problem &problem, std::size_t budget, std::uint64_t seed);
    void one_plus_one_es(Problem &problem, std::size_t budget, std::uint64_t seed);

    using Parameters = std::map<std::string, double>;

    struct AlgorithmEntry
    {
        std::string name;
        std::string description;
        std::vector<Domain> domains;
        //! Constructor parameters accepted in configs.
        std::vector<std::string> settings;
        //! Control parameters that can be watched while running.
        std::vector<std::string> exposed;
        std::function<std::unique_ptr<Algorithm>(const Parameters &)> make;

        [[nodiscard]] bool supports(Domain d) const;
    };

    //! Built-in algorithms by name.
    [[nodiscard]] const std::map<std::string, AlgorithmEntry> &registry();

    //! Throws UnknownIdError.
    [[nodiscard]] const AlgorithmEntry &lookup(const std::string &name);
} // namespace optibench::algorithms
