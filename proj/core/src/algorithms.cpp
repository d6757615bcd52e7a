#include "optibench/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "optibench/errors.hpp"

namespace optibench::algorithms
{
    namespace
    {
        void require_domain(const Algorithm &algorithm, const Problem &problem)
        {
            if (!algorithm.supports(problem.meta_data().domain))
                throw DomainError(std::string(algorithm.name()) + " does not support " +
                                  std::string(to_string(problem.meta_data().domain)) + " problems");
        }

        bool done(const Problem &problem, const RunOptions &options, const std::size_t used)
        {
            return used >= options.budget ||
                   (options.stop_on_optimum && problem.final_target_hit() == TargetStatus::Hit);
        }

        //! "Not worse" acceptance for elitist algorithms.
        bool accept(const Direction d, const double candidate, const double incumbent)
        {
            return !strictly_better(d, incumbent, candidate);
        }

        template <typename Rng>
        Bits random_bits(const std::size_t n, Rng &rng)
        {
            std::bernoulli_distribution coin(0.5);
            Bits x(n);
            for (auto &b : x)
                b = coin(rng) ? 1 : 0;
            return x;
        }
    } // namespace

    void RandomSearch::run(Problem &problem, const RunOptions &options)
    {
        require_domain(*this, problem);
        std::mt19937_64 rng(options.seed);
        const auto &meta = problem.meta_data();
        std::size_t used = 0;
        if (meta.domain == Domain::Boolean)
        {
            while (!done(problem, options, used))
            {
                (void)problem(random_bits(meta.dimension, rng));
                ++used;
            }
            return;
        }

        Solution x(meta.dimension);
        while (!done(problem, options, used))
        {
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = std::uniform_real_distribution<double>(meta.bounds[i].lower, meta.bounds[i].upper)(rng);
            (void)problem(x);
            ++used;
        }
    }

    void RandomLocalSearch::run(Problem &problem, const RunOptions &options)
    {
        require_domain(*this, problem);
        std::mt19937_64 rng(options.seed);
        const auto &meta = problem.meta_data();
        const auto n = meta.dimension;
        if (start_ && start_->size() != n)
            throw DimensionError("RLS start point has length " + std::to_string(start_->size()) + ", expected " +
                                 std::to_string(n));

        std::size_t used = 0;
        if (done(problem, options, used))
            return;
        Bits x = start_ ? *start_ : random_bits(n, rng);
        double fx = problem(x);
        ++used;

        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        while (!done(problem, options, used))
        {
            const auto i = pick(rng);
            x[i] ^= 1;
            const double fy = problem(x);
            ++used;
            if (accept(meta.direction, fy, fx))
                fx = fy;
            else
                x[i] ^= 1;
        }
    }

    OnePlusOneEA::OnePlusOneEA(const std::optional<double> mutation_rate) : configured_rate_(mutation_rate)
    {
        if (configured_rate_ && !(*configured_rate_ > 0.0 && *configured_rate_ <= 1.0))
            throw UsageError("mutation rate must be in (0, 1]");
    }

    std::optional<double> OnePlusOneEA::parameter(const std::string_view name) const
    {
        if (name == "mutation_rate")
            return rate_;
        return std::nullopt;
    }

    void OnePlusOneEA::run(Problem &problem, const RunOptions &options)
    {
        require_domain(*this, problem);
        std::mt19937_64 rng(options.seed);
        const auto &meta = problem.meta_data();
        const auto n = meta.dimension;
        rate_ = configured_rate_.value_or(1.0 / static_cast<double>(n));
        if (!(*rate_ > 0.0 && *rate_ <= 1.0))
            throw UsageError("mutation rate must be in (0, 1]");

        std::size_t used = 0;
        if (done(problem, options, used))
            return;
        Bits x = random_bits(n, rng);
        double fx = problem(x);
        ++used;

        std::binomial_distribution<std::size_t> flips(n, *rate_);
        std::vector<std::size_t> positions(n);
        std::iota(positions.begin(), positions.end(), std::size_t{0});
        Bits y;
        while (!done(problem, options, used))
        {
            std::size_t l = 0;
            while (l == 0)
                l = flips(rng);
            // Partial Fisher-Yates over a persistent index array picks l distinct positions.
            for (std::size_t k = 0; k < l; ++k)
                std::swap(positions[k], positions[std::uniform_int_distribution<std::size_t>(k, n - 1)(rng)]);

            y = x;
            for (std::size_t k = 0; k < l; ++k)
                y[positions[k]] ^= 1;
            const double fy = problem(y);
            ++used;
            if (accept(meta.direction, fy, fx))
            {
                x.swap(y);
                fx = fy;
            }
        }
    }

    OnePlusOneES::OnePlusOneES(const std::optional<double> sigma0) : sigma0_(sigma0)
    {
        if (sigma0_ && !(*sigma0_ > 0.0 && std::isfinite(*sigma0_)))
            throw UsageError("initial step size must be positive");
    }

    std::optional<double> OnePlusOneES::parameter(const std::string_view name) const
    {
        if (name == "sigma")
            return sigma_;
        return std::nullopt;
    }

    void OnePlusOneES::run(Problem &problem, const RunOptions &options)
    {
        require_domain(*this, problem);
        std::mt19937_64 rng(options.seed);
        const auto &meta = problem.meta_data();
        const auto n = meta.dimension;
        const double width = meta.bounds.front().upper - meta.bounds.front().lower;
        const double failure_factor = std::pow(success_factor, -0.25);
        constexpr double min_sigma = 1e-12;

        sigma_ = sigma0_.value_or(0.3 * width);
        if (!(*sigma_ > 0.0))
            throw UsageError("initial step size must be positive");

        std::size_t used = 0;
        if (done(problem, options, used))
            return;

        Solution x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = std::uniform_real_distribution<double>(meta.bounds[i].lower, meta.bounds[i].upper)(rng);
        double fx = problem(x);
        ++used;

        std::normal_distribution<double> normal(0.0, 1.0);
        Solution y(n);
        while (!done(problem, options, used))
        {
            for (std::size_t i = 0; i < n; ++i)
                y[i] = x[i] + *sigma_ * normal(rng);
            const double fy = problem(y);
            ++used;
            if (accept(meta.direction, fy, fx))
            {
                x.swap(y);
                fx = fy;
                *sigma_ *= success_factor;
            }
            else
                *sigma_ *= failure_factor;
            sigma_ = std::clamp(*sigma_, min_sigma, width);
        }
    }

    void random_search(Problem &problem, const std::size_t budget, const std::uint64_t seed)
    {
        RandomSearch().run(problem, {budget, seed});
    }

    void rls(Problem &problem, const std::size_t budget, const std::uint64_t seed)
    {
        RandomLocalSearch().run(problem, {budget, seed});
    }

    void one_plus_one_ea(Problem &problem, const std::size_t budget, const std::uint64_t seed)
    {
        OnePlusOneEA().run(problem, {budget, seed});
    }

    void one_plus_one_es(Problem &problem, const std::size_t budget, const std::uint64_t seed)
    {
        OnePlusOneES().run(problem, {budget, seed});
    }

    bool AlgorithmEntry::supports(const Domain d) const
    {
        return std::find(domains.begin(), domains.end(), d) != domains.end();
    }

    namespace
    {
        std::optional<double> optional_setting(const Parameters &p, const std::string &key)
        {
            const auto it = p.find(key);
            return it == p.end() ? std::nullopt : std::optional<double>(it->second);
        }

        std::map<std::string, AlgorithmEntry> make_registry()
        {
            std::map<std::string, AlgorithmEntry> r;
            r["random_search"] = {"random_search",
                                  "uniform random sampling",
                                  {Domain::Boolean, Domain::Continuous},
                                  {},
                                  {},
                                  [](const Parameters &) { return std::make_unique<RandomSearch>(); }};
            r["rls"] = {"rls",
                        "random local search (one-bit flips, accept if not worse)",
                        {Domain::Boolean},
                        {},
                        {},
                        [](const Parameters &) { return std::make_unique<RandomLocalSearch>(); }};
            r["one_plus_one_ea"] = {"one_plus_one_ea",
                                    "(1+1) EA with standard bit mutation",
                                    {Domain::Boolean},
                                    {"mutation_rate"},
                                    {"mutation_rate"},
                                    [](const Parameters &p) {
                                        return std::make_unique<OnePlusOneEA>(optional_setting(p, "mutation_rate"));
                                    }};
            r["one_plus_one_es"] = {"one_plus_one_es",
                                    "(1+1) ES with the 1/5th success rule",
                                    {Domain::Continuous},
                                    {"sigma0"},
                                    {"sigma"},
                                    [](const Parameters &p) {
                                        return std::make_unique<OnePlusOneES>(optional_setting(p, "sigma0"));
                                    }};
            return r;
        }
    } // namespace

    const std::map<std::string, AlgorithmEntry> &registry()
    {
        static const auto r = make_registry();
        return r;
    }

    const AlgorithmEntry &lookup(const std::string &name)
    {
        const auto &r = registry();
        const auto it = r.find(name);
        if (it == r.end())
            throw UnknownIdError("unknown algorithm " + name);
        return it->second;
    }
} // namespace optibench::algorithms
