#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "optibench/algorithms.hpp"
#include "optibench/analyzer.hpp"
#include "optibench/errors.hpp"
#include "optibench/reader.hpp"
#include "optibench/registry.hpp"
#include "support/oracles.hpp"
#include "support/recording_logger.hpp"
#include "support/temp_dir.hpp"

using namespace optibench;
using namespace optibench::algorithms;

namespace
{
    Problem boolean(const int pid, const std::size_t n, const int iid = 1)
    {
        return FunctionRegistry::instance().lookup(pid, Domain::Boolean).create(iid, n);
    }

    Problem continuous(const int pid, const std::size_t n, const int iid = 1)
    {
        return FunctionRegistry::instance().lookup(pid, Domain::Continuous).create(iid, n);
    }

    std::vector<double> trace(Algorithm &alg, Problem p, const RunOptions &options)
    {
        RecordingLogger rec;
        p.attach_logger(rec);
        alg.run(p, options);
        return rec.values();
    }
} // namespace

TEST(Algorithms, RespectBudget)
{
    for (const auto &[name, entry] : registry())
    {
        const auto domain = entry.domains.front();
        auto p = domain == Domain::Boolean ? boolean(3, 32) : continuous(3, 4);
        auto alg = entry.make({});
        alg->run(p, {100, 7, false});
        EXPECT_EQ(p.state().evaluations, 100u) << name;
    }
}

TEST(Algorithms, StopOnOptimum)
{
    auto p = boolean(1, 8);
    RandomLocalSearch rls;
    rls.run(p, {100000, 3, true});
    EXPECT_EQ(p.final_target_hit(), TargetStatus::Hit);
    EXPECT_LT(p.state().evaluations, 100000u);

    auto q = boolean(1, 8);
    rls.run(q, {500, 3, false});
    EXPECT_EQ(q.state().evaluations, 500u);
}

TEST(Algorithms, RandomSearchStaysInBounds)
{
    auto p = continuous(1, 3);
    RandomSearch rs;
    rs.run(p, {200, 11, true});
    EXPECT_EQ(p.state().evaluations, 200u);
    // Every point of [-5, 5]^3 is within squared distance 75 of the optimum.
    EXPECT_LE(p.state().y_best, 75.0);
}

TEST(Algorithms, SeededDeterminism)
{
    for (const auto &[name, entry] : registry())
    {
        const auto domain = entry.domains.front();
        auto make = [&] { return domain == Domain::Boolean ? boolean(2, 24, 3) : continuous(3, 3, 2); };
        auto a = entry.make({});
        auto b = entry.make({});
        const auto ta = trace(*a, make(), {300, 99, false});
        const auto tb = trace(*b, make(), {300, 99, false});
        EXPECT_EQ(ta, tb) << name;
        auto c = entry.make({});
        EXPECT_NE(ta, trace(*c, make(), {300, 100, false})) << name;
    }
}

TEST(Algorithms, BestSoFarMonotone)
{
    RandomLocalSearch rls;
    OnePlusOneEA ea;
    for (Algorithm *alg : std::initializer_list<Algorithm *>{&rls, &ea})
    {
        auto p = boolean(1, 50, 4);
        RecordingLogger rec;
        p.attach_logger(rec);
        alg->run(p, {2000, 5, false});
        ASSERT_FALSE(rec.evaluations.empty());
        for (std::size_t i = 1; i < rec.evaluations.size(); ++i)
            ASSERT_GE(rec.evaluations[i].y_best, rec.evaluations[i - 1].y_best) << alg->name();
    }
}

TEST(Algorithms, RlsReachesOneMaxOptimum)
{
    const double expected = oracle::coupon_collector(16);
    EXPECT_NEAR(expected, 54.09, 0.01);
    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        auto p = boolean(1, 16);
        rls(p, 10000, seed);
        ASSERT_EQ(p.final_target_hit(), TargetStatus::Hit);
        total += p.state().evaluations;
    }
    // A random start has about n/2 ones left to find, so the mean sits well below the all-zeros bound.
    EXPECT_LT(static_cast<double>(total) / 50.0, expected);
}

TEST(Algorithms, RlsXorShiftEquivalence)
{
    for (const std::size_t n : {16u, 64u})
        for (std::uint64_t seed = 0; seed < 20; ++seed)
        {
            std::mt19937_64 rng(seed * 7919 + n);
            std::bernoulli_distribution coin(0.5);
            Bits x0(n), z(n), shifted(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                x0[i] = coin(rng);
                z[i] = coin(rng);
                shifted[i] = x0[i] ^ z[i];
            }
            auto t = transform::BooleanTransform::make_identity(n);
            t.identity = false;
            t.xor_mask = z;
            const auto &onemax = FunctionRegistry::instance().lookup(1, Domain::Boolean);

            RandomLocalSearch from_x0(x0), from_shifted(shifted);
            const auto plain = trace(from_x0, onemax.create(1, n), {500, seed, false});
            const auto xored = trace(from_shifted, onemax.create(7, n, {t, {}}), {500, seed, false});
            ASSERT_EQ(plain.size(), 500u);
            ASSERT_EQ(plain, xored) << "n=" << n << " seed=" << seed;
        }
}

TEST(Algorithms, DomainMismatch)
{
    auto b = boolean(1, 8);
    auto c = continuous(1, 2);
    EXPECT_THROW(RandomLocalSearch().run(c, {}), DomainError);
    EXPECT_THROW(OnePlusOneEA().run(c, {}), DomainError);
    EXPECT_THROW(OnePlusOneES().run(b, {}), DomainError);
    EXPECT_THROW(OnePlusOneEA(0.0).run(b, {}), UsageError);
    EXPECT_THROW(OnePlusOneES(-1.0).run(c, {}), UsageError);
}

TEST(Algorithms, EaMutationRateColumnIsConstant)
{
    TempDir tmp;
    OnePlusOneEA ea;
    EXPECT_FALSE(ea.parameter("mutation_rate"));
    AnalyzerLogger logger({tmp.path(), "ea", "ea", "", AnalyzerLogger::FolderPolicy::Unique},
                          TriggerSet{Trigger::always()},
                          {Watcher{"mutation_rate", [&ea] { return ea.parameter("mutation_rate"); }}});
    auto p = boolean(1, 40);
    p.attach_logger(logger);
    ea.run(p, {200, 1, false});
    p.reset();
    const auto data = read_data_dir(logger.output_directory());
    const auto &rows = data.problems.at(0).runs.at(0).rows;
    ASSERT_EQ(rows.size(), 200u);
    for (const auto &row : rows)
        ASSERT_EQ(row[3], 1.0 / 40);
    EXPECT_FALSE(ea.parameter("sigma"));
}

TEST(Algorithms, EsSigmaColumnChanges)
{
    TempDir tmp;
    OnePlusOneES es;
    AnalyzerLogger logger({tmp.path(), "es", "es", "", AnalyzerLogger::FolderPolicy::Unique},
                          TriggerSet{Trigger::always()}, {Watcher{"sigma", [&es] { return es.parameter("sigma"); }}});
    auto p = continuous(1, 5);
    p.attach_logger(logger);
    es.run(p, {300, 2, false});
    p.reset();
    const auto rows = read_data_dir(logger.output_directory()).problems.at(0).runs.at(0).rows;
    std::vector<double> sigma;
    for (const auto &row : rows)
        sigma.push_back(row[3]);
    EXPECT_EQ(sigma.front(), 3.0);
    EXPECT_GT(std::set<double>(sigma.begin(), sigma.end()).size(), 10u);
    for (const auto s : sigma)
    {
        EXPECT_GE(s, 1e-12);
        EXPECT_LE(s, 10.0);
    }
}

TEST(Algorithms, EsSolvesSphere)
{
    int solved = 0;
    for (std::uint64_t seed = 0; seed < 15; ++seed)
    {
        auto p = continuous(1, 5);
        one_plus_one_es(p, 5000, seed);
        solved += p.state().y_best <= 1e-6;
    }
    EXPECT_GE(solved, 12);
}

TEST(Algorithms, RegistryMetadata)
{
    EXPECT_THROW((void)lookup("nope"), UnknownIdError);
    EXPECT_EQ(lookup("one_plus_one_ea").exposed, std::vector<std::string>{"mutation_rate"});
    EXPECT_EQ(lookup("one_plus_one_es").exposed, std::vector<std::string>{"sigma"});
    EXPECT_TRUE(lookup("random_search").supports(Domain::Continuous));
    EXPECT_FALSE(lookup("rls").supports(Domain::Continuous));
    const auto ea = lookup("one_plus_one_ea").make({{"mutation_rate", 0.25}});
    auto p = boolean(1, 8);
    ea->run(p, {10, 0, false});
    EXPECT_EQ(ea->parameter("mutation_rate"), 0.25);
}
