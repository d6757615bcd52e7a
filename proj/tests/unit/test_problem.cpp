#include <gtest/gtest.h>

#include <random>

#include "optibench/errors.hpp"
#include "optibench/registry.hpp"
#include "support/oracles.hpp"
#include "support/recording_logger.hpp"

using namespace optibench;

namespace
{
    const FunctionEntry &boolean_fn(const int id) { return FunctionRegistry::instance().lookup(id, Domain::Boolean); }
    const FunctionEntry &continuous_fn(const int id)
    {
        return FunctionRegistry::instance().lookup(id, Domain::Continuous);
    }

    transform::InstanceTransform xor_affine(const Bits &mask, const double a, const double b)
    {
        auto t = transform::BooleanTransform::make_identity(mask.size());
        t.identity = false;
        t.xor_mask = mask;
        return {t, {a, b}};
    }
} // namespace

TEST(Problem, EvaluateIdentityInstances)
{
    auto onemax = boolean_fn(1).create(1, 4);
    EXPECT_EQ(onemax(Bits{1, 0, 1, 1}), 3.0);
    auto sphere = continuous_fn(1).create(1, 3);
    EXPECT_EQ(sphere(Solution{0, 0, 0}), 0.0);
}

TEST(Problem, EvaluatePipelineOrder)
{
    const Bits z{1, 0, 0, 1, 1};
    auto p = boolean_fn(1).create(7, 5, xor_affine(z, 2.0, 3.0));
    EXPECT_EQ(p(z), 3.0);
    EXPECT_EQ(p(Bits{0, 1, 1, 0, 0}), 2.0 * 5 + 3.0);
}

TEST(Problem, BruteForceMaximumOfInstanceTwo)
{
    auto p = boolean_fn(1).create(2, 8);
    double best = -1e300;
    for (std::uint32_t mask = 0; mask < 256; ++mask)
    {
        Bits x(8);
        for (std::size_t i = 0; i < 8; ++i)
            x[i] = static_cast<int>((mask >> i) & 1);
        best = std::max(best, p(x));
    }
    const auto &r = p.transform().range;
    EXPECT_DOUBLE_EQ(best, r.scale * 8 + r.offset);
    EXPECT_EQ(best, p.optimum().y);
}

TEST(Problem, RejectsBadInput)
{
    auto p = boolean_fn(1).create(1, 4);
    EXPECT_THROW(p(Bits{1, 0, 1}), DimensionError);
    EXPECT_THROW(p(Bits{1, 0, 2, 1}), DomainError);
    EXPECT_THROW(p(Solution{1, 0, 0.5, 1}), DomainError);
    EXPECT_EQ(p.state().evaluations, 0u);
    EXPECT_EQ(p(Solution{1, 0, 1, 1}), 3.0);

    auto s = continuous_fn(1).create(1, 2);
    EXPECT_THROW(s(Solution{1, 2, 3}), DimensionError);
    // out of bounds is evaluated normally
    EXPECT_EQ(s(Solution{10, 0}), 100.0);
}

TEST(Problem, StateTracking)
{
    auto p = boolean_fn(1).create(1, 4);
    EXPECT_EQ(p.state().y_best, -std::numeric_limits<double>::infinity());
    (void)p(Bits{0, 0, 0, 0});
    EXPECT_TRUE(p.state().improved_last_eval);
    (void)p(Bits{1, 0, 0, 0});
    EXPECT_TRUE(p.state().improved_last_eval);
    (void)p(Bits{0, 1, 0, 0});
    EXPECT_FALSE(p.state().improved_last_eval);
    EXPECT_EQ(p.state().x_best, (Solution{1, 0, 0, 0}));
    EXPECT_EQ(p.state().y_current, 1.0);
    EXPECT_EQ(p.state().evaluations, 3u);

    auto s = continuous_fn(1).create(1, 1);
    EXPECT_EQ(s.state().y_best, std::numeric_limits<double>::infinity());
    (void)s(Solution{2.0});
    (void)s(Solution{1.0});
    EXPECT_EQ(s.state().y_best, 1.0);
}

TEST(Problem, MonotoneBestAndCounterProperty)
{
    std::mt19937 rng(1);
    for (const int id : {1, 2, 3, 4, 5, 6})
    {
        auto p = boolean_fn(id).create(3, 12);
        double previous = p.state().y_best;
        for (std::size_t k = 1; k <= 500; ++k)
        {
            Bits x(12);
            for (auto &b : x)
                b = static_cast<int>(rng() & 1);
            const auto y = p(x);
            ASSERT_GE(p.state().y_best, previous);
            ASSERT_EQ(p.state().evaluations, k);
            ASSERT_LE(y, p.optimum().y + 1e-9);
            previous = p.state().y_best;
        }
    }
    for (const int id : {1, 2, 3, 8, 10})
    {
        auto p = continuous_fn(id).create(2, 5);
        std::uniform_real_distribution<double> u(-5, 5);
        double previous = p.state().y_best;
        for (int k = 0; k < 500; ++k)
        {
            Solution x(5);
            for (auto &v : x)
                v = u(rng);
            const auto y = p(x);
            ASSERT_LE(p.state().y_best, previous);
            ASSERT_GE(y, p.optimum().y - 1e-9);
            previous = p.state().y_best;
        }
    }
}

TEST(Problem, ResetEmitsSummary)
{
    auto p = boolean_fn(1).create(1, 16);
    RecordingLogger log;
    p.attach_logger(log);
    ASSERT_EQ(log.starts.size(), 1u);

    p.reset();
    EXPECT_TRUE(log.ends.empty()) << "reset of a fresh instance emits no summary";

    Bits x(16, 0);
    for (int i = 0; i < 437; ++i)
        (void)p(x);
    x.assign(16, 1);
    (void)p(x);
    p.reset();
    ASSERT_EQ(log.ends.size(), 1u);
    EXPECT_EQ(log.ends[0].evaluations, 438u);
    EXPECT_EQ(log.ends[0].y_best, 16.0);
    EXPECT_EQ(p.state().evaluations, 0u);
    EXPECT_EQ(p.logger_count(), 1u);

    for (int run = 0; run < 2; ++run)
    {
        for (int i = 0; i < 100; ++i)
            (void)p(x);
        p.reset();
        EXPECT_EQ(p.state().evaluations, 0u);
    }
    EXPECT_EQ(log.ends.size(), 3u);
    EXPECT_EQ(log.ends[2].evaluations, 100u);
}

TEST(Problem, AttachDetach)
{
    auto p = boolean_fn(1).create(1, 4);
    RecordingLogger a, b;
    p.attach_logger(a);
    EXPECT_THROW(p.attach_logger(a), UsageError);
    EXPECT_THROW(p.detach_logger(b), UsageError);
    p.attach_logger(b);
    (void)p(Bits{1, 1, 0, 0});
    (void)p(Bits{1, 1, 1, 0});
    EXPECT_EQ(a.evaluations.size(), 2u);
    EXPECT_EQ(b.evaluations.size(), 2u);

    p.detach_logger(a);
    EXPECT_EQ(a.flushes, 1);
    ASSERT_EQ(a.ends.size(), 1u);
    (void)p(Bits{1, 1, 1, 1});
    EXPECT_EQ(a.evaluations.size(), 2u);
    EXPECT_EQ(b.evaluations.size(), 3u);
    EXPECT_EQ(b.starts.front().name, "OneMax");
    EXPECT_EQ(b.starts.front().dimension, 4u);
}

TEST(Problem, FinalTargetHit)
{
    auto p = boolean_fn(1).create(1, 16);
    Bits x(16, 1);
    x[0] = 0;
    (void)p(x);
    EXPECT_EQ(p.final_target_hit(), TargetStatus::Missed);
    x[0] = 1;
    (void)p(x);
    EXPECT_EQ(p.final_target_hit(), TargetStatus::Hit);

    auto q = boolean_fn(1).create(3, 16);
    const auto &r = q.transform().range;
    (void)q(*q.optimum().x);
    EXPECT_EQ(q.state().y_best, r.scale * 16 + r.offset);
    EXPECT_EQ(q.final_target_hit(), TargetStatus::Hit);

    const ProblemMetadata meta{1, "Custom", 2, 1, Direction::Minimize, Domain::Continuous, {{-1, 1}, {-1, 1}}};
    Problem unknown(meta, ContinuousFunction([](std::span<const double>) { return 1.0; }),
                    {transform::ContinuousTransform::make_identity(2), {}});
    (void)unknown(Solution{0, 0});
    EXPECT_EQ(unknown.final_target_hit(), TargetStatus::Unknown);
}

TEST(Problem, ConstructionChecks)
{
    ProblemMetadata meta{1, "Bad", 3, 1, Direction::Maximize, Domain::Boolean, std::vector<Bounds>(3, {0, 1})};
    const BooleanFunction f = [](std::span<const int>) { return 0.0; };
    EXPECT_THROW(Problem(meta, f, {transform::BooleanTransform::make_identity(2), {}}), DimensionError);
    EXPECT_THROW(Problem(meta, f, {transform::ContinuousTransform::make_identity(3), {}}), DomainError);
    meta.instance_id = 0;
    EXPECT_THROW(Problem(meta, f, {transform::BooleanTransform::make_identity(3), {}}), DomainError);
    meta.instance_id = 1;
    meta.problem_id = 0;
    EXPECT_THROW(Problem(meta, f, {transform::BooleanTransform::make_identity(3), {}}), DomainError);
}

TEST(Problem, IdentityInstanceMatchesOracle)
{
    std::mt19937_64 rng(99);
    const std::size_t n = 20;
    auto onemax = boolean_fn(1).create(1, n);
    auto lo = boolean_fn(2).create(1, n);
    auto lin = boolean_fn(3).create(1, n);
    for (int i = 0; i < 1000; ++i)
    {
        Bits x(n);
        for (auto &b : x)
            b = static_cast<int>(rng() & 1);
        ASSERT_EQ(onemax(x), oracle::onemax(x));
        ASSERT_EQ(lo(x), oracle::leadingones(x));
        ASSERT_EQ(lin(x), oracle::linear_harmonic(x));
    }
}
