#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "optibench/errors.hpp"
#include "optibench/experiment.hpp"
#include "optibench/reader.hpp"
#include "support/temp_dir.hpp"

using namespace optibench;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace
{
    json base_config(const fs::path &root)
    {
        return {{"suite", "PBO-mini"},
                {"instance_ids", {1, 2}},
                {"dimensions", {16}},
                {"algorithm", "rls"},
                {"budget", 200},
                {"repetitions", 3},
                {"master_seed", 42},
                {"output", {{"root_dir", root.string()}, {"folder_name", "exp"}}}};
    }

    std::string field_of(const json &config)
    {
        try
        {
            (void)ExperimentConfig::from_json(config.dump());
        }
        catch (const ConfigError &e)
        {
            return e.field();
        }
        return "<accepted>";
    }
} // namespace

TEST(Experiment, ParsesDefaults)
{
    const auto c = ExperimentConfig::from_json(base_config("out").dump());
    EXPECT_EQ(c.suite_name, "PBO-mini");
    EXPECT_EQ(c.algorithm, "rls");
    EXPECT_EQ(c.output.algorithm_id, "rls");
    EXPECT_EQ(c.output.folder_name, "exp");
    EXPECT_EQ(c.triggers.size(), 1u);
    EXPECT_TRUE(c.stop_on_optimum);
    EXPECT_EQ(c.parallelism, 1u);
    EXPECT_EQ(c.total_runs(), 36u);
}

TEST(Experiment, RejectsInvalidConfigsNamingTheField)
{
    auto c = base_config("out");
    EXPECT_EQ(field_of(c), "<accepted>");

    auto bad = c;
    bad["algorithm"] = "simulated_annealing";
    EXPECT_EQ(field_of(bad), "algorithm.name");
    bad = c;
    bad["algorithm"] = {{"name", "rls"}, {"parameters", {{"mutation_rate", 0.1}}}};
    EXPECT_EQ(field_of(bad), "algorithm.parameters.mutation_rate");
    bad = c;
    bad["algorithm"] = {{"name", "one_plus_one_ea"}, {"parameters", {{"mutation_rate", 2.0}}}};
    EXPECT_EQ(field_of(bad), "algorithm.parameters.mutation_rate");
    bad = c;
    bad["budget"] = 0;
    EXPECT_EQ(field_of(bad), "budget");
    bad = c;
    bad["repetitions"] = 0;
    EXPECT_EQ(field_of(bad), "repetitions");
    bad = c;
    bad["budgett"] = 10;
    EXPECT_EQ(field_of(bad), "budgett");
    bad = c;
    bad["output"]["colour"] = "red";
    EXPECT_EQ(field_of(bad), "output.colour");
    bad = c;
    bad.erase("master_seed");
    EXPECT_EQ(field_of(bad), "master_seed");
    bad = c;
    bad["watchers"] = {"sigma"};
    EXPECT_EQ(field_of(bad), "watchers[0]");
    bad = c;
    bad["suite"] = "nope";
    EXPECT_EQ(field_of(bad), "suite");
    bad = c;
    bad["suite"] = {{"domain", "continuous"}, {"problem_ids", {1, 99}}};
    EXPECT_EQ(field_of(bad), "suite.problem_ids");
    bad = c;
    bad["triggers"] = {{{"each", 0}}};
    EXPECT_EQ(field_of(bad), "triggers[0]");
    bad = c;
    bad["triggers"] = {"sometimes"};
    EXPECT_EQ(field_of(bad), "triggers[0]");
    bad = c;
    bad["dimensions"] = {2};
    EXPECT_EQ(field_of(bad), "suite");
    bad = c;
    bad["output"]["folder_name"] = "a/b";
    EXPECT_EQ(field_of(bad), "output.folder_name");
    EXPECT_EQ(field_of(json::array()), "<document>");

    try
    {
        (void)ExperimentConfig::from_json("{");
        FAIL();
    }
    catch (const ConfigError &e)
    {
        EXPECT_EQ(e.field(), "<document>");
    }
    EXPECT_THROW((void)ExperimentConfig::from_file("/nonexistent/config.json"), IoError);
}

TEST(Experiment, ExplicitSuiteAndTriggers)
{
    auto c = base_config("out");
    c["suite"] = {{"domain", "continuous"}, {"problem_ids", {1, 3}}};
    c["dimensions"] = {2, 5};
    c["algorithm"] = {{"name", "one_plus_one_es"}, {"parameters", {{"sigma0", 1.0}}}};
    c["watchers"] = {"sigma"};
    c["triggers"] = {"on_improvement", {{"each", 10}}, {{"at", {1, 5}}}, {{"targets", {1.0, 0.1}}}};
    const auto config = ExperimentConfig::from_json(c.dump());
    EXPECT_EQ(config.domain, Domain::Continuous);
    EXPECT_EQ(config.triggers.size(), 4u);
    EXPECT_EQ(config.algorithm_parameters.at("sigma0"), 1.0);
    EXPECT_EQ(config.total_runs(), 2u * 2 * 2 * 3);
}

TEST(Experiment, RunSeedIsStableAndDistinct)
{
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFull);
    EXPECT_EQ(run_seed(42, 1, 16, 1, 0), run_seed(42, 1, 16, 1, 0));
    std::set<std::uint64_t> seen;
    for (int pid = 1; pid <= 6; ++pid)
        for (int iid = 1; iid <= 3; ++iid)
            for (std::size_t r = 0; r < 5; ++r)
                seen.insert(run_seed(7, pid, 16, iid, r));
    EXPECT_EQ(seen.size(), 6u * 3 * 5);
}

TEST(Experiment, RunsWholeSuite)
{
    TempDir tmp;
    const auto config = ExperimentConfig::from_json(base_config(tmp.path()).dump());
    const auto summary = run_experiment(config);
    EXPECT_EQ(summary.runs, 36u);
    EXPECT_EQ(summary.output, tmp.path() / "exp");

    std::size_t info_files = 0;
    for (const auto &e : fs::directory_iterator(summary.output))
        info_files += e.path().extension() == ".info";
    EXPECT_EQ(info_files, 6u);

    const auto data = read_data_dir(summary.output);
    EXPECT_EQ(data.run_count(), 36u);
    for (const auto &p : data.problems)
    {
        EXPECT_EQ(p.suite, "PBO-mini");
        EXPECT_EQ(p.runs.size(), 6u);
    }
}

TEST(Experiment, ByteIdenticalReruns)
{
    TempDir tmp;
    const auto config = ExperimentConfig::from_json(base_config(tmp.path()).dump());
    const auto first = run_experiment(config);
    const auto second = run_experiment(config);
    EXPECT_NE(first.output, second.output);
    EXPECT_EQ(snapshot(first.output), snapshot(second.output));

    auto other = config;
    other.master_seed = 43;
    EXPECT_NE(snapshot(run_experiment(other).output), snapshot(first.output));
}

TEST(Experiment, ParallelMatchesSequential)
{
    TempDir tmp;
    auto c = base_config(tmp.path());
    c["algorithm"] = "one_plus_one_ea";
    c["watchers"] = {"mutation_rate"};
    c["triggers"] = {"always"};
    c["budget"] = 50;
    const auto sequential = run_experiment(ExperimentConfig::from_json(c.dump()));
    c["parallelism"] = 4;
    const auto parallel = run_experiment(ExperimentConfig::from_json(c.dump()));
    EXPECT_EQ(sequential.runs, parallel.runs);
    EXPECT_EQ(snapshot(sequential.output), snapshot(parallel.output));
}

TEST(Experiment, BudgetOneGivesOneRowPerRun)
{
    TempDir tmp;
    auto c = base_config(tmp.path());
    c["repetitions"] = 1;
    c["budget"] = 1;
    const auto summary = run_experiment(ExperimentConfig::from_json(c.dump()));
    for (const auto &e : fs::recursive_directory_iterator(summary.output))
    {
        if (e.path().extension() != ".dat")
            continue;
        // two instances per file, each one header and one row
        std::istringstream in(slurp(e.path()));
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        ASSERT_EQ(lines.size(), 4u) << e.path();
        EXPECT_EQ(lines[0].front(), '"');
        EXPECT_EQ(lines[1].substr(0, 2), "1 ");
        EXPECT_EQ(lines[2].front(), '"');
        EXPECT_EQ(lines[3].substr(0, 2), "1 ");
    }
}

TEST(Experiment, OutputFailureReportsDirectory)
{
    TempDir tmp;
    write_file(tmp.path() / "blocker", "");
    auto c = base_config(tmp.path() / "blocker");
    EXPECT_THROW((void)run_experiment(ExperimentConfig::from_json(c.dump())), IoError);
}
