#include "optibench/experiment.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "optibench/analyzer.hpp"
#include "optibench/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace optibench
{
    namespace
    {
        void reject_unknown_keys(const json &object, const std::string &where, const std::set<std::string> &allowed)
        {
            for (const auto &[key, value] : object.items())
                if (!allowed.contains(key))
                    throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
        }

        const json &require(const json &object, const std::string &key, const std::string &where = "")
        {
            const auto it = object.find(key);
            if (it == object.end())
                throw ConfigError(where.empty() ? key : where + "." + key, "missing required key");
            return *it;
        }

        std::string as_string(const json &v, const std::string &field)
        {
            if (!v.is_string())
                throw ConfigError(field, "expected a string");
            return v.get<std::string>();
        }

        bool as_bool(const json &v, const std::string &field)
        {
            if (!v.is_boolean())
                throw ConfigError(field, "expected true or false");
            return v.get<bool>();
        }

        std::uint64_t as_unsigned(const json &v, const std::string &field)
        {
            if (!v.is_number_unsigned())
            {
                if (v.is_number_integer())
                    throw ConfigError(field, "must not be negative");
                throw ConfigError(field, "expected a non-negative integer");
            }
            return v.get<std::uint64_t>();
        }

        int as_id(const json &v, const std::string &field)
        {
            const auto value = as_unsigned(v, field);
            if (value < 1 || value > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
                throw ConfigError(field, "expected an integer >= 1");
            return static_cast<int>(value);
        }

        double as_number(const json &v, const std::string &field)
        {
            if (!v.is_number())
                throw ConfigError(field, "expected a number");
            return v.get<double>();
        }

        template <typename F>
        auto as_list(const json &v, const std::string &field, F &&convert)
        {
            if (!v.is_array())
                throw ConfigError(field, "expected an array");
            std::vector<decltype(convert(v, field))> out;
            for (std::size_t i = 0; i < v.size(); ++i)
                out.push_back(convert(v[i], field + "[" + std::to_string(i) + "]"));
            return out;
        }

        Domain parse_domain(const json &v, const std::string &field)
        {
            const auto s = as_string(v, field);
            if (s == "boolean")
                return Domain::Boolean;
            if (s == "continuous")
                return Domain::Continuous;
            throw ConfigError(field, "expected \"boolean\" or \"continuous\", got \"" + s + "\"");
        }

        Trigger parse_trigger(const json &v, const std::string &field)
        {
            try
            {
                if (v.is_string())
                {
                    const auto s = v.get<std::string>();
                    if (s == "always")
                        return Trigger::always();
                    if (s == "on_improvement")
                        return Trigger::on_improvement();
                    throw ConfigError(field, "unknown trigger \"" + s + "\"");
                }
                if (!v.is_object() || v.size() != 1)
                    throw ConfigError(field, "expected a trigger name or a single-key object");
                const auto it = v.begin();
                const std::string key = it.key();
                const json &arg = it.value();
                const auto sub = field + "." + key;
                if (key == "each")
                    return Trigger::each(as_unsigned(arg, sub));
                if (key == "at")
                    return Trigger::at(as_list(arg, sub, [](const json &x, const std::string &f) {
                        return static_cast<std::size_t>(as_unsigned(x, f));
                    }));
                if (key == "targets")
                    return Trigger::targets(as_list(arg, sub, as_number));
                throw ConfigError(sub, "unknown trigger");
            }
            catch (const DomainError &e)
            {
                throw ConfigError(field, e.what());
            }
        }
    } // namespace

    ExperimentConfig ExperimentConfig::from_json(const std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw ConfigError("<document>", "expected a JSON object");

        reject_unknown_keys(doc, "",
                            {"suite", "instance_ids", "dimensions", "algorithm", "budget", "repetitions", "master_seed",
                             "triggers", "watchers", "output", "stop_on_optimum", "parallelism"});

        ExperimentConfig c;

        const auto &suite = require(doc, "suite");
        if (suite.is_string())
        {
            c.suite_name = suite.get<std::string>();
        }
        else if (suite.is_object())
        {
            reject_unknown_keys(suite, "suite", {"name", "domain", "problem_ids"});
            c.domain = parse_domain(require(suite, "domain", "suite"), "suite.domain");
            c.problem_ids = as_list(require(suite, "problem_ids", "suite"), "suite.problem_ids", as_id);
            c.suite_name = suite.contains("name") ? as_string(suite["name"], "suite.name") : "custom";
            if (c.suite_name.empty())
                throw ConfigError("suite.name", "must not be empty");
        }
        else
            throw ConfigError("suite", "expected a suite name or an object with domain and problem_ids");

        c.instance_ids = as_list(require(doc, "instance_ids"), "instance_ids", as_id);
        c.dimensions = as_list(require(doc, "dimensions"), "dimensions", [](const json &v, const std::string &f) {
            return static_cast<std::size_t>(as_id(v, f));
        });

        const auto &algorithm = require(doc, "algorithm");
        if (algorithm.is_string())
            c.algorithm = algorithm.get<std::string>();
        else if (algorithm.is_object())
        {
            reject_unknown_keys(algorithm, "algorithm", {"name", "parameters"});
            c.algorithm = as_string(require(algorithm, "name", "algorithm"), "algorithm.name");
            if (algorithm.contains("parameters"))
            {
                const auto &params = algorithm["parameters"];
                if (!params.is_object())
                    throw ConfigError("algorithm.parameters", "expected an object");
                for (const auto &[key, value] : params.items())
                    c.algorithm_parameters[key] = as_number(value, "algorithm.parameters." + key);
            }
        }
        else
            throw ConfigError("algorithm", "expected a name or an object with name and parameters");

        c.budget = as_unsigned(require(doc, "budget"), "budget");
        c.repetitions = as_unsigned(require(doc, "repetitions"), "repetitions");
        c.master_seed = as_unsigned(require(doc, "master_seed"), "master_seed");

        if (doc.contains("triggers"))
            c.triggers = as_list(doc["triggers"], "triggers", parse_trigger);
        else
            c.triggers = {Trigger::on_improvement()};

        if (doc.contains("watchers"))
            c.watchers = as_list(doc["watchers"], "watchers", as_string);

        const auto &output = require(doc, "output");
        if (!output.is_object())
            throw ConfigError("output", "expected an object");
        reject_unknown_keys(output, "output", {"root_dir", "folder_name", "algorithm_id", "algorithm_info"});
        c.output.root_dir = as_string(require(output, "root_dir", "output"), "output.root_dir");
        if (output.contains("folder_name"))
            c.output.folder_name = as_string(output["folder_name"], "output.folder_name");
        c.output.algorithm_id =
            output.contains("algorithm_id") ? as_string(output["algorithm_id"], "output.algorithm_id") : c.algorithm;
        if (output.contains("algorithm_info"))
            c.output.algorithm_info = as_string(output["algorithm_info"], "output.algorithm_info");

        if (doc.contains("stop_on_optimum"))
            c.stop_on_optimum = as_bool(doc["stop_on_optimum"], "stop_on_optimum");
        if (doc.contains("parallelism"))
            c.parallelism = as_unsigned(doc["parallelism"], "parallelism");

        c.validate();
        return c;
    }

    ExperimentConfig ExperimentConfig::from_file(const fs::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError(path, "cannot open config file");
        std::ostringstream text;
        text << in.rdbuf();
        return from_json(text.str());
    }

    Suite ExperimentConfig::make_suite() const
    {
        if (problem_ids.empty())
            return suites::by_name(suite_name, instance_ids, dimensions);
        return {suite_name, domain, problem_ids, instance_ids, dimensions};
    }

    void ExperimentConfig::validate() const
    {
        if (budget < 1)
            throw ConfigError("budget", "must be >= 1");
        if (repetitions < 1)
            throw ConfigError("repetitions", "must be >= 1");
        if (parallelism < 1)
            throw ConfigError("parallelism", "must be >= 1");
        if (triggers.empty())
            throw ConfigError("triggers", "at least one trigger is required");

        std::optional<Suite> suite;
        try
        {
            suite.emplace(make_suite());
        }
        catch (const UnknownIdError &e)
        {
            throw ConfigError(problem_ids.empty() ? "suite" : "suite.problem_ids", e.what());
        }
        catch (const DomainError &e)
        {
            throw ConfigError("suite", e.what());
        }

        const algorithms::AlgorithmEntry *entry = nullptr;
        try
        {
            entry = &algorithms::lookup(algorithm);
        }
        catch (const UnknownIdError &e)
        {
            throw ConfigError("algorithm.name", e.what());
        }
        if (!entry->supports(suite->domain()))
            throw ConfigError("algorithm.name", algorithm + " does not support " +
                                                    std::string(to_string(suite->domain())) + " problems");
        for (const auto &[key, value] : algorithm_parameters)
            if (std::find(entry->settings.begin(), entry->settings.end(), key) == entry->settings.end())
                throw ConfigError("algorithm.parameters." + key, "not a parameter of " + algorithm);
        for (const auto &[key, value] : algorithm_parameters)
        {
            try
            {
                (void)entry->make({{key, value}});
            }
            catch (const UsageError &e)
            {
                throw ConfigError("algorithm.parameters." + key, e.what());
            }
        }

        for (std::size_t i = 0; i < watchers.size(); ++i)
            if (std::find(entry->exposed.begin(), entry->exposed.end(), watchers[i]) == entry->exposed.end())
                throw ConfigError("watchers[" + std::to_string(i) + "]",
                                  "\"" + watchers[i] + "\" is not exposed by " + algorithm);
        if (std::set<std::string>(watchers.begin(), watchers.end()).size() != watchers.size())
            throw ConfigError("watchers", "duplicate watcher names");

        if (output.root_dir.empty())
            throw ConfigError("output.root_dir", "must not be empty");
        if (!is_file_safe(output.folder_name))
            throw ConfigError("output.folder_name", "must match [A-Za-z0-9_.-]+");
        for (const auto &[field, value] : {std::pair{"output.algorithm_id", &output.algorithm_id},
                                           std::pair{"output.algorithm_info", &output.algorithm_info}})
            if (value->find_first_of("\"\r\n") != std::string::npos)
                throw ConfigError(field, "must not contain double quotes or line breaks");
        if (suite_name.find_first_of("\"\r\n") != std::string::npos)
            throw ConfigError("suite.name", "must not contain double quotes or line breaks");
    }

    std::size_t ExperimentConfig::total_runs() const
    {
        return make_suite().size() * repetitions;
    }

    std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t run_seed(const std::uint64_t master_seed, const int problem_id, const std::size_t dimension,
                           const int instance_id, const std::size_t repetition) noexcept
    {
        auto z = master_seed;
        for (const auto v : {static_cast<std::uint64_t>(problem_id), static_cast<std::uint64_t>(dimension),
                             static_cast<std::uint64_t>(instance_id), static_cast<std::uint64_t>(repetition)})
            z = splitmix64(z ^ v);
        return z;
    }

    namespace
    {
        struct ShardResult
        {
            std::size_t runs = 0;
            std::size_t optima_hit = 0;
        };

        ShardResult run_shard(const ExperimentConfig &config, const Suite &suite, const fs::path &dir,
                              const std::set<int> &problem_ids)
        {
            const auto &entry = algorithms::lookup(config.algorithm);
            const auto algorithm = entry.make(config.algorithm_parameters);

            std::vector<Watcher> watchers;
            for (const auto &name : config.watchers)
                watchers.push_back({name, [a = algorithm.get(), name] { return a->parameter(name); }});

            AnalyzerLogger logger({dir.parent_path(), dir.filename().string(), config.output.algorithm_id,
                                   config.output.algorithm_info, AnalyzerLogger::FolderPolicy::Shared},
                                  TriggerSet(config.triggers), std::move(watchers));

            ShardResult result;
            for (std::size_t i = 0; i < suite.size(); ++i)
            {
                const auto e = suite.entry(i);
                if (!problem_ids.contains(e.problem_id))
                    continue;
                auto problem = suite.create(e);
                problem.attach_logger(logger);
                for (std::size_t r = 0; r < config.repetitions; ++r)
                {
                    const auto seed = run_seed(config.master_seed, e.problem_id, e.dimension, e.instance_id, r);
                    algorithm->run(problem, {config.budget, seed, config.stop_on_optimum});
                    if (problem.final_target_hit() == TargetStatus::Hit)
                        ++result.optima_hit;
                    ++result.runs;
                    problem.reset();
                }
                problem.detach_logger(logger);
            }
            return result;
        }
    } // namespace

    ExperimentSummary run_experiment(const ExperimentConfig &config)
    {
        config.validate();
        const auto suite = config.make_suite();
        const auto dir = claim_run_directory(config.output.root_dir, config.output.folder_name);

        const auto &ids = suite.problem_ids();
        const auto workers = std::min(config.parallelism, ids.size());
        std::vector<std::set<int>> shards(workers);
        for (std::size_t i = 0; i < ids.size(); ++i)
            shards[i % workers].insert(ids[i]);

        std::vector<ShardResult> results(workers);
        try
        {
            if (workers == 1)
                results[0] = run_shard(config, suite, dir, shards[0]);
            else
            {
                std::vector<std::exception_ptr> errors(workers);
                {
                    std::vector<std::jthread> threads;
                    for (std::size_t w = 0; w < workers; ++w)
                        threads.emplace_back([&, w] {
                            try
                            {
                                results[w] = run_shard(config, suite, dir, shards[w]);
                            }
                            catch (...)
                            {
                                errors[w] = std::current_exception();
                            }
                        });
                }
                for (const auto &e : errors)
                    if (e)
                        std::rethrow_exception(e);
            }
        }
        catch (const IoError &e)
        {
            throw IoError(dir, std::string("experiment aborted, partial output left in place: ") + e.what());
        }

        ExperimentSummary summary{0, 0, dir};
        for (const auto &r : results)
        {
            summary.runs += r.runs;
            summary.optima_hit += r.optima_hit;
        }
        return summary;
    }
} // namespace optibench
