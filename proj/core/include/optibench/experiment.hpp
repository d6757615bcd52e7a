#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algorithms.hpp"
#include "suite.hpp"
#include "trigger.hpp"

namespace optibench
{
    //! Declarative description of algorithm x suite x budget x repetitions x logging.
    //!
    //! JSON form (unknown keys are rejected at every level):
    //!
    //!   {
    //!     "suite": "PBO-mini" | {"domain": "boolean" | "continuous", "problem_ids": [1, 2]},
    //!     "instance_ids": [1, 2], "dimensions": [16],
    //!     "algorithm": {"name": "rls", "parameters": {}},
    //!     "budget": 1000, "repetitions": 2, "master_seed": 42,
    //!     "triggers": ["always" | "on_improvement" | {"each": 10} | {"at": [1, 5]} | {"targets": [8, 16]}],
    //!     "watchers": ["mutation_rate"],
    //!     "output": {"root_dir": "out", "folder_name": "run", "algorithm_id": "rls", "algorithm_info": ""},
    //!     "stop_on_optimum": true, "parallelism": 1
    //!   }
    //!
    //! triggers defaults to ["on_improvement"], watchers to [], stop_on_optimum to true, parallelism to 1,
    //! output.folder_name to "optibench", output.algorithm_id to the algorithm name.
    struct ExperimentConfig
    {
        std::string suite_name;
        Domain domain = Domain::Boolean;
        std::vector<int> problem_ids;
        std::vector<int> instance_ids;
        std::vector<std::size_t> dimensions;

        std::string algorithm;
        algorithms::Parameters algorithm_parameters;

        std::size_t budget = 0;
        std::size_t repetitions = 1;
        std::uint64_t master_seed = 0;

        std::vector<Trigger> triggers;
        std::vector<std::string> watchers;

        struct Output
        {
            std::filesystem::path root_dir;
            std::string folder_name = "optibench";
            std::string algorithm_id;
            std::string algorithm_info;
        } output;

        bool stop_on_optimum = true;
        std::size_t parallelism = 1;

        //! Throws ConfigError naming the offending field.
        [[nodiscard]] static ExperimentConfig from_json(std::string_view text);

        //! Throws IoError when the file cannot be read, ConfigError otherwise.
        [[nodiscard]] static ExperimentConfig from_file(const std::filesystem::path &path);

        //! Registry and range checks that do not touch the filesystem. Throws ConfigError.
        void validate() const;

        [[nodiscard]] Suite make_suite() const;

        //! suite size x repetitions
        [[nodiscard]] std::size_t total_runs() const;
    };

    struct ExperimentSummary
    {
        std::size_t runs = 0;
        std::size_t optima_hit = 0;
        std::filesystem::path output;
    };

    //! SplitMix64 finalizer.
    [[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

    //! Seed of one run: z = master; then z = splitmix64(z ^ v) for v in (problem_id, dimension, instance_id,
    //! repetition). Part of the output contract; changing it changes every data directory.
    [[nodiscard]] std::uint64_t run_seed(std::uint64_t master_seed, int problem_id, std::size_t dimension,
                                         int instance_id, std::size_t repetition) noexcept;

    //! For every suite element and repetition: build the instance, attach the analyzer logger, run,
    //! reset. Problems are sharded across `parallelism` workers by problem id so every `.info`/`.dat`
    //! file has a single writer; the output bytes do not depend on the degree of parallelism.
    [[nodiscard]] ExperimentSummary run_experiment(const ExperimentConfig &config);
} // namespace optibench
