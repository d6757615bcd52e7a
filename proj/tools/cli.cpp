#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>

#include "optibench/optibench.hpp"

namespace fs = std::filesystem;

namespace optibench::cli
{
    namespace
    {
        struct Options
        {
            std::optional<std::uint64_t> seed;
            std::optional<std::string> output;
            std::string path;
        };

        int load_config(const Options &opts, std::ostream &err, ExperimentConfig &config)
        {
            if (!fs::is_regular_file(opts.path))
            {
                err << "error: config file not found: " << opts.path << '\n';
                return exit_no_input;
            }
            try
            {
                config = ExperimentConfig::from_file(opts.path);
                if (opts.seed)
                    config.master_seed = *opts.seed;
                if (opts.output)
                {
                    config.output.root_dir = *opts.output;
                    config.validate();
                }
            }
            catch (const ConfigError &e)
            {
                err << "error: invalid config " << opts.path << ": " << e.what() << '\n';
                return exit_invalid_config;
            }
            catch (const IoError &e)
            {
                err << "error: " << e.what() << '\n';
                return exit_no_input;
            }
            return exit_ok;
        }

        int cmd_validate(const Options &opts, std::ostream &out, std::ostream &err)
        {
            ExperimentConfig config;
            if (const auto rc = load_config(opts, err, config); rc != exit_ok)
                return rc;
            out << "config ok: " << config.total_runs() << " runs of " << config.algorithm << " on "
                << config.make_suite().size() << " instances\n";
            return exit_ok;
        }

        int cmd_run(const Options &opts, std::ostream &out, std::ostream &err)
        {
            ExperimentConfig config;
            if (const auto rc = load_config(opts, err, config); rc != exit_ok)
                return rc;
            try
            {
                const auto summary = run_experiment(config);
                out << "runs: " << summary.runs << '\n'
                    << "optima hit: " << summary.optima_hit << '\n'
                    << "output: " << summary.output.string() << '\n';
                return exit_ok;
            }
            catch (const IoError &e)
            {
                err << "error: " << e.what() << '\n';
                return exit_io;
            }
            catch (const ConfigError &e)
            {
                err << "error: invalid config: " << e.what() << '\n';
                return exit_invalid_config;
            }
            catch (const Error &e)
            {
                err << "error: run failed: " << e.what() << '\n';
                return exit_software;
            }
        }

        int cmd_inspect(const Options &opts, std::ostream &out, std::ostream &err)
        {
            if (!fs::is_directory(opts.path))
            {
                err << "error: data directory not found: " << opts.path << '\n';
                return exit_no_input;
            }
            try
            {
                const auto data = read_data_dir(opts.path);
                // One line per (problem, dimension); best is taken over all instances and runs.
                for (const auto &p : data.problems)
                {
                    double best = p.maximization ? -std::numeric_limits<double>::infinity()
                                                 : std::numeric_limits<double>::infinity();
                    for (const auto &r : p.runs)
                        best = p.maximization ? std::max(best, r.best) : std::min(best, r.best);
                    out << "f" << p.problem_id << " " << p.problem_name << " DIM " << p.dimension
                        << ": runs = " << p.runs.size() << ", best = " << format::number(best) << '\n';
                }
                out << "total runs: " << data.run_count() << '\n';
                return exit_ok;
            }
            catch (const FormatError &e)
            {
                err << "error: malformed data: " << e.what() << '\n';
                return exit_malformed_data;
            }
            catch (const IoError &e)
            {
                err << "error: " << e.what() << '\n';
                return exit_malformed_data;
            }
        }

        int cmd_list(std::ostream &out)
        {
            const auto &registry = FunctionRegistry::instance();
            for (const auto domain : {Domain::Boolean, Domain::Continuous})
            {
                out << to_string(domain) << " functions:\n";
                for (const auto *e : registry.entries(domain))
                    out << "  " << std::setw(3) << e->problem_id << "  " << e->name << " (" << to_string(e->direction)
                        << ")\n";
            }
            out << "suites:\n";
            out << "  " << suites::pbo_mini_name << "  boolean ids 1 2 3 4 5 6\n";
            out << "  " << suites::bbob_mini_name << "  continuous ids 1 2 3 8 10\n";
            out << "algorithms:\n";
            for (const auto &[name, entry] : algorithms::registry())
                out << "  " << name << "  " << entry.description << '\n';
            return exit_ok;
        }
    } // namespace

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Benchmarking harness for iterative optimization heuristics", "optibench"};
        app.require_subcommand(1);

        Options opts;
        std::uint64_t seed = 0;
        std::string output;
        auto *seed_opt = app.add_option("--seed", seed, "Override master_seed of the config");
        auto *output_opt = app.add_option("--output", output, "Override output.root_dir of the config");

        auto *run_cmd = app.add_subcommand("run", "Run an experiment config");
        run_cmd->add_option("config", opts.path, "JSON config file")->required();
        auto *validate_cmd = app.add_subcommand("validate", "Check a config without running it");
        validate_cmd->add_option("config", opts.path, "JSON config file")->required();
        auto *inspect_cmd = app.add_subcommand("inspect", "Parse a data directory and summarize it");
        inspect_cmd->add_option("data-dir", opts.path, "Run folder written by the analyzer logger")->required();
        auto *list_cmd = app.add_subcommand("list", "List functions, suites and algorithms");

        // Global flags may also follow the subcommand.
        for (auto *sub : {run_cmd, validate_cmd})
            sub->fallthrough();

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << '\n' << app.help();
            return exit_usage;
        }

        if (*seed_opt)
            opts.seed = seed;
        if (*output_opt)
            opts.output = output;

        if (*run_cmd)
            return cmd_run(opts, out, err);
        if (*validate_cmd)
            return cmd_validate(opts, out, err);
        if (*inspect_cmd)
            return cmd_inspect(opts, out, err);
        if (*list_cmd)
            return cmd_list(out);
        return exit_usage;
    }
} // namespace optibench::cli
