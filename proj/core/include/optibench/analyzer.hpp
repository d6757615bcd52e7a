#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logger.hpp"
#include "trigger.hpp"

namespace optibench
{
    //! Writes the two-part analyzer format into `<root>/<folder>`:
    //!
    //!   IOHprofiler_f{id}_{name}.info                       one per problem id
    //!   data_f{id}_{name}/IOHprofiler_f{id}_DIM{n}.dat       one per (problem id, dimension)
    //!
    //! Every run appends a quoted header line and its rows to the `.dat` file; completed runs are
    //! listed in the `.info` file, which is rewritten after every run. No timestamps are written, so
    //! identical inputs give identical bytes.
    class AnalyzerLogger final : public Logger
    {
    public:
        enum class FolderPolicy
        {
            //! Append -1, -2, ... to the folder name until it does not exist yet.
            Unique,
            //! Write into the folder as-is, creating it when missing. Used by parallel workers that
            //! each own a disjoint set of problem ids.
            Shared
        };

        struct Settings
        {
            std::filesystem::path root;
            std::string folder_name = "optibench";
            std::string algorithm_id = "algorithm";
            std::string algorithm_info;
            FolderPolicy folder_policy = FolderPolicy::Unique;
        };

        AnalyzerLogger(Settings settings, TriggerSet triggers, std::vector<Watcher> watchers = {});

        AnalyzerLogger(const AnalyzerLogger &) = delete;
        AnalyzerLogger &operator=(const AnalyzerLogger &) = delete;
        ~AnalyzerLogger() override;

        void on_run_start(const ProblemMetadata &meta) override;
        void on_evaluation(const Evaluation &evaluation) override;
        void on_run_end(const RunSummary &summary) override;
        void flush() override;

        //! The run folder actually used (after collision handling).
        [[nodiscard]] const std::filesystem::path &output_directory() const noexcept { return dir_; }

        //! Rows written to `.dat` files so far (all runs).
        [[nodiscard]] std::size_t rows_written() const noexcept { return rows_written_; }

    private:
        struct InfoStanza
        {
            std::string header;
            std::size_t dimension;
            std::string suite;
            std::string dat_path;
            std::vector<std::string> runs;
        };

        struct InfoFile
        {
            std::filesystem::path path;
            std::vector<InfoStanza> stanzas;
        };

        void write_row(const LogRecord &record);
        void open_dat();
        void write_info(const InfoFile &file) const;
        [[nodiscard]] LogRecord make_record(const Evaluation &e) const;
        [[nodiscard]] std::string dat_relative_path() const;

        Settings settings_;
        TriggerSet triggers_;
        std::vector<Watcher> watchers_;
        std::filesystem::path dir_;

        std::optional<ProblemMetadata> meta_;
        bool header_pending_ = false;
        std::optional<Evaluation> last_;
        bool last_stored_ = false;

        std::filesystem::path dat_path_;
        std::ofstream dat_;
        //! keyed by file name; problem ids repeat across domains
        std::map<std::string, InfoFile> info_;
        std::size_t rows_written_ = 0;
    };

    //! Keeps only (best-so-far, evaluations) of each completed run, in memory.
    class FinalValueLogger final : public Logger
    {
    public:
        struct Result
        {
            double y_best;
            std::size_t evaluations;
            int problem_id;
            int instance_id;
            std::size_t dimension;
        };

        void on_run_start(const ProblemMetadata &meta) override { meta_ = meta; }
        void on_evaluation(const Evaluation &) override {}
        void on_run_end(const RunSummary &summary) override;

        //! Completed runs in completion order; empty until the first run finishes.
        [[nodiscard]] const std::vector<Result> &results() const noexcept { return results_; }
        void clear() noexcept { results_.clear(); }

    private:
        std::optional<ProblemMetadata> meta_;
        std::vector<Result> results_;
    };

    //! Creates `<root>/<folder>`, or `<folder>-1`, `-2`, ... when it exists. Returns the folder created.
    [[nodiscard]] std::filesystem::path claim_run_directory(const std::filesystem::path &root, const std::string &folder);

    //! Characters allowed in names that end up in file names: [A-Za-z0-9_.-].
    [[nodiscard]] bool is_file_safe(std::string_view name) noexcept;
} // namespace optibench
