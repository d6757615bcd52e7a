#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace optibench
{
    struct RunData
    {
        int instance_id = 0;
        std::size_t evaluations = 0;
        double best = 0.0;
        std::vector<std::string> columns;
        //! One entry per stored row, values in column order.
        std::vector<std::vector<double>> rows;
    };

    //! One `.info` stanza together with the runs it references.
    struct ProblemData
    {
        std::string suite;
        int problem_id = 0;
        std::string problem_name;
        std::size_t dimension = 0;
        bool maximization = false;
        std::string algorithm_id;
        std::string algorithm_info;
        std::filesystem::path info_file;
        std::string dat_file;
        std::vector<RunData> runs;
    };

    struct DataSet
    {
        std::filesystem::path root;
        //! Sorted by (problem id, name, dimension), stanza order preserved otherwise.
        std::vector<ProblemData> problems;

        [[nodiscard]] std::size_t run_count() const noexcept;

        //! All runs of one (problem, dimension, instance) triple, in file order. Matches every problem
        //! with that id, so a directory mixing domains should be filtered by name first.
        [[nodiscard]] std::vector<const RunData *> runs(int problem_id, std::size_t dimension, int instance_id) const;
    };

    //! Parses and cross-checks a directory written by AnalyzerLogger.
    //!
    //! Throws FormatError (file + line) for malformed headers, non-numeric cells, wrong row arity,
    //! non-increasing evaluation counts, `.info`/`.dat` disagreements and unreferenced `.dat` files;
    //! IoError when the directory is missing.
    [[nodiscard]] DataSet read_data_dir(const std::filesystem::path &path);
} // namespace optibench
