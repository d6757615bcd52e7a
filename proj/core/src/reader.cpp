#include "optibench/reader.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <fstream>
#include <map>
#include <optional>

#include "optibench/errors.hpp"
#include "optibench/format.hpp"

namespace fs = std::filesystem;

namespace optibench
{
    std::size_t DataSet::run_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto &p : problems)
            total += p.runs.size();
        return total;
    }

    std::vector<const RunData *> DataSet::runs(const int problem_id, const std::size_t dimension,
                                               const int instance_id) const
    {
        std::vector<const RunData *> out;
        for (const auto &p : problems)
            if (p.problem_id == problem_id && p.dimension == dimension)
                for (const auto &r : p.runs)
                    if (r.instance_id == instance_id)
                        out.push_back(&r);
        return out;
    }

    namespace
    {
        std::vector<std::string> read_lines(const fs::path &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw IoError(path, "cannot open for reading");
            std::vector<std::string> lines;
            std::string line;
            while (std::getline(in, line))
            {
                if (!line.empty() && line.back() == '\r')
                    line.pop_back();
                lines.push_back(std::move(line));
            }
            return lines;
        }

        //! Space-separated tokens; empty tokens (double spaces) are an error signalled by nullopt.
        std::optional<std::vector<std::string_view>> split_spaces(const std::string_view line)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto end = line.find(' ', start);
                const auto token = line.substr(start, end == std::string_view::npos ? end : end - start);
                if (token.empty())
                    return std::nullopt;
                out.push_back(token);
                if (end == std::string_view::npos)
                    return out;
                start = end + 1;
            }
        }

        struct RawRun
        {
            std::size_t header_line;
            std::vector<std::string> columns;
            std::vector<std::vector<double>> rows;
        };

        std::vector<RawRun> parse_dat(const fs::path &path)
        {
            const auto lines = read_lines(path);
            std::vector<RawRun> runs;
            for (std::size_t i = 0; i < lines.size(); ++i)
            {
                const auto lineno = i + 1;
                const std::string_view line = lines[i];
                if (line.empty())
                    throw FormatError(path, lineno, "empty line");

                const auto tokens = split_spaces(line);
                if (!tokens)
                    throw FormatError(path, lineno, "cells must be separated by single spaces");

                if (line.front() == '"')
                {
                    RawRun run{lineno, {}, {}};
                    for (const auto t : *tokens)
                    {
                        if (t.size() < 3 || t.front() != '"' || t.back() != '"' ||
                            t.substr(1, t.size() - 2).find('"') != std::string_view::npos)
                            throw FormatError(path, lineno, "malformed header cell " + std::string(t));
                        run.columns.emplace_back(t.substr(1, t.size() - 2));
                    }
                    if (run.columns.size() < 3 || run.columns[0] != "evaluations" || run.columns[1] != "raw_y" ||
                        run.columns[2] != "raw_y_best")
                        throw FormatError(path, lineno,
                                          "header must start with \"evaluations\" \"raw_y\" \"raw_y_best\"");
                    runs.push_back(std::move(run));
                    continue;
                }

                if (runs.empty())
                    throw FormatError(path, lineno, "data row before the first header line");
                auto &run = runs.back();
                if (tokens->size() != run.columns.size())
                    throw FormatError(path, lineno,
                                      "expected " + std::to_string(run.columns.size()) + " columns, got " +
                                          std::to_string(tokens->size()));
                std::vector<double> row;
                row.reserve(tokens->size());
                for (const auto t : *tokens)
                {
                    const auto v = format::parse_double(t);
                    if (!v)
                        throw FormatError(path, lineno, "non-numeric cell '" + std::string(t) + "'");
                    row.push_back(*v);
                }
                const auto t = format::parse_integer((*tokens)[0]);
                if (!t || *t < 1)
                    throw FormatError(path, lineno, "evaluation count must be a positive integer");
                if (!run.rows.empty() && row[0] <= run.rows.back()[0])
                    throw FormatError(path, lineno, "evaluation counts must be strictly increasing within a run");
                run.rows.push_back(std::move(row));
            }
            return runs;
        }

        //! Cursor over `key = value, key = "value", ...`.
        class HeaderParser
        {
        public:
            HeaderParser(const fs::path &file, const std::size_t line, std::string_view text)
                : file_(file), line_(line), text_(text)
            {
            }

            std::map<std::string, std::string> parse()
            {
                std::map<std::string, std::string> out;
                while (true)
                {
                    const auto eq = text_.find(" = ", pos_);
                    if (eq == std::string_view::npos)
                        fail("expected 'key = value'");
                    std::string key(text_.substr(pos_, eq - pos_));
                    pos_ = eq + 3;
                    std::string value;
                    if (pos_ < text_.size() && text_[pos_] == '"')
                    {
                        const auto close = text_.find('"', pos_ + 1);
                        if (close == std::string_view::npos)
                            fail("unterminated quoted value for " + key);
                        value = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
                        pos_ = close + 1;
                    }
                    else
                    {
                        const auto comma = text_.find(',', pos_);
                        value = std::string(text_.substr(pos_, comma == std::string_view::npos ? comma : comma - pos_));
                        pos_ = comma == std::string_view::npos ? text_.size() : comma;
                    }
                    if (!out.emplace(key, value).second)
                        fail("duplicate key " + key);
                    if (pos_ == text_.size())
                        return out;
                    if (text_.substr(pos_, 2) != ", ")
                        fail("expected ', ' after value of " + key);
                    pos_ += 2;
                }
            }

        private:
            [[noreturn]] void fail(const std::string &what) const { throw FormatError(file_, line_, what); }

            const fs::path &file_;
            std::size_t line_;
            std::string_view text_;
            std::size_t pos_ = 0;
        };

        struct RunRef
        {
            int instance;
            std::size_t evaluations;
            double best;
        };

        struct PendingStanza
        {
            ProblemData data;
            std::size_t runs_line;
            std::vector<RunRef> refs;
        };

        std::vector<PendingStanza> parse_info(const fs::path &path)
        {
            const auto lines = read_lines(path);
            std::vector<PendingStanza> out;
            std::size_t i = 0;
            while (i < lines.size())
            {
                if (lines[i].empty())
                {
                    ++i;
                    continue;
                }
                if (i + 2 >= lines.size())
                    throw FormatError(path, i + 1, "incomplete stanza (expected 3 lines)");

                PendingStanza s;
                s.data.info_file = path;
                const auto fields = HeaderParser(path, i + 1, lines[i]).parse();
                auto require = [&](const char *key) -> const std::string & {
                    const auto it = fields.find(key);
                    if (it == fields.end())
                        throw FormatError(path, i + 1, std::string("missing key ") + key);
                    return it->second;
                };
                s.data.suite = require("suite");
                const auto fid = format::parse_integer(require("funcId"));
                if (!fid || *fid < 1)
                    throw FormatError(path, i + 1, "funcId must be a positive integer");
                s.data.problem_id = static_cast<int>(*fid);
                s.data.problem_name = require("funcName");
                const auto dim = format::parse_integer(require("DIM"));
                if (!dim || *dim < 1)
                    throw FormatError(path, i + 1, "DIM must be a positive integer");
                s.data.dimension = static_cast<std::size_t>(*dim);
                const auto &maxi = require("maximization");
                if (maxi != "T" && maxi != "F")
                    throw FormatError(path, i + 1, "maximization must be \"T\" or \"F\"");
                s.data.maximization = maxi == "T";
                s.data.algorithm_id = require("algId");
                s.data.algorithm_info = require("algInfo");
                if (fields.size() != 7)
                    throw FormatError(path, i + 1, "unexpected keys in header line");

                if (lines[i + 1] != "%")
                    throw FormatError(path, i + 2, "expected '%'");

                s.runs_line = i + 3;
                const std::string_view runs = lines[i + 2];
                std::size_t pos = runs.find(", ");
                s.data.dat_file = std::string(runs.substr(0, pos));
                if (s.data.dat_file.empty())
                    throw FormatError(path, s.runs_line, "missing .dat path");
                while (pos != std::string_view::npos)
                {
                    const auto start = pos + 2;
                    pos = runs.find(", ", start);
                    const auto entry = runs.substr(start, pos == std::string_view::npos ? pos : pos - start);
                    const auto colon = entry.find(':');
                    const auto bar = entry.find('|');
                    if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon)
                        throw FormatError(path, s.runs_line, "malformed run entry '" + std::string(entry) + "'");
                    const auto inst = format::parse_integer(entry.substr(0, colon));
                    const auto evals = format::parse_integer(entry.substr(colon + 1, bar - colon - 1));
                    const auto best = format::parse_double(entry.substr(bar + 1));
                    if (!inst || *inst < 1 || !evals || *evals < 1 || !best)
                        throw FormatError(path, s.runs_line, "malformed run entry '" + std::string(entry) + "'");
                    s.refs.push_back({static_cast<int>(*inst), static_cast<std::size_t>(*evals), *best});
                }
                out.push_back(std::move(s));
                i += 3;
            }
            return out;
        }
    } // namespace

    DataSet read_data_dir(const fs::path &path)
    {
        if (!fs::is_directory(path))
            throw IoError(path, "not a directory");

        std::vector<fs::path> info_files;
        for (const auto &entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".info")
                info_files.push_back(entry.path());
        std::sort(info_files.begin(), info_files.end());

        DataSet data{path, {}};
        std::map<std::string, std::vector<RawRun>> dat_cache;
        std::map<std::string, std::size_t> consumed;

        for (const auto &info : info_files)
        {
            for (auto &stanza : parse_info(info))
            {
                const auto dat_path = path / stanza.data.dat_file;
                auto it = dat_cache.find(stanza.data.dat_file);
                if (it == dat_cache.end())
                {
                    if (!fs::is_regular_file(dat_path))
                        throw FormatError(info, stanza.runs_line, "referenced data file " + stanza.data.dat_file +
                                                                      " does not exist");
                    it = dat_cache.emplace(stanza.data.dat_file, parse_dat(dat_path)).first;
                }
                auto &used = consumed[stanza.data.dat_file];
                const auto &raw_runs = it->second;
                if (used + stanza.refs.size() > raw_runs.size())
                    throw FormatError(info, stanza.runs_line,
                                      "lists more runs than " + stanza.data.dat_file + " contains (" +
                                          std::to_string(raw_runs.size()) + ")");

                for (const auto &ref : stanza.refs)
                {
                    const auto &raw = raw_runs[used++];
                    if (raw.rows.empty())
                        throw FormatError(dat_path, raw.header_line, "run without data rows");
                    const auto &last = raw.rows.back();
                    if (static_cast<std::size_t>(last[0]) != ref.evaluations)
                        throw FormatError(info, stanza.runs_line,
                                          "run of instance " + std::to_string(ref.instance) + " lists " +
                                              std::to_string(ref.evaluations) + " evaluations but its last row in " +
                                              stanza.data.dat_file + " (line " + std::to_string(raw.header_line) +
                                              ") has " + format::number(last[0]));
                    if (!(last[2] == ref.best || (std::isnan(last[2]) && std::isnan(ref.best))))
                        throw FormatError(info, stanza.runs_line,
                                          "best value of instance " + std::to_string(ref.instance) +
                                              " does not match the last row of its run in " + stanza.data.dat_file);
                    stanza.data.runs.push_back({ref.instance, ref.evaluations, ref.best, raw.columns, raw.rows});
                }
                data.problems.push_back(std::move(stanza.data));
            }
        }

        for (const auto &[file, runs] : dat_cache)
            if (consumed[file] != runs.size())
                throw FormatError(path / file, runs[consumed[file]].header_line, "run is not listed in any .info file");
        for (const auto &entry : fs::recursive_directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".dat" &&
                !dat_cache.contains(fs::relative(entry.path(), path).generic_string()))
                throw FormatError(entry.path(), 1, "data file is not referenced by any .info file");

        std::stable_sort(data.problems.begin(), data.problems.end(), [](const auto &a, const auto &b) {
            return std::tie(a.problem_id, a.problem_name, a.dimension) <
                   std::tie(b.problem_id, b.problem_name, b.dimension);
        });
        return data;
    }
} // namespace optibench
