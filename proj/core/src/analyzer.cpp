#include "optibench/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "optibench/errors.hpp"
#include "optibench/format.hpp"

namespace fs = std::filesystem;

namespace optibench
{
    bool is_file_safe(const std::string_view name) noexcept
    {
        return !name.empty() && std::all_of(name.begin(), name.end(), [](const char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
    }

    namespace
    {
        void require_quotable(const std::string &value, const std::string &what)
        {
            if (value.find_first_of("\"\r\n") != std::string::npos)
                throw UsageError(what + " must not contain double quotes or line breaks");
        }

        fs::path claim_directory(const fs::path &root, const std::string &folder, const AnalyzerLogger::FolderPolicy policy)
        {
            std::error_code ec;
            fs::create_directories(root, ec);
            if (ec)
                throw IoError(root, "cannot create output root: " + ec.message());

            if (policy == AnalyzerLogger::FolderPolicy::Shared)
            {
                const auto dir = root / folder;
                fs::create_directories(dir, ec);
                if (ec)
                    throw IoError(dir, "cannot create run folder: " + ec.message());
                return dir;
            }

            for (std::size_t suffix = 0;; ++suffix)
            {
                const auto dir = root / (suffix == 0 ? folder : folder + "-" + std::to_string(suffix));
                if (fs::exists(dir))
                    continue;
                if (!fs::create_directory(dir, ec))
                {
                    if (fs::exists(dir))
                        continue;
                    throw IoError(dir, "cannot create run folder: " + ec.message());
                }
                return dir;
            }
        }
    } // namespace

    fs::path claim_run_directory(const fs::path &root, const std::string &folder)
    {
        return claim_directory(root, folder, AnalyzerLogger::FolderPolicy::Unique);
    }

    AnalyzerLogger::AnalyzerLogger(Settings settings, TriggerSet triggers, std::vector<Watcher> watchers)
        : settings_(std::move(settings)), triggers_(std::move(triggers)), watchers_(std::move(watchers))
    {
        if (!is_file_safe(settings_.folder_name))
            throw UsageError("folder name '" + settings_.folder_name + "' must match [A-Za-z0-9_.-]+");
        require_quotable(settings_.algorithm_id, "algorithm id");
        require_quotable(settings_.algorithm_info, "algorithm info");
        validate_watchers(watchers_);
        dir_ = claim_directory(settings_.root, settings_.folder_name, settings_.folder_policy);
    }

    AnalyzerLogger::~AnalyzerLogger()
    {
        if (dat_.is_open())
            dat_.close();
    }

    std::string AnalyzerLogger::dat_relative_path() const
    {
        const auto id = std::to_string(meta_->problem_id);
        return "data_f" + id + "_" + meta_->name + "/IOHprofiler_f" + id + "_DIM" + std::to_string(meta_->dimension) +
               ".dat";
    }

    void AnalyzerLogger::on_run_start(const ProblemMetadata &meta)
    {
        if (!is_file_safe(meta.name))
            throw UsageError("problem name '" + meta.name + "' must match [A-Za-z0-9_.-]+ to be logged");
        require_quotable(meta.suite, "suite name");
        meta_ = meta;
        header_pending_ = true;
        last_.reset();
        last_stored_ = false;
        triggers_.reset();
    }

    LogRecord AnalyzerLogger::make_record(const Evaluation &e) const
    {
        LogRecord r{e.evaluations, e.y, e.y_best, e.improved, {}};
        r.parameters.reserve(watchers_.size());
        for (const auto &w : watchers_)
        {
            std::optional<double> value;
            if (w.source)
                value = w.source();
            r.parameters.emplace_back(w.name, value.value_or(std::numeric_limits<double>::quiet_NaN()));
        }
        return r;
    }

    void AnalyzerLogger::on_evaluation(const Evaluation &evaluation)
    {
        if (!meta_)
            throw UsageError("analyzer logger received an evaluation before a run was started");
        last_ = evaluation;
        last_stored_ = false;

        LogRecord probe{evaluation.evaluations, evaluation.y, evaluation.y_best, evaluation.improved, {}};
        if (triggers_.fires(probe, meta_->direction))
        {
            write_row(make_record(evaluation));
            last_stored_ = true;
        }
    }

    void AnalyzerLogger::open_dat()
    {
        const auto path = dir_ / dat_relative_path();
        if (dat_.is_open() && path == dat_path_)
            return;
        if (dat_.is_open())
            dat_.close();

        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw IoError(path.parent_path(), "cannot create data folder: " + ec.message());
        dat_.open(path, std::ios::out | std::ios::app | std::ios::binary);
        if (!dat_)
            throw IoError(path, "cannot open data file for writing");
        dat_path_ = path;
    }

    void AnalyzerLogger::write_row(const LogRecord &record)
    {
        open_dat();
        if (header_pending_)
        {
            dat_ << "\"evaluations\" \"raw_y\" \"raw_y_best\"";
            for (const auto &w : watchers_)
                dat_ << " \"" << w.name << '"';
            dat_ << '\n';
            header_pending_ = false;
        }
        dat_ << format::number(record.evaluations) << ' ' << format::number(record.raw_y) << ' '
             << format::number(record.raw_y_best);
        for (const auto &[name, value] : record.parameters)
            dat_ << ' ' << format::number(value);
        dat_ << '\n';
        if (!dat_)
            throw IoError(dat_path_, "write failed");
        ++rows_written_;
    }

    void AnalyzerLogger::on_run_end(const RunSummary &summary)
    {
        if (!meta_)
            throw UsageError("analyzer logger received a run end before a run was started");
        if (last_ && !last_stored_)
        {
            write_row(make_record(*last_));
            last_stored_ = true;
        }
        if (dat_.is_open())
        {
            dat_.flush();
            if (!dat_)
                throw IoError(dat_path_, "flush failed");
        }

        const auto &m = *meta_;
        const auto name = "IOHprofiler_f" + std::to_string(m.problem_id) + "_" + m.name + ".info";
        auto &file = info_[name];
        if (file.path.empty())
            file.path = dir_ / name;

        if (file.stanzas.empty() || file.stanzas.back().dimension != m.dimension || file.stanzas.back().suite != m.suite)
        {
            std::ostringstream header;
            header << "suite = \"" << m.suite << "\", funcId = " << m.problem_id << ", funcName = \"" << m.name
                   << "\", DIM = " << m.dimension << ", maximization = \""
                   << (m.direction == Direction::Maximize ? 'T' : 'F') << "\", algId = \"" << settings_.algorithm_id
                   << "\", algInfo = \"" << settings_.algorithm_info << '"';
            file.stanzas.push_back({header.str(), m.dimension, m.suite, dat_relative_path(), {}});
        }
        file.stanzas.back().runs.push_back(std::to_string(m.instance_id) + ":" + format::number(summary.evaluations) +
                                           "|" + format::number(summary.y_best));
        write_info(file);

        meta_.reset();
        last_.reset();
    }

    void AnalyzerLogger::write_info(const InfoFile &file) const
    {
        std::ofstream out(file.path, std::ios::out | std::ios::trunc | std::ios::binary);
        if (!out)
            throw IoError(file.path, "cannot open info file for writing");
        for (const auto &s : file.stanzas)
        {
            out << s.header << "\n%\n" << s.dat_path;
            for (const auto &r : s.runs)
                out << ", " << r;
            out << '\n';
        }
        if (!out)
            throw IoError(file.path, "write failed");
    }

    void AnalyzerLogger::flush()
    {
        if (dat_.is_open())
        {
            dat_.flush();
            if (!dat_)
                throw IoError(dat_path_, "flush failed");
        }
    }

    void FinalValueLogger::on_run_end(const RunSummary &summary)
    {
        Result r{summary.y_best, summary.evaluations, 0, 0, 0};
        if (meta_)
        {
            r.problem_id = meta_->problem_id;
            r.instance_id = meta_->instance_id;
            r.dimension = meta_->dimension;
        }
        results_.push_back(r);
    }
} // namespace optibench
