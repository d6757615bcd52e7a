#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace optibench
{
    //! Base of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    //! Solution length or transform size does not match the problem dimension.
    class DimensionError : public Error
    {
    public:
        using Error::Error;
    };

    //! A value outside the problem's domain, e.g. a non-binary entry on a bit string.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    //! Lookup of a problem, suite or algorithm that was never registered.
    class UnknownIdError : public Error
    {
    public:
        using Error::Error;
    };

    //! Misuse of an API contract (double attach, record before run start, ...).
    class UsageError : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        IoError(std::filesystem::path path, const std::string &what)
            : Error(path.string() + ": " + what), path_(std::move(path))
        {
        }

        [[nodiscard]] const std::filesystem::path &path() const noexcept { return path_; }

    private:
        std::filesystem::path path_;
    };

    //! Malformed `.info` / `.dat` content, located by file and 1-based line.
    class FormatError : public Error
    {
    public:
        FormatError(std::filesystem::path file, const std::size_t line, const std::string &what)
            : Error(file.string() + ":" + std::to_string(line) + ": " + what), file_(std::move(file)), line_(line)
        {
        }

        [[nodiscard]] const std::filesystem::path &file() const noexcept { return file_; }
        [[nodiscard]] std::size_t line() const noexcept { return line_; }

    private:
        std::filesystem::path file_;
        std::size_t line_;
    };

    //! Invalid experiment configuration; field() names the offending key path.
    class ConfigError : public Error
    {
    public:
        ConfigError(std::string field, const std::string &what)
            : Error(field + ": " + what), field_(std::move(field))
        {
        }

        [[nodiscard]] const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };
} // namespace optibench
