#include "optibench/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace optibench::format
{
    std::string number(const double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        std::array<char, 32> buf{};
        const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
        return {buf.data(), end};
    }

    std::string number(const std::size_t value)
    {
        return std::to_string(value);
    }

    std::optional<double> parse_double(const std::string_view token)
    {
        if (token.empty())
            return std::nullopt;
        double value = 0.0;
        const auto *first = token.data();
        const auto *last = token.data() + token.size();
        // from_chars rejects a leading '+', which we never write anyway.
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            return std::nullopt;
        return value;
    }

    std::optional<long long> parse_integer(const std::string_view token)
    {
        if (token.empty())
            return std::nullopt;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            return std::nullopt;
        return value;
    }
} // namespace optibench::format
