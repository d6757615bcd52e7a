#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace optibench::format
{
    //! Shortest decimal that parses back to the same double; integral values print without a decimal point.
    //! Non-finite values print as nan, inf, -inf.
    [[nodiscard]] std::string number(double value);

    [[nodiscard]] std::string number(std::size_t value);

    //! Parses an entire token as a double (accepts nan/inf). nullopt if anything is left over.
    [[nodiscard]] std::optional<double> parse_double(std::string_view token);

    [[nodiscard]] std::optional<long long> parse_integer(std::string_view token);
} // namespace optibench::format
