#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optibench::cli
{
    // sysexits-style codes
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_invalid_config = 2;
    inline constexpr int exit_malformed_data = 3;
    inline constexpr int exit_usage = 64;
    inline constexpr int exit_no_input = 66;
    inline constexpr int exit_software = 70;
    inline constexpr int exit_io = 74;

    //! Entry point of the `optibench` tool; args excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
} // namespace optibench::cli
