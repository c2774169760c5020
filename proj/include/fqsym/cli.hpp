#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fqsym/identities.hpp"

namespace fqsym::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

struct CliConfig {
    std::string command;   // verify | expand | invert | oracle
    std::string target;    // verify: theorem | ung | extras
    std::string parts = "all";
    bool parts_given = false;
    std::size_t max_degree = 6;
    std::optional<std::size_t> degree;
    std::string basis;     // F | G | S | R, empty for the series default
    std::string series;
    std::string which;
    std::string output = "text";
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    int alphabet = 3;
    bool timing = false;
    std::optional<Corruption> corruption;
};

/// "all", "even", "odd" or "set:a,b,c".
PartSet parse_parts(std::string_view spec);
/// "degree:term" or "degree:term:delta".
Corruption parse_corruption(std::string_view spec);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
/// max_enum_env is the value of FQSYM_MAX_ENUM, if set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* max_enum_env = nullptr);

} // namespace fqsym::cli
