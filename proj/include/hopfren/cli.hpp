#pragma once

#include "hopfren/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hopfren::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
    Alphabet alphabet = Alphabet::standard();
    std::string command;
    std::string word;
    OutputFormat format = OutputFormat::Text;
    int order = 4;
    std::optional<double> c;
    std::optional<double> eps;
    std::size_t max_len = 4;
    std::size_t max_len_cap = 8;
    std::optional<std::uint64_t> seed;  // reserved
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< bad word, failed suite, numeric failure
inline constexpr int kExitUsage = 2;    ///< bad flags or configuration

/// Environment variable naming an optional JSON config file.
inline constexpr const char* kConfigEnv = "HOPFREN_CONFIG";

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfren::cli
