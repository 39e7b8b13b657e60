#pragma once

// Run configuration: `key = value` file with `#` comments, unknown keys
// rejected, GA defaults from EvolutionConfig.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "prover/evolve.hpp"

namespace prover {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
};

struct RunConfig {
    // paths
    std::string theory;
    std::string conjectures;
    std::string labels;
    std::string features;
    std::string treebank;
    std::string selector;
    std::string log;
    std::string results;
    std::string strategies; // optional custom library file

    EvolutionConfig evolution;
    int k = 16;      // expected assertion registry size
    int workers = 1;
};

RunConfig parse_config(std::string_view text);

} // namespace prover
