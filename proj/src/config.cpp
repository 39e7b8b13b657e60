#include "prover/config.hpp"

#include <charconv>
#include <sstream>

namespace prover {

namespace {

std::string trimmed(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

long long parse_int(const std::string& v, int line) {
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError("expected an integer, got '" + v + "' on line " +
                              std::to_string(line),
                          line);
    return out;
}

double parse_float(const std::string& v, int line) {
    double out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError("expected a number, got '" + v + "' on line " +
                              std::to_string(line),
                          line);
    return out;
}

} // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trimmed(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value' on line " + std::to_string(line_no),
                              line_no);
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected 'key = value' on line " + std::to_string(line_no),
                              line_no);
        auto require = [&](bool ok, const std::string& what) {
            if (!ok) throw ConfigError(what + " on line " + std::to_string(line_no), line_no);
        };
        if (key == "theory") cfg.theory = value;
        else if (key == "conjectures") cfg.conjectures = value;
        else if (key == "labels") cfg.labels = value;
        else if (key == "features") cfg.features = value;
        else if (key == "treebank") cfg.treebank = value;
        else if (key == "selector") cfg.selector = value;
        else if (key == "log") cfg.log = value;
        else if (key == "results") cfg.results = value;
        else if (key == "strategies") cfg.strategies = value;
        else if (key == "mu") {
            cfg.evolution.mu = static_cast<int>(parse_int(value, line_no));
            require(cfg.evolution.mu >= 1, "mu must be >= 1");
        } else if (key == "lambda") {
            cfg.evolution.lambda = static_cast<int>(parse_int(value, line_no));
            require(cfg.evolution.lambda >= 1, "lambda must be >= 1");
        } else if (key == "generations") {
            cfg.evolution.generations = static_cast<int>(parse_int(value, line_no));
            require(cfg.evolution.generations >= 1, "generations must be >= 1");
        } else if (key == "mutation_prob") {
            cfg.evolution.mutation_prob = parse_float(value, line_no);
            require(cfg.evolution.mutation_prob >= 0.0 && cfg.evolution.mutation_prob <= 1.0,
                    "mutation_prob must be in [0, 1]");
        } else if (key == "sigma") {
            cfg.evolution.sigma = parse_float(value, line_no);
            require(cfg.evolution.sigma > 0.0, "sigma must be > 0");
        } else if (key == "budget") {
            cfg.evolution.budget = static_cast<int>(parse_int(value, line_no));
            require(cfg.evolution.budget >= 1, "budget must be >= 1");
        } else if (key == "seed") {
            long long s = parse_int(value, line_no);
            require(s >= 0, "seed must be >= 0");
            cfg.evolution.seed = static_cast<uint64_t>(s);
        } else if (key == "init") {
            if (value == "uniform")
                cfg.evolution.init = EvolutionConfig::Init::Uniform;
            else if (value == "tree-seeded")
                cfg.evolution.init = EvolutionConfig::Init::TreeSeeded;
            else
                require(false, "init must be 'uniform' or 'tree-seeded'");
        } else if (key == "step_cap") {
            cfg.evolution.step_cap = static_cast<int>(parse_int(value, line_no));
            require(cfg.evolution.step_cap >= 1, "step_cap must be >= 1");
        } else if (key == "k") {
            cfg.k = static_cast<int>(parse_int(value, line_no));
            require(cfg.k >= 1, "k must be >= 1");
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(parse_int(value, line_no));
            require(cfg.workers >= 1, "workers must be >= 1");
        } else {
            throw ConfigError("unknown key '" + key + "' on line " + std::to_string(line_no),
                              line_no);
        }
    }
    return cfg;
}

} // namespace prover
