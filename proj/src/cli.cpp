#include "prover/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "prover/config.hpp"
#include "prover/corpus.hpp"

namespace prover {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: prover <command> [--flag value ...]\n"
    "\n"
    "commands:\n"
    "  gen        --theory T --n N --out F.cnj [--seed S] [--depth D] [--budget B]\n"
    "  label      --theory T --conjectures F.cnj --out F.csv [--budget B]\n"
    "  featurize  --theory T --conjectures F.cnj --out F.csv\n"
    "  train      --features F.csv --labels L.csv --out F.tree\n"
    "  evolve     --theory T --conjectures F.cnj --treebank F.tree\n"
    "             --selector OUT --log OUT [--config C] [--seed S] [--budget B]\n"
    "             [--workers W] [--mu N] [--lambda N] [--generations N]\n"
    "             [--mutation-prob P] [--sigma S] [--init uniform|tree-seeded]\n"
    "  prove      --theory T --conjectures F.cnj --selector F --treebank F.tree\n"
    "             [--id GOAL] [--budget B]\n"
    "  eval       --theory T --conjectures F.cnj --selector F --treebank F.tree\n"
    "             [--results OUT] [--budget B] [--workers W]\n"
    "  baselines  --theory T --conjectures F.cnj [--budget B] [--workers W]\n"
    "\n"
    "common flags: --config PATH (key = value file), --strategies PATH,\n"
    "--seed N, --budget N, --workers N\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << content;
}

struct Flags {
    std::map<std::string, std::string> values;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    std::string get(const std::string& k, const std::string& fallback = {}) const {
        auto it = values.find(k);
        return it == values.end() ? fallback : it->second;
    }
    std::string require(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) throw UsageError("missing required flag --" + k);
        return it->second;
    }
    long long get_int(const std::string& k, long long fallback) const {
        auto it = values.find(k);
        if (it == values.end()) return fallback;
        long long out = 0;
        const std::string& v = it->second;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size())
            throw UsageError("flag --" + k + " expects an integer, got '" + v + "'");
        return out;
    }
    double get_float(const std::string& k, double fallback) const {
        auto it = values.find(k);
        if (it == values.end()) return fallback;
        double out = 0;
        const std::string& v = it->second;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size())
            throw UsageError("flag --" + k + " expects a number, got '" + v + "'");
        return out;
    }
};

Flags parse_flags(const std::vector<std::string>& args, size_t start,
                  const std::set<std::string>& allowed) {
    Flags f;
    for (size_t i = start; i < args.size(); i += 2) {
        const std::string& a = args[i];
        if (a.size() < 3 || a.rfind("--", 0) != 0)
            throw UsageError("expected a --flag, got '" + a + "'");
        std::string name = a.substr(2);
        if (!allowed.count(name)) throw UsageError("unknown flag --" + name);
        if (i + 1 >= args.size()) throw UsageError("flag --" + name + " needs a value");
        f.values[name] = args[i + 1];
    }
    return f;
}

// config file values first, explicit flags override
RunConfig merged_config(const Flags& f) {
    RunConfig cfg;
    if (f.has("config")) cfg = parse_config(read_file(f.get("config")));
    if (f.has("theory")) cfg.theory = f.get("theory");
    if (f.has("conjectures")) cfg.conjectures = f.get("conjectures");
    if (f.has("labels")) cfg.labels = f.get("labels");
    if (f.has("features")) cfg.features = f.get("features");
    if (f.has("treebank")) cfg.treebank = f.get("treebank");
    if (f.has("selector")) cfg.selector = f.get("selector");
    if (f.has("log")) cfg.log = f.get("log");
    if (f.has("results")) cfg.results = f.get("results");
    if (f.has("strategies")) cfg.strategies = f.get("strategies");
    cfg.evolution.mu = static_cast<int>(f.get_int("mu", cfg.evolution.mu));
    cfg.evolution.lambda = static_cast<int>(f.get_int("lambda", cfg.evolution.lambda));
    cfg.evolution.generations =
        static_cast<int>(f.get_int("generations", cfg.evolution.generations));
    cfg.evolution.mutation_prob = f.get_float("mutation-prob", cfg.evolution.mutation_prob);
    cfg.evolution.sigma = f.get_float("sigma", cfg.evolution.sigma);
    cfg.evolution.budget = static_cast<int>(f.get_int("budget", cfg.evolution.budget));
    cfg.evolution.seed = static_cast<uint64_t>(f.get_int("seed",
        static_cast<long long>(cfg.evolution.seed)));
    if (f.has("init")) {
        const std::string v = f.get("init");
        if (v == "uniform")
            cfg.evolution.init = EvolutionConfig::Init::Uniform;
        else if (v == "tree-seeded")
            cfg.evolution.init = EvolutionConfig::Init::TreeSeeded;
        else
            throw UsageError("--init must be 'uniform' or 'tree-seeded'");
    }
    cfg.workers = static_cast<int>(f.get_int("workers", cfg.workers));
    if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
    return cfg;
}

StrategyLibrary load_library(const RunConfig& cfg) {
    if (cfg.strategies.empty()) return default_library();
    return parse_library(read_file(cfg.strategies));
}

Theory load_theory(const RunConfig& cfg) {
    if (cfg.theory.empty()) throw UsageError("missing required flag --theory");
    return parse_theory(read_file(cfg.theory));
}

std::vector<Conjecture> load_conjectures(const RunConfig& cfg, const Theory& thy) {
    if (cfg.conjectures.empty()) throw UsageError("missing required flag --conjectures");
    return parse_conjectures(read_file(cfg.conjectures), thy);
}

TreeBank load_treebank(const RunConfig& cfg) {
    if (cfg.treebank.empty()) throw UsageError("missing required flag --treebank");
    TreeBank bank = parse_treebank(read_file(cfg.treebank));
    const int k = static_cast<int>(assertion_catalog().size());
    if (cfg.k != k)
        throw DataError("config K = " + std::to_string(cfg.k) +
                        " does not match the assertion registry size " + std::to_string(k));
    for (const auto& t : bank.trees)
        for (int a : {t.root, t.when_true.assertion, t.when_false.assertion})
            if (a < 0 || a >= k)
                throw DataError("treebank assertion index " + std::to_string(a) +
                                " out of range for registry size " + std::to_string(k));
    return bank;
}

Selector load_selector(const RunConfig& cfg, const TreeBank& bank,
                       const StrategyLibrary& lib) {
    if (cfg.selector.empty()) throw UsageError("missing required flag --selector");
    Selector sel = parse_selector(read_file(cfg.selector));
    const size_t want = bank.leaf_count();
    const size_t got = sel.strategies.front().second.size();
    if (got != want)
        throw DataError("selector genome length " + std::to_string(got) +
                        " does not match treebank leaf count " + std::to_string(want));
    if (sel.strategies.size() != lib.entries.size())
        throw DataError("selector has " + std::to_string(sel.strategies.size()) +
                        " strategies, library has " + std::to_string(lib.entries.size()));
    for (size_t i = 0; i < lib.entries.size(); ++i)
        if (sel.strategies[i].first != lib.entries[i].first)
            throw DataError("selector strategy '" + sel.strategies[i].first +
                            "' does not match library entry '" + lib.entries[i].first + "'");
    return sel;
}

std::vector<ProofState> to_states(const std::vector<Conjecture>& cs) {
    std::vector<ProofState> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(to_state(c));
    return out;
}

int cmd_gen(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const StrategyLibrary lib = load_library(cfg);
    const int n = static_cast<int>(f.get_int("n", 0));
    if (n < 1) throw UsageError("gen needs --n >= 1");
    const int depth = static_cast<int>(f.get_int("depth", 4));
    if (depth < 1) throw UsageError("--depth must be >= 1");
    const std::string out_path = f.require("out");
    auto conjectures = generate_conjectures(thy, n, cfg.evolution.seed, depth, lib,
                                            cfg.evolution.budget);
    std::ostringstream os;
    for (const auto& c : conjectures) os << to_string(c) << "\n";
    write_file(out_path, os.str());
    out << "wrote " << conjectures.size() << " conjectures to " << out_path << "\n";
    return 0;
}

int cmd_label(const Flags& f, std::ostream& out, std::ostream& err) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const std::string out_path = f.require("out");
    LabelResult r = label_corpus(conjectures, thy, cfg.evolution.budget,
                                 cfg.evolution.step_cap);
    write_file(out_path, labels_to_csv(r.labels));
    if (r.dropped > 0)
        err << "warning: dropped " << r.dropped << " unlabeled conjectures\n";
    out << "labeled " << r.labels.size() << " conjectures to " << out_path << "\n";
    return 0;
}

int cmd_featurize(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const std::string out_path = f.require("out");
    std::vector<std::string> ids;
    std::vector<FeatureVector> rows;
    for (const auto& c : conjectures) {
        ids.push_back(c.id);
        rows.push_back(featurize(to_state(c), thy));
    }
    write_file(out_path, feature_csv(ids, rows));
    out << "wrote features for " << ids.size() << " obligations to " << out_path << "\n";
    return 0;
}

int cmd_train(const Flags& f, std::ostream& out, std::ostream& err) {
    RunConfig cfg = merged_config(f);
    if (cfg.features.empty()) throw UsageError("missing required flag --features");
    if (cfg.labels.empty()) throw UsageError("missing required flag --labels");
    const std::string out_path = f.require("out");

    std::vector<std::string> ids;
    std::vector<FeatureVector> rows;
    parse_feature_csv(read_file(cfg.features), ids, rows);
    const auto labels = parse_label_csv(read_file(cfg.labels));

    std::map<std::string, const FeatureVector*> by_id;
    for (size_t i = 0; i < ids.size(); ++i) by_id[ids[i]] = &rows[i];
    std::vector<std::pair<FeatureVector, std::string>> corpus;
    int missing = 0;
    for (const auto& l : labels) {
        auto it = by_id.find(l.id);
        if (it == by_id.end()) {
            ++missing;
            continue;
        }
        corpus.emplace_back(*it->second, l.method);
    }
    if (missing > 0)
        err << "warning: " << missing << " labels had no feature row and were skipped\n";
    if (corpus.empty()) throw DataError("no label ids matched any feature row");

    TreeBank bank;
    for (const auto& name : method_catalog()) {
        auto points = extract_datapoints(corpus, name);
        bank.trees.push_back(train_tree(points, name));
    }
    write_file(out_path, treebank_to_string(bank));
    out << "trained " << bank.trees.size() << " trees (genome length " << bank.leaf_count()
        << ") to " << out_path << "\n";
    return 0;
}

int cmd_evolve(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const StrategyLibrary lib = load_library(cfg);
    const TreeBank bank = load_treebank(cfg);
    if (cfg.selector.empty()) throw UsageError("missing required flag --selector");
    if (cfg.log.empty()) throw UsageError("missing required flag --log");
    const auto corpus = to_states(conjectures);
    EvolveResult r = evolve_loop(cfg.evolution, corpus, bank, lib, thy, cfg.workers);
    write_file(cfg.selector, selector_to_string(r.best));
    write_file(cfg.log, fitness_log_csv(r.log));
    out << "best fitness " << r.best_fitness << "/" << corpus.size() << " after "
        << cfg.evolution.generations << " generations\n"
        << "selector: " << cfg.selector << "\nlog: " << cfg.log << "\n";
    return 0;
}

int cmd_prove(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const StrategyLibrary lib = load_library(cfg);
    const TreeBank bank = load_treebank(cfg);
    const Selector sel = load_selector(cfg, bank, lib);

    const Conjecture* target = nullptr;
    if (f.has("id")) {
        for (const auto& c : conjectures)
            if (c.id == f.get("id")) target = &c;
        if (!target) throw DataError("no conjecture with id " + f.get("id"));
    } else if (conjectures.size() == 1) {
        target = &conjectures.front();
    } else {
        throw UsageError("--id is required when the file has more than one conjecture");
    }

    const ProofState state = to_state(*target);
    const FeatureVector v = featurize(state, thy);
    const auto active = active_leaves(bank, v);
    const size_t s = select_strategy(sel, active);
    const std::string& name = sel.strategies[s].first;
    RunResult r = run_strategy(state, *lib.find(name), thy, cfg.evolution.budget,
                               cfg.evolution.step_cap);

    out << "conjecture " << to_string(*target) << "\n";
    out << "features " << to_bracket_string(v) << "\n";
    out << "strategy " << name << "\n";
    out << "outcome " << outcome_name(r.outcome.kind) << "\n";
    if (r.outcome.proved()) {
        out << "trace";
        for (const auto& m : r.outcome.trace) out << ' ' << to_string(m) << ';';
        out << "\n";
    }
    out << "budget_used " << r.budget_used << "\n";
    return 0;
}

int cmd_eval(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const StrategyLibrary lib = load_library(cfg);
    const TreeBank bank = load_treebank(cfg);
    const Selector sel = load_selector(cfg, bank, lib);
    const int budget = static_cast<int>(f.get_int("budget", cfg.evolution.budget));
    if (budget < 0) throw UsageError("--budget must be >= 0");

    const auto corpus = to_states(conjectures);
    std::ostringstream csv;
    csv << "id,strategy,outcome,budget_used\n";
    int proved = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const FeatureVector v = featurize(corpus[i], thy);
        const size_t s = select_strategy(sel, active_leaves(bank, v));
        const std::string& name = sel.strategies[s].first;
        RunResult r = run_strategy(corpus[i], *lib.find(name), thy, budget,
                                   cfg.evolution.step_cap);
        if (r.outcome.proved()) ++proved;
        csv << conjectures[i].id << ',' << name << ',' << outcome_name(r.outcome.kind) << ','
            << r.budget_used << "\n";
    }
    if (!cfg.results.empty()) write_file(cfg.results, csv.str());
    out << "fitness " << proved << "/" << corpus.size() << "\n";
    return 0;
}

int cmd_baselines(const Flags& f, std::ostream& out) {
    RunConfig cfg = merged_config(f);
    const Theory thy = load_theory(cfg);
    const auto conjectures = load_conjectures(cfg, thy);
    const StrategyLibrary lib = load_library(cfg);
    const int budget = static_cast<int>(f.get_int("budget", cfg.evolution.budget));
    if (budget < 0) throw UsageError("--budget must be >= 0");
    const auto corpus = to_states(conjectures);
    for (const auto& [name, expr] : lib.entries) {
        int proved = 0;
        for (const auto& state : corpus)
            if (run_strategy(state, expr, thy, budget, cfg.evolution.step_cap)
                    .outcome.proved())
                ++proved;
        out << name << ' ' << proved << "/" << corpus.size() << "\n";
    }
    return 0;
}

const std::set<std::string> kCommonFlags = {"config", "strategies", "seed",
                                            "budget", "workers", "theory",
                                            "conjectures"};

std::set<std::string> with(std::set<std::string> base,
                           std::initializer_list<const char*> extra) {
    for (const char* e : extra) base.insert(e);
    return base;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 1;
    }
    const std::string& cmd = args[0];
    try {
        if (cmd == "gen") {
            Flags f = parse_flags(args, 1, with(kCommonFlags, {"n", "depth", "out"}));
            return cmd_gen(f, out);
        }
        if (cmd == "label") {
            Flags f = parse_flags(args, 1, with(kCommonFlags, {"out"}));
            return cmd_label(f, out, err);
        }
        if (cmd == "featurize") {
            Flags f = parse_flags(args, 1, with(kCommonFlags, {"out"}));
            return cmd_featurize(f, out);
        }
        if (cmd == "train") {
            Flags f = parse_flags(args, 1, with(kCommonFlags, {"features", "labels", "out"}));
            return cmd_train(f, out, err);
        }
        if (cmd == "evolve") {
            Flags f = parse_flags(
                args, 1,
                with(kCommonFlags, {"treebank", "selector", "log", "mu", "lambda",
                                    "generations", "mutation-prob", "sigma", "init"}));
            return cmd_evolve(f, out);
        }
        if (cmd == "prove") {
            Flags f =
                parse_flags(args, 1, with(kCommonFlags, {"selector", "treebank", "id"}));
            return cmd_prove(f, out);
        }
        if (cmd == "eval") {
            Flags f = parse_flags(
                args, 1, with(kCommonFlags, {"selector", "treebank", "results"}));
            return cmd_eval(f, out);
        }
        if (cmd == "baselines") {
            Flags f = parse_flags(args, 1, kCommonFlags);
            return cmd_baselines(f, out);
        }
        err << "unknown command '" << cmd << "'\n" << kUsage;
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace prover
