#include "prover/evolve.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace prover {

namespace {

// stream labels for the independent randomness consumers
constexpr uint64_t kInitLabel = 1;
constexpr uint64_t kMutateLabel = 2;

void parallel_for(size_t n, int workers, const std::function<void(size_t)>& body) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(static_cast<size_t>(count));
    for (int w = 0; w < count; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

} // namespace

void EvolutionConfig::validate() const {
    if (mu < 1) throw ConfigMismatch("mu must be >= 1");
    if (lambda < 1) throw ConfigMismatch("lambda must be >= 1");
    if (generations < 1) throw ConfigMismatch("generations must be >= 1");
    if (mutation_prob < 0.0 || mutation_prob > 1.0)
        throw ConfigMismatch("mutation_prob must be in [0, 1]");
    if (sigma <= 0.0) throw ConfigMismatch("sigma must be > 0");
    if (budget < 1) throw ConfigMismatch("budget must be >= 1");
    if (step_cap < 1) throw ConfigMismatch("step_cap must be >= 1");
}

std::vector<int> active_leaves(const TreeBank& bank, const FeatureVector& v) {
    std::vector<int> out;
    out.reserve(bank.trees.size());
    for (size_t t = 0; t < bank.trees.size(); ++t)
        out.push_back(static_cast<int>(4 * t) + eval_tree(bank.trees[t], v).leaf);
    return out;
}

size_t select_strategy(const Selector& sel, std::span<const int> active) {
    size_t best = 0;
    double best_score = 0.0;
    for (size_t s = 0; s < sel.strategies.size(); ++s) {
        const Genome& g = sel.strategies[s].second;
        double score = 0.0;
        for (int i : active) score += g[static_cast<size_t>(i)];
        if (s == 0 || score > best_score) {
            best = s;
            best_score = score;
        }
    }
    return best;
}

int fitness(const Selector& sel, std::span<const ProofState> corpus, const TreeBank& bank,
            const StrategyLibrary& lib, const Theory& theory, int budget, int step_cap,
            int workers) {
    std::vector<uint8_t> proved(corpus.size(), 0);
    parallel_for(corpus.size(), workers, [&](size_t i) {
        const FeatureVector v = featurize(corpus[i], theory);
        const auto active = active_leaves(bank, v);
        const size_t s = select_strategy(sel, active);
        const StrategyExpr& expr = *lib.find(sel.strategies[s].first);
        RunResult r = run_strategy(corpus[i], expr, theory, budget, step_cap);
        proved[i] = r.outcome.proved() ? 1 : 0;
    });
    int count = 0;
    for (uint8_t p : proved) count += p;
    return count;
}

Genome mutate(const Genome& g, const RandomStream& stream, double p, double sigma) {
    Genome out = g;
    for (size_t i = 0; i < out.size(); ++i) {
        RandomStream s = stream.fork(i);
        if (s.next_double() < p) out[i] += sigma * s.next_gauss();
    }
    return out;
}

Selector mutate_selector(const Selector& sel, const RandomStream& stream, double p,
                         double sigma) {
    Selector out = sel;
    for (size_t s = 0; s < out.strategies.size(); ++s)
        out.strategies[s].second = mutate(out.strategies[s].second, stream.fork(s), p, sigma);
    return out;
}

std::vector<Evaluated> next_generation(const std::vector<Evaluated>& population,
                                       const EvolutionConfig& cfg,
                                       const RandomStream& stream) {
    std::vector<size_t> order(population.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return population[a].fitness > population[b].fitness;
    });

    std::vector<Evaluated> out;
    const size_t mu = std::min<size_t>(static_cast<size_t>(cfg.mu), population.size());
    for (size_t i = 0; i < mu; ++i) out.push_back(population[order[i]]);

    for (int j = 0; j < cfg.lambda; ++j) {
        const Evaluated& parent = out[static_cast<size_t>(j) % mu];
        Evaluated child;
        child.selector = mutate_selector(parent.selector,
                                         stream.fork(mu + static_cast<size_t>(j)),
                                         cfg.mutation_prob, cfg.sigma);
        child.fitness = 0;
        out.push_back(std::move(child));
    }
    return out;
}

namespace {

Selector seeded_selector(const TreeBank& bank, const StrategyLibrary& lib) {
    Genome leaves;
    leaves.reserve(bank.leaf_count());
    for (const auto& t : bank.trees) {
        leaves.push_back(t.when_true.if_true);
        leaves.push_back(t.when_true.if_false);
        leaves.push_back(t.when_false.if_true);
        leaves.push_back(t.when_false.if_false);
    }
    Selector sel;
    for (const auto& [name, expr] : lib.entries) sel.strategies.emplace_back(name, leaves);
    return sel;
}

Selector uniform_selector(const TreeBank& bank, const StrategyLibrary& lib,
                          const RandomStream& stream) {
    Selector sel;
    const size_t len = bank.leaf_count();
    for (size_t s = 0; s < lib.entries.size(); ++s) {
        Genome g(len);
        RandomStream gs = stream.fork(s);
        for (size_t i = 0; i < len; ++i) g[i] = gs.fork(i).next_double();
        sel.strategies.emplace_back(lib.entries[s].first, std::move(g));
    }
    return sel;
}

} // namespace

EvolveResult evolve_loop(const EvolutionConfig& cfg, std::span<const ProofState> corpus,
                         const TreeBank& bank, const StrategyLibrary& lib,
                         const Theory& theory, int workers) {
    cfg.validate();
    if (corpus.empty()) throw ConfigMismatch("evolve_loop: empty corpus");
    if (lib.entries.empty()) throw ConfigMismatch("evolve_loop: empty strategy library");
    if (bank.trees.empty()) throw ConfigMismatch("evolve_loop: empty treebank");

    const RandomStream root(cfg.seed);
    const size_t pop_size = static_cast<size_t>(cfg.mu) + static_cast<size_t>(cfg.lambda);

    std::vector<Evaluated> population;
    const RandomStream init = root.fork(kInitLabel);
    for (size_t i = 0; i < pop_size; ++i) {
        Evaluated e;
        if (cfg.init == EvolutionConfig::Init::Uniform)
            e.selector = uniform_selector(bank, lib, init.fork(i));
        else
            e.selector = mutate_selector(seeded_selector(bank, lib), init.fork(i),
                                         cfg.mutation_prob, cfg.sigma);
        population.push_back(std::move(e));
    }

    EvolveResult result;
    const RandomStream mut = root.fork(kMutateLabel);
    for (int gen = 0; gen < cfg.generations; ++gen) {
        std::vector<int> fits(population.size(), 0);
        parallel_for(population.size(), workers, [&](size_t i) {
            fits[i] = fitness(population[i].selector, corpus, bank, lib, theory, cfg.budget,
                              cfg.step_cap, 1);
        });
        long long total = 0;
        size_t best_idx = 0;
        for (size_t i = 0; i < population.size(); ++i) {
            population[i].fitness = fits[i];
            total += fits[i];
            if (fits[i] > fits[best_idx]) best_idx = i;
        }
        result.log.push_back(GenerationStats{
            gen, population[best_idx].fitness,
            static_cast<double>(total) / static_cast<double>(population.size())});
        result.best = population[best_idx].selector;
        result.best_fitness = population[best_idx].fitness;
        if (gen + 1 < cfg.generations)
            population = next_generation(population, cfg, mut.fork(static_cast<uint64_t>(gen)));
    }
    return result;
}

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

std::string selector_to_string(const Selector& sel) {
    std::ostringstream os;
    for (const auto& [name, genome] : sel.strategies) {
        os << name << ';';
        for (size_t i = 0; i < genome.size(); ++i) {
            if (i) os << ',';
            os << format_double(genome[i]);
        }
        os << "\n";
    }
    return os.str();
}

Selector parse_selector(std::string_view text) {
    Selector sel;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t sep = line.find(';');
        if (sep == std::string::npos)
            throw ConfigMismatch("selector line " + std::to_string(line_no) +
                                 " is missing ';'");
        Genome g;
        size_t p = sep + 1;
        while (p < line.size()) {
            double value = 0;
            auto [end, ec] = std::from_chars(line.data() + p, line.data() + line.size(), value);
            if (ec != std::errc{})
                throw ConfigMismatch("bad float on selector line " + std::to_string(line_no));
            g.push_back(value);
            p = static_cast<size_t>(end - line.data());
            if (p < line.size()) {
                if (line[p] != ',')
                    throw ConfigMismatch("expected ',' on selector line " +
                                         std::to_string(line_no));
                ++p;
            }
        }
        sel.strategies.emplace_back(line.substr(0, sep), std::move(g));
    }
    if (sel.strategies.empty()) throw ConfigMismatch("empty selector file");
    for (size_t i = 1; i < sel.strategies.size(); ++i)
        if (sel.strategies[i].second.size() != sel.strategies[0].second.size())
            throw ConfigMismatch("selector genomes differ in length");
    return sel;
}

std::string fitness_log_csv(std::span<const GenerationStats> log) {
    std::ostringstream os;
    os << "generation,best_fitness,mean_fitness\n";
    for (const auto& g : log)
        os << g.generation << ',' << g.best << ',' << format_double(g.mean) << "\n";
    return os.str();
}

} // namespace prover
