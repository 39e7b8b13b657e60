#pragma once

// Genetic search over per-strategy genomes indexed by tree leaves:
// assertion-driven dispatch, discharge-count fitness, gaussian gene
// mutation, and elitist truncation selection.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prover/recommend.hpp"
#include "prover/rng.hpp"
#include "prover/strategy.hpp"

namespace prover {

using Genome = std::vector<double>; // length 4 * (trees in bank)

struct Selector {
    // aligned with the strategy library order
    std::vector<std::pair<std::string, Genome>> strategies;
};

struct EvolutionConfig {
    int mu = 4;
    int lambda = 12;
    int generations = 40;
    double mutation_prob = 0.1;
    double sigma = 0.25;
    int budget = 200; // method applications per obligation
    uint64_t seed = 0;
    enum class Init { Uniform, TreeSeeded };
    Init init = Init::Uniform;
    int step_cap = kDefaultStepCap;

    void validate() const; // throws ConfigMismatch on violated invariants
};

// Global leaf index 4t + local leaf for tree position t; exactly one per tree.
std::vector<int> active_leaves(const TreeBank& bank, const FeatureVector& v);

// Index of the strategy with maximal summed active-leaf genes; ties go to
// the earliest library entry.
size_t select_strategy(const Selector& sel, std::span<const int> active);

// Number of corpus obligations discharged when each is dispatched through
// featurize -> active_leaves -> select_strategy -> run_strategy.
int fitness(const Selector& sel, std::span<const ProofState> corpus, const TreeBank& bank,
            const StrategyLibrary& lib, const Theory& theory, int budget,
            int step_cap = kDefaultStepCap, int workers = 1);

// Per gene: with probability p add a N(0, sigma) step. Draws come from
// per-gene forks of the stream, in gene order.
Genome mutate(const Genome& g, const RandomStream& stream, double p, double sigma);
Selector mutate_selector(const Selector& sel, const RandomStream& stream, double p,
                         double sigma);

struct Evaluated {
    Selector selector;
    int fitness = 0;
};

// Sort by fitness descending (stable), keep the top mu, fill with lambda
// mutants of the elite chosen round-robin.
std::vector<Evaluated> next_generation(const std::vector<Evaluated>& population,
                                       const EvolutionConfig& cfg,
                                       const RandomStream& stream);

struct GenerationStats {
    int generation = 0;
    int best = 0;
    double mean = 0.0;
};

struct EvolveResult {
    Selector best;
    int best_fitness = 0;
    std::vector<GenerationStats> log;
};

EvolveResult evolve_loop(const EvolutionConfig& cfg, std::span<const ProofState> corpus,
                         const TreeBank& bank, const StrategyLibrary& lib,
                         const Theory& theory, int workers = 1);

// Selector file: one `name;` + comma-separated floats line per strategy.
std::string selector_to_string(const Selector& sel);
Selector parse_selector(std::string_view text);

// Fitness log CSV: generation,best_fitness,mean_fitness
std::string fitness_log_csv(std::span<const GenerationStats> log);

std::string format_double(double x); // shortest round-trip decimal

} // namespace prover
