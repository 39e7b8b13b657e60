#pragma once

// Data layer: theory and conjecture file parsing, random conjecture
// generation with provability vetting, and oracle labeling.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prover/rng.hpp"
#include "prover/strategy.hpp"
#include "prover/theory.hpp"

namespace prover {

struct Conjecture {
    std::string id;
    std::vector<std::pair<std::string, std::string>> vars; // name, datatype
    Term lhs;
    Term rhs;
};

struct Label {
    std::string id;
    std::string method;
};

struct ParseError : std::runtime_error {
    int line; // 1-based; 0 = no line info
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
};

Theory parse_theory(std::string_view text);

std::vector<Conjecture> parse_conjectures(std::string_view text, const Theory& theory);

// Parses one term against a variable environment; used by both file
// parsers and tests. Throws ParseError (line 0).
Term parse_term(std::string_view text, const Theory& theory,
                const std::vector<std::pair<std::string, std::string>>& vars);

std::string to_string(const Conjecture& c);
ProofState to_state(const Conjecture& c);

struct GenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic sampling of well-typed equations of bounded depth; retains
// only conjectures provable by at least one library strategy within
// vet_budget. Fails after 1000*n attempts.
std::vector<Conjecture> generate_conjectures(const Theory& theory, int n, uint64_t seed,
                                             int depth_cap, const StrategyLibrary& lib,
                                             int vet_budget);

// random well-typed term, used by the generator and the soundness suite
Term random_term(const Theory& theory, const std::string& type, int depth,
                 RandomStream& rng);

struct LabelResult {
    std::vector<Label> labels;
    int dropped = 0; // conjectures no first method could finish
};

// First methods tried in fixed order (simp, induct each candidate, cases
// each candidate, auto, refl, hyp); the label is the first whose
// application followed by the finishing strategy closes the proof.
LabelResult label_corpus(std::span<const Conjecture> conjectures, const Theory& theory,
                         int budget, int step_cap = kDefaultStepCap);

// label file CSV: header `id,method`
std::string labels_to_csv(std::span<const Label> labels);
std::vector<Label> parse_label_csv(std::string_view text);

} // namespace prover
