#pragma once

// Strategy language: combinator AST, concrete-syntax parser, dynamic
// instantiation, and a depth-first backtracking interpreter metered by a
// method-application budget.

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prover/kernel.hpp"

namespace prover {

struct StrategyExpr {
    enum class Kind { Atom, Dynamic, Thens, Ors, Repeat, Try };
    Kind kind = Kind::Atom;
    MethodInstance atom{};              // Atom
    Method dynamic_method = Method::Induct; // Dynamic
    std::vector<StrategyExpr> children; // Thens/Ors (>=1), Repeat/Try (exactly 1)

    static StrategyExpr make_atom(MethodInstance m);
    static StrategyExpr make_dynamic(Method m);
    static StrategyExpr thens(std::vector<StrategyExpr> es);
    static StrategyExpr ors(std::vector<StrategyExpr> es);
    static StrategyExpr repeat(StrategyExpr e);
    static StrategyExpr try_(StrategyExpr e);
};

bool operator==(const StrategyExpr& a, const StrategyExpr& b);
std::string to_string(const StrategyExpr& e);

struct StrategyParseError : std::runtime_error {
    int position; // 1-based character position
    StrategyParseError(const std::string& what, int pos)
        : std::runtime_error(what), position(pos) {}
};

StrategyExpr parse_strategy(std::string_view text);

// One instance per free variable of inductive datatype in the first goal,
// first-occurrence order. Empty state or no candidates gives an empty list.
std::vector<MethodInstance> instantiate_dynamic(Method m, const ProofState& state);

struct Outcome {
    enum class Kind { Proved, Exhausted, BudgetOut };
    Kind kind = Kind::Exhausted;
    std::vector<MethodInstance> trace; // filled for Proved
    bool proved() const { return kind == Kind::Proved; }
};

const char* outcome_name(Outcome::Kind k);

struct RunResult {
    Outcome outcome;
    int budget_used = 0;
};

// Depth-first, left-biased search. Every apply_method call costs one budget
// unit; hitting the budget aborts the whole search with BudgetOut.
RunResult run_strategy(const ProofState& state, const StrategyExpr& expr,
                       const Theory& theory, int budget, int step_cap = kDefaultStepCap);

struct StrategyLibrary {
    std::vector<std::pair<std::string, StrategyExpr>> entries; // fixed order
    const StrategyExpr* find(const std::string& name) const;
};

// The four shipped default strategies, in dispatch tie-break order.
StrategyLibrary default_library();

// Library file: one `name := expr` per line, `#` comments.
StrategyLibrary parse_library(std::string_view text);
std::string to_string(const StrategyLibrary& lib);

} // namespace prover
