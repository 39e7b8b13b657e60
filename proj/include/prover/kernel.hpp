#pragma once

// Proof kernel: goals, proof states, normalization, and the six proof
// methods (refl, simp, auto, hyp, induct, cases). All operations are pure;
// every method returns zero or one successor states.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prover/term.hpp"
#include "prover/theory.hpp"

namespace prover {

inline constexpr int kDefaultStepCap = 1000;

struct Goal {
    std::vector<RewriteRule> hypotheses; // induction hypotheses, oriented lhs -> rhs
    Term lhs;
    Term rhs;
};

bool operator==(const Goal& a, const Goal& b);

struct ProofState {
    std::vector<Goal> goals;
    bool proved() const { return goals.empty(); }
};

bool operator==(const ProofState& a, const ProofState& b);

enum class Method { Refl, Simp, Auto, Hyp, Induct, Cases };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);
bool method_takes_target(Method m);
// the six method names, sorted alphabetically (treebank order)
const std::vector<std::string>& method_catalog();

struct MethodInstance {
    Method method;
    std::string target; // variable name; only for Induct/Cases
};

bool operator==(const MethodInstance& a, const MethodInstance& b);
std::string to_string(const MethodInstance& m);

struct NormalizeResult {
    Term term;
    int steps = 0;
    bool normal = true; // false = step cap hit with a redex remaining
};

// Leftmost-innermost rewriting, first applicable rule wins (rules in the
// order given; callers put hypotheses before theory rules).
NormalizeResult normalize(const Term& term, std::span<const RewriteRule> rules, int cap);

// Applies m to the first goal (auto touches all goals). Empty vector =
// method failure. Never returns more than one state.
std::vector<ProofState> apply_method(const ProofState& state, const MethodInstance& m,
                                     const Theory& theory, int cap = kDefaultStepCap);

// Re-applies a recorded trace; true iff every step succeeds and the final
// state is proved.
bool replay(const ProofState& initial, std::span<const MethodInstance> trace,
            const Theory& theory, int cap = kDefaultStepCap);

std::string to_string(const Goal& g);
std::string to_string(const ProofState& s);

// distinct variables of the goal (conclusion then hypotheses), first-occurrence order
std::vector<std::string> goal_vars(const Goal& g);
// type of a variable occurring in the goal, empty if absent
std::string goal_var_type(const Goal& g, const std::string& name);

} // namespace prover
