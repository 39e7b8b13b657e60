#pragma once

// First-order terms over declared inductive datatypes, bindings, matching
// and substitution. Every term node carries the name of its datatype, so
// type checks never need a side table.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prover {

enum class TermKind { Var, Ctor, Fun };

struct Term {
    TermKind kind = TermKind::Var;
    std::string name;
    std::string type; // datatype name
    std::vector<Term> args;

    static Term var(std::string name, std::string type) {
        return Term{TermKind::Var, std::move(name), std::move(type), {}};
    }
    static Term ctor(std::string name, std::string type, std::vector<Term> args = {}) {
        return Term{TermKind::Ctor, std::move(name), std::move(type), std::move(args)};
    }
    static Term fun(std::string name, std::string type, std::vector<Term> args) {
        return Term{TermKind::Fun, std::move(name), std::move(type), std::move(args)};
    }
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// variable name -> replacement term
using Binding = std::map<std::string, Term>;

struct IllTypedSubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First-order syntactic matching (no unification). Returns the unique
// binding b with substitute(pattern, b) == subject, or nullopt.
std::optional<Binding> match(const Term& pattern, const Term& subject);

// As match, but variables listed in `rigid` stand only for themselves.
// A fully rigid pattern matches exactly its own literal occurrence.
std::optional<Binding> match_rigid(const Term& pattern, const Term& subject,
                                   const std::vector<std::string>& rigid);

// Simultaneous replacement. Throws IllTypedSubstitution when a binding's
// term type disagrees with the variable's declared datatype.
Term substitute(const Term& term, const Binding& binding);

// leaf = 1, application = 1 + max over args
int term_depth(const Term& t);

// distinct variable names in first-occurrence order (leftmost, depth-first)
std::vector<std::string> free_vars(const Term& t);
void collect_vars(const Term& t, std::vector<std::string>& order);

// number of occurrences of variable `name`
int var_occurrences(const Term& t, const std::string& name);

std::string to_string(const Term& t);

} // namespace prover
