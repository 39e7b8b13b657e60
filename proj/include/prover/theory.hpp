#pragma once

// A theory: inductive datatypes plus functions defined by oriented rewrite
// rules. Parsing lives in corpus.hpp; this header holds the data model and
// the lookups the kernel needs.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prover/term.hpp"

namespace prover {

struct Constructor {
    std::string name;
    std::vector<std::string> arg_types; // arg type equal to owner datatype = recursive
};

struct Datatype {
    std::string name;
    std::vector<Constructor> constructors;
};

struct RewriteRule {
    Term lhs; // head must be a FunctionApp
    Term rhs; // rhs variables subset of lhs variables
    // Rigid rules (induction hypotheses) rewrite only their literal lhs
    // occurrence; their variables are fixed constants of the subgoal.
    bool rigid = false;
};

bool operator==(const RewriteRule& a, const RewriteRule& b);

struct FunctionDef {
    std::string name;
    std::vector<std::string> arg_types;
    std::string result_type;
    std::vector<RewriteRule> rules;
};

struct TheoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Theory {
    std::vector<Datatype> datatypes;
    std::vector<FunctionDef> functions;

    const Datatype* datatype(const std::string& name) const;
    const FunctionDef* function(const std::string& name) const;
    // constructor and its owner datatype
    std::pair<const Datatype*, const Constructor*> constructor(const std::string& name) const;

    // all function rules in declaration order
    std::vector<RewriteRule> all_rules() const;

    // argument positions of f where some rule pattern-matches a constructor
    std::vector<int> pattern_positions(const FunctionDef& f) const;

    // true when some pattern position of f is matched by a proper,
    // non-exhaustive subset of the datatype's constructors
    bool is_partial(const FunctionDef& f) const;

    // structural well-formedness: unique names, arities, rule shape,
    // at least one non-recursive constructor per datatype, distinct
    // constructor cases per function. Throws TheoryError.
    void validate() const;
};

} // namespace prover
