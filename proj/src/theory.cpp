#include "prover/theory.hpp"

#include <algorithm>
#include <set>

namespace prover {

bool operator==(const RewriteRule& a, const RewriteRule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.rigid == b.rigid;
}

const Datatype* Theory::datatype(const std::string& name) const {
    for (const auto& d : datatypes)
        if (d.name == name) return &d;
    return nullptr;
}

const FunctionDef* Theory::function(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

std::pair<const Datatype*, const Constructor*> Theory::constructor(
    const std::string& name) const {
    for (const auto& d : datatypes)
        for (const auto& c : d.constructors)
            if (c.name == name) return {&d, &c};
    return {nullptr, nullptr};
}

std::vector<RewriteRule> Theory::all_rules() const {
    std::vector<RewriteRule> out;
    for (const auto& f : functions)
        out.insert(out.end(), f.rules.begin(), f.rules.end());
    return out;
}

std::vector<int> Theory::pattern_positions(const FunctionDef& f) const {
    std::vector<int> out;
    for (size_t p = 0; p < f.arg_types.size(); ++p) {
        for (const auto& r : f.rules) {
            if (p < r.lhs.args.size() && r.lhs.args[p].kind == TermKind::Ctor) {
                out.push_back(static_cast<int>(p));
                break;
            }
        }
    }
    return out;
}

bool Theory::is_partial(const FunctionDef& f) const {
    for (int p : pattern_positions(f)) {
        bool has_catch_all = false;
        std::set<std::string> covered;
        for (const auto& r : f.rules) {
            const Term& arg = r.lhs.args[static_cast<size_t>(p)];
            if (arg.kind == TermKind::Ctor)
                covered.insert(arg.name);
            else
                has_catch_all = true;
        }
        if (has_catch_all) continue;
        const Datatype* d = datatype(f.arg_types[static_cast<size_t>(p)]);
        if (!d) continue;
        for (const auto& c : d->constructors)
            if (!covered.count(c.name)) return true;
    }
    return false;
}

namespace {

// constructor-or-wildcard skeleton per argument; two rules conflict when
// compatible at every position
bool cases_overlap(const RewriteRule& a, const RewriteRule& b) {
    if (a.lhs.args.size() != b.lhs.args.size()) return false;
    for (size_t i = 0; i < a.lhs.args.size(); ++i) {
        const Term& x = a.lhs.args[i];
        const Term& y = b.lhs.args[i];
        if (x.kind == TermKind::Ctor && y.kind == TermKind::Ctor && x.name != y.name)
            return false;
    }
    return true;
}

void check_arities(const Theory& thy, const Term& t) {
    if (t.kind == TermKind::Var) return;
    if (t.kind == TermKind::Ctor) {
        auto [d, c] = thy.constructor(t.name);
        if (!c) throw TheoryError("unknown constructor " + t.name);
        if (c->arg_types.size() != t.args.size())
            throw TheoryError("arity mismatch for constructor " + t.name);
        for (size_t i = 0; i < t.args.size(); ++i)
            if (t.args[i].type != c->arg_types[i])
                throw TheoryError("argument type mismatch in " + t.name);
    } else {
        const FunctionDef* f = thy.function(t.name);
        if (!f) throw TheoryError("unknown function " + t.name);
        if (f->arg_types.size() != t.args.size())
            throw TheoryError("arity mismatch for function " + t.name);
        for (size_t i = 0; i < t.args.size(); ++i)
            if (t.args[i].type != f->arg_types[i])
                throw TheoryError("argument type mismatch in " + t.name);
    }
    for (const auto& a : t.args) check_arities(thy, a);
}

} // namespace

void Theory::validate() const {
    std::set<std::string> type_names;
    std::set<std::string> term_names;
    for (const auto& d : datatypes) {
        if (!type_names.insert(d.name).second)
            throw TheoryError("duplicate datatype " + d.name);
        bool has_base = false;
        for (const auto& c : d.constructors) {
            if (!term_names.insert(c.name).second)
                throw TheoryError("duplicate name " + c.name);
            bool recursive = false;
            for (const auto& at : c.arg_types) {
                if (!datatype(at)) throw TheoryError("unknown type " + at + " in " + c.name);
                if (at == d.name) recursive = true;
            }
            if (!recursive) has_base = true;
        }
        if (!has_base)
            throw TheoryError("datatype " + d.name + " has no non-recursive constructor");
    }
    for (const auto& f : functions) {
        if (!term_names.insert(f.name).second) throw TheoryError("duplicate name " + f.name);
        if (!datatype(f.result_type))
            throw TheoryError("unknown result type of " + f.name);
        for (const auto& at : f.arg_types)
            if (!datatype(at)) throw TheoryError("unknown argument type of " + f.name);
        for (const auto& r : f.rules) {
            if (r.lhs.kind != TermKind::Fun || r.lhs.name != f.name)
                throw TheoryError("rule head is not " + f.name);
            check_arities(*this, r.lhs);
            check_arities(*this, r.rhs);
            if (r.lhs.type != r.rhs.type)
                throw TheoryError("rule sides differ in type for " + f.name);
            auto lv = free_vars(r.lhs);
            for (const auto& v : free_vars(r.rhs))
                if (std::find(lv.begin(), lv.end(), v) == lv.end())
                    throw TheoryError("unbound variable " + v + " in rhs of " + f.name +
                                      " rule");
        }
        for (size_t i = 0; i < f.rules.size(); ++i)
            for (size_t j = i + 1; j < f.rules.size(); ++j)
                if (cases_overlap(f.rules[i], f.rules[j]))
                    throw TheoryError("overlapping rule cases for " + f.name);
    }
}

} // namespace prover
