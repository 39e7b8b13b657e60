#include "prover/featurize.hpp"

#include <sstream>

namespace prover {

namespace {

const Goal& first_goal(const ProofState& s) { return s.goals.front(); }

bool contains_kind(const Term& t, TermKind k) {
    if (t.kind == k) return true;
    for (const auto& a : t.args)
        if (contains_kind(a, k)) return true;
    return false;
}

bool any_fun_node(const Term& t, const std::function<bool(const Term&)>& pred) {
    if (t.kind == TermKind::Fun && pred(t)) return true;
    for (const auto& a : t.args)
        if (any_fun_node(a, pred)) return true;
    return false;
}

bool conclusion_has_fun(const Goal& g, const std::function<bool(const Term&)>& pred) {
    return any_fun_node(g.lhs, pred) || any_fun_node(g.rhs, pred);
}

bool some_goal_var_has_type(const Goal& g, const std::string& type) {
    for (const auto& v : goal_vars(g))
        if (goal_var_type(g, v) == type) return true;
    return false;
}

bool var_at_pattern_position(const Goal& g, const Theory& thy) {
    return conclusion_has_fun(g, [&](const Term& t) {
        const FunctionDef* f = thy.function(t.name);
        if (!f) return false;
        for (int p : thy.pattern_positions(*f))
            if (t.args[static_cast<size_t>(p)].kind == TermKind::Var) return true;
        return false;
    });
}

bool ctor_under_defined(const Goal& g) {
    return conclusion_has_fun(g, [](const Term& t) {
        for (const auto& a : t.args)
            if (a.kind == TermKind::Ctor) return true;
        return false;
    });
}

bool repeated_var_one_side(const Goal& g) {
    for (const Term* side : {&g.lhs, &g.rhs})
        for (const auto& v : free_vars(*side))
            if (var_occurrences(*side, v) >= 2) return true;
    return false;
}

bool partial_symbol_present(const Goal& g, const Theory& thy) {
    return conclusion_has_fun(g, [&](const Term& t) {
        const FunctionDef* f = thy.function(t.name);
        return f && thy.is_partial(*f);
    });
}

std::vector<Assertion> build_catalog() {
    std::vector<Assertion> cat;
    auto add = [&](const std::string& name,
                   std::function<bool(const ProofState&, const Theory&)> p) {
        cat.push_back(Assertion{static_cast<int>(cat.size()), name, std::move(p)});
    };
    add("multi_goal", [](const ProofState& s, const Theory&) { return s.goals.size() > 1; });
    add("lhs_head_defined", [](const ProofState& s, const Theory&) {
        return first_goal(s).lhs.kind == TermKind::Fun;
    });
    add("rhs_head_defined", [](const ProofState& s, const Theory&) {
        return first_goal(s).rhs.kind == TermKind::Fun;
    });
    add("has_nat_var", [](const ProofState& s, const Theory&) {
        return some_goal_var_has_type(first_goal(s), "nat");
    });
    add("has_list_var", [](const ProofState& s, const Theory&) {
        return some_goal_var_has_type(first_goal(s), "list");
    });
    add("var_at_pattern_pos", [](const ProofState& s, const Theory& t) {
        return var_at_pattern_position(first_goal(s), t);
    });
    add("has_hypotheses", [](const ProofState& s, const Theory&) {
        return !first_goal(s).hypotheses.empty();
    });
    add("sides_identical", [](const ProofState& s, const Theory&) {
        return first_goal(s).lhs == first_goal(s).rhs;
    });
    add("lhs_deep", [](const ProofState& s, const Theory&) {
        return term_depth(first_goal(s).lhs) > 3;
    });
    add("lhs_multi_var", [](const ProofState& s, const Theory&) {
        return free_vars(first_goal(s).lhs).size() >= 2;
    });
    add("ctor_under_defined", [](const ProofState& s, const Theory&) {
        return ctor_under_defined(first_goal(s));
    });
    add("var_on_both_sides", [](const ProofState& s, const Theory&) {
        const Goal& g = first_goal(s);
        for (const auto& v : free_vars(g.lhs))
            if (var_occurrences(g.rhs, v) > 0) return true;
        return false;
    });
    add("same_head", [](const ProofState& s, const Theory&) {
        const Goal& g = first_goal(s);
        return g.lhs.kind == g.rhs.kind && g.lhs.name == g.rhs.name;
    });
    add("ground_goal", [](const ProofState& s, const Theory&) {
        const Goal& g = first_goal(s);
        return !contains_kind(g.lhs, TermKind::Var) && !contains_kind(g.rhs, TermKind::Var);
    });
    add("repeated_var", [](const ProofState& s, const Theory&) {
        return repeated_var_one_side(first_goal(s));
    });
    add("partial_symbol", [](const ProofState& s, const Theory& t) {
        return partial_symbol_present(first_goal(s), t);
    });
    return cat;
}

} // namespace

const std::vector<Assertion>& assertion_catalog() {
    static const std::vector<Assertion> cat = build_catalog();
    return cat;
}

FeatureVector featurize(const ProofState& state, const Theory& theory) {
    if (state.goals.empty()) throw FeaturizeError("cannot featurize an empty proof state");
    const auto& cat = assertion_catalog();
    FeatureVector v(cat.size(), 0);
    for (const auto& a : cat)
        v[static_cast<size_t>(a.index)] = a.predicate(state, theory) ? 1 : 0;
    return v;
}

std::string to_bracket_string(const FeatureVector& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(v[i]);
    }
    os << ']';
    return os.str();
}

std::string feature_csv(const std::vector<std::string>& ids,
                        const std::vector<FeatureVector>& rows) {
    const size_t k = assertion_catalog().size();
    std::ostringstream os;
    os << "goal_id";
    for (size_t i = 0; i < k; ++i) os << ",a" << i;
    os << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        os << ids[r];
        for (size_t i = 0; i < rows[r].size(); ++i) os << ',' << static_cast<int>(rows[r][i]);
        os << "\n";
    }
    return os.str();
}

void parse_feature_csv(const std::string& text, std::vector<std::string>& ids,
                       std::vector<FeatureVector>& rows) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FeaturizeError("empty feature file");
    ids.clear();
    rows.clear();
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::istringstream ls(line);
        std::string cell;
        if (!std::getline(ls, cell, ','))
            throw FeaturizeError("missing id on line " + std::to_string(line_no));
        ids.push_back(cell);
        FeatureVector v;
        while (std::getline(ls, cell, ',')) {
            if (cell == "0")
                v.push_back(0);
            else if (cell == "1")
                v.push_back(1);
            else
                throw FeaturizeError("bad feature bit '" + cell + "' on line " +
                                     std::to_string(line_no));
        }
        rows.push_back(std::move(v));
    }
}

} // namespace prover
