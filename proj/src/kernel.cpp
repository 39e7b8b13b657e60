#include "prover/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace prover {

bool operator==(const Goal& a, const Goal& b) {
    return a.hypotheses == b.hypotheses && a.lhs == b.lhs && a.rhs == b.rhs;
}

bool operator==(const ProofState& a, const ProofState& b) { return a.goals == b.goals; }

const char* method_name(Method m) {
    switch (m) {
        case Method::Refl: return "refl";
        case Method::Simp: return "simp";
        case Method::Auto: return "auto";
        case Method::Hyp: return "hyp";
        case Method::Induct: return "induct";
        case Method::Cases: return "cases";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::Refl, Method::Simp, Method::Auto, Method::Hyp, Method::Induct,
                     Method::Cases})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

bool method_takes_target(Method m) { return m == Method::Induct || m == Method::Cases; }

const std::vector<std::string>& method_catalog() {
    static const std::vector<std::string> names = {"auto", "cases", "hyp",
                                                   "induct", "refl", "simp"};
    return names;
}

bool operator==(const MethodInstance& a, const MethodInstance& b) {
    return a.method == b.method && a.target == b.target;
}

std::string to_string(const MethodInstance& m) {
    std::string s = method_name(m.method);
    if (!m.target.empty()) s += " " + m.target;
    return s;
}

namespace {

struct Rewriter {
    std::span<const RewriteRule> rules;
    int cap;
    int steps = 0;
    bool capped = false;

    Term norm(const Term& t) {
        if (t.kind == TermKind::Var) return t;
        Term cur = t;
        for (auto& a : cur.args) a = norm(a);
        if (capped) return cur;
        for (const auto& r : rules) {
            std::optional<Binding> b;
            if (r.rigid) {
                if (r.lhs == cur) b.emplace();
            } else {
                b = match(r.lhs, cur);
            }
            if (!b) continue;
            if (steps >= cap) {
                capped = true; // redex remains
                return cur;
            }
            ++steps;
            return norm(r.rigid ? r.rhs : substitute(r.rhs, *b));
        }
        return cur;
    }
};

} // namespace

NormalizeResult normalize(const Term& term, std::span<const RewriteRule> rules, int cap) {
    Rewriter rw{rules, cap};
    Term out = rw.norm(term);
    return NormalizeResult{std::move(out), rw.steps, !rw.capped};
}

std::vector<std::string> goal_vars(const Goal& g) {
    std::vector<std::string> order;
    collect_vars(g.lhs, order);
    collect_vars(g.rhs, order);
    for (const auto& h : g.hypotheses) {
        collect_vars(h.lhs, order);
        collect_vars(h.rhs, order);
    }
    return order;
}

namespace {

const Term* find_var(const Term& t, const std::string& name) {
    if (t.kind == TermKind::Var) return t.name == name ? &t : nullptr;
    for (const auto& a : t.args)
        if (const Term* v = find_var(a, name)) return v;
    return nullptr;
}

const Term* find_goal_var(const Goal& g, const std::string& name) {
    if (const Term* v = find_var(g.lhs, name)) return v;
    if (const Term* v = find_var(g.rhs, name)) return v;
    for (const auto& h : g.hypotheses) {
        if (const Term* v = find_var(h.lhs, name)) return v;
        if (const Term* v = find_var(h.rhs, name)) return v;
    }
    return nullptr;
}

} // namespace

std::string goal_var_type(const Goal& g, const std::string& name) {
    const Term* v = find_goal_var(g, name);
    return v ? v->type : std::string{};
}

namespace {

std::vector<RewriteRule> simp_rules(const Goal& g, const Theory& thy) {
    std::vector<RewriteRule> rules = g.hypotheses; // hypotheses first
    auto theory_rules = thy.all_rules();
    rules.insert(rules.end(), theory_rules.begin(), theory_rules.end());
    return rules;
}

enum class SimpResult { Discharged, Rewritten, Failed };

SimpResult simp_goal(Goal& g, const Theory& thy, int cap) {
    auto rules = simp_rules(g, thy);
    NormalizeResult l = normalize(g.lhs, rules, cap);
    NormalizeResult r = normalize(g.rhs, rules, cap);
    if (!l.normal || !r.normal) return SimpResult::Failed; // cap exhausted
    if (l.term == r.term) return SimpResult::Discharged;
    if (l.steps == 0 && r.steps == 0) return SimpResult::Failed; // no progress
    g.lhs = std::move(l.term);
    g.rhs = std::move(r.term);
    return SimpResult::Rewritten;
}

bool hyp_discharges(const Goal& g) {
    // Hypothesis variables are fixed constants of the subgoal, so a
    // hypothesis closes the goal only at its literal instance.
    for (const auto& h : g.hypotheses)
        if (h.lhs == g.lhs && h.rhs == g.rhs) return true;
    return false;
}

// smallest base+suffix name unused in the goal and in `taken`
std::string fresh_name(const Goal& g, const std::string& base,
                       std::vector<std::string>& taken) {
    auto used = goal_vars(g);
    for (int suffix = 1;; ++suffix) {
        std::string cand = base + std::to_string(suffix);
        if (std::find(used.begin(), used.end(), cand) == used.end() &&
            std::find(taken.begin(), taken.end(), cand) == taken.end()) {
            taken.push_back(cand);
            return cand;
        }
    }
}

Goal substitute_goal(const Goal& g, const Binding& b) {
    Goal out;
    out.lhs = substitute(g.lhs, b);
    out.rhs = substitute(g.rhs, b);
    for (const auto& h : g.hypotheses)
        out.hypotheses.push_back(
            RewriteRule{substitute(h.lhs, b), substitute(h.rhs, b), h.rigid});
    return out;
}

bool valid_hypothesis(const Term& lhs, const Term& rhs) {
    if (lhs.kind != TermKind::Fun) return false;
    auto lv = free_vars(lhs);
    for (const auto& v : free_vars(rhs))
        if (std::find(lv.begin(), lv.end(), v) == lv.end()) return false;
    return true;
}

// structural case split on v; with_hypotheses adds one IH per recursive
// constructor argument
std::optional<std::vector<Goal>> split_cases(const Goal& g, const std::string& v,
                                             const Theory& thy, bool with_hypotheses) {
    const Term* var = find_goal_var(g, v);
    if (!var) return std::nullopt; // not free in the goal
    const Datatype* d = thy.datatype(var->type);
    if (!d) return std::nullopt; // not an inductive datatype
    std::vector<Goal> subgoals;
    for (const auto& c : d->constructors) {
        std::vector<std::string> taken;
        std::vector<Term> fresh;
        for (const auto& at : c.arg_types)
            fresh.push_back(Term::var(fresh_name(g, v, taken), at));
        Binding b{{v, Term::ctor(c.name, d->name, fresh)}};
        Goal sub = substitute_goal(g, b);
        if (with_hypotheses) {
            for (size_t i = 0; i < c.arg_types.size(); ++i) {
                if (c.arg_types[i] != d->name) continue; // recursive arguments only
                Binding ih_b{{v, fresh[i]}};
                Term ih_lhs = substitute(g.lhs, ih_b);
                Term ih_rhs = substitute(g.rhs, ih_b);
                if (valid_hypothesis(ih_lhs, ih_rhs))
                    sub.hypotheses.push_back(
                        RewriteRule{std::move(ih_lhs), std::move(ih_rhs), true});
            }
        }
        subgoals.push_back(std::move(sub));
    }
    return subgoals;
}

// simp/refl/hyp to fixpoint on one goal; true in `removed` when discharged
bool auto_goal(Goal& g, const Theory& thy, int cap, bool& removed) {
    bool changed = false;
    removed = false;
    for (;;) {
        SimpResult s = simp_goal(g, thy, cap);
        if (s == SimpResult::Discharged) {
            removed = true;
            return true;
        }
        if (s == SimpResult::Rewritten) {
            changed = true;
            continue;
        }
        if (g.lhs == g.rhs) { // refl
            removed = true;
            return true;
        }
        if (hyp_discharges(g)) {
            removed = true;
            return true;
        }
        return changed;
    }
}

} // namespace

std::vector<ProofState> apply_method(const ProofState& state, const MethodInstance& m,
                                     const Theory& theory, int cap) {
    if (state.goals.empty()) return {};
    const Goal& first = state.goals.front();
    auto rest = [&](std::vector<Goal> replacement) {
        ProofState out;
        out.goals = std::move(replacement);
        out.goals.insert(out.goals.end(), state.goals.begin() + 1, state.goals.end());
        return std::vector<ProofState>{std::move(out)};
    };

    switch (m.method) {
        case Method::Refl:
            if (first.lhs == first.rhs) return rest({});
            return {};
        case Method::Hyp:
            if (hyp_discharges(first)) return rest({});
            return {};
        case Method::Simp: {
            Goal g = first;
            switch (simp_goal(g, theory, cap)) {
                case SimpResult::Discharged: return rest({});
                case SimpResult::Rewritten: return rest({std::move(g)});
                case SimpResult::Failed: return {};
            }
            return {};
        }
        case Method::Induct:
        case Method::Cases: {
            auto subgoals =
                split_cases(first, m.target, theory, m.method == Method::Induct);
            if (!subgoals) return {};
            return rest(std::move(*subgoals));
        }
        case Method::Auto: {
            ProofState out;
            bool any = false;
            for (const auto& goal : state.goals) {
                Goal g = goal;
                bool removed = false;
                if (auto_goal(g, theory, cap, removed)) any = true;
                if (!removed) out.goals.push_back(std::move(g));
            }
            if (!any) return {};
            return {std::move(out)};
        }
    }
    return {};
}

bool replay(const ProofState& initial, std::span<const MethodInstance> trace,
            const Theory& theory, int cap) {
    ProofState cur = initial;
    for (const auto& m : trace) {
        auto next = apply_method(cur, m, theory, cap);
        if (next.empty()) return false;
        cur = std::move(next.front());
    }
    return cur.proved();
}

std::string to_string(const Goal& g) {
    std::ostringstream os;
    if (!g.hypotheses.empty()) {
        os << '{';
        for (size_t i = 0; i < g.hypotheses.size(); ++i) {
            if (i) os << "; ";
            os << to_string(g.hypotheses[i].lhs) << " -> " << to_string(g.hypotheses[i].rhs);
        }
        os << "} |- ";
    }
    os << to_string(g.lhs) << " = " << to_string(g.rhs);
    return os.str();
}

std::string to_string(const ProofState& s) {
    if (s.goals.empty()) return "<proved>";
    std::ostringstream os;
    for (size_t i = 0; i < s.goals.size(); ++i) {
        if (i) os << "\n";
        os << (i + 1) << ". " << to_string(s.goals[i]);
    }
    return os.str();
}

} // namespace prover
