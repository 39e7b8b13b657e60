#include "prover/term.hpp"

#include <algorithm>
#include <sstream>

namespace prover {

bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.name == b.name && a.type == b.type && a.args == b.args;
}

namespace {

bool match_into(const Term& pattern, const Term& subject,
                const std::vector<std::string>* rigid, Binding& b) {
    if (pattern.kind == TermKind::Var) {
        const bool is_rigid =
            rigid && std::find(rigid->begin(), rigid->end(), pattern.name) != rigid->end();
        if (is_rigid)
            return subject.kind == TermKind::Var && subject.name == pattern.name &&
                   subject.type == pattern.type;
        if (subject.type != pattern.type) return false;
        auto it = b.find(pattern.name);
        if (it != b.end()) return it->second == subject;
        b.emplace(pattern.name, subject);
        return true;
    }
    if (pattern.kind != subject.kind || pattern.name != subject.name ||
        pattern.args.size() != subject.args.size())
        return false;
    for (size_t i = 0; i < pattern.args.size(); ++i)
        if (!match_into(pattern.args[i], subject.args[i], rigid, b)) return false;
    return true;
}

} // namespace

std::optional<Binding> match(const Term& pattern, const Term& subject) {
    Binding b;
    if (match_into(pattern, subject, nullptr, b)) return b;
    return std::nullopt;
}

std::optional<Binding> match_rigid(const Term& pattern, const Term& subject,
                                   const std::vector<std::string>& rigid) {
    Binding b;
    if (match_into(pattern, subject, &rigid, b)) return b;
    return std::nullopt;
}

Term substitute(const Term& term, const Binding& binding) {
    if (term.kind == TermKind::Var) {
        auto it = binding.find(term.name);
        if (it == binding.end()) return term;
        if (it->second.type != term.type)
            throw IllTypedSubstitution("binding for " + term.name + " has type " +
                                       it->second.type + ", expected " + term.type);
        return it->second;
    }
    Term out = term;
    for (auto& a : out.args) a = substitute(a, binding);
    return out;
}

int term_depth(const Term& t) {
    int d = 0;
    for (const auto& a : t.args) d = std::max(d, term_depth(a));
    return 1 + d;
}

void collect_vars(const Term& t, std::vector<std::string>& order) {
    if (t.kind == TermKind::Var) {
        if (std::find(order.begin(), order.end(), t.name) == order.end())
            order.push_back(t.name);
        return;
    }
    for (const auto& a : t.args) collect_vars(a, order);
}

std::vector<std::string> free_vars(const Term& t) {
    std::vector<std::string> order;
    collect_vars(t, order);
    return order;
}

int var_occurrences(const Term& t, const std::string& name) {
    if (t.kind == TermKind::Var) return t.name == name ? 1 : 0;
    int n = 0;
    for (const auto& a : t.args) n += var_occurrences(a, name);
    return n;
}

std::string to_string(const Term& t) {
    if (t.args.empty()) return t.name;
    std::ostringstream os;
    os << t.name << '(';
    for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ", ";
        os << to_string(t.args[i]);
    }
    os << ')';
    return os.str();
}

} // namespace prover
