#include "prover/strategy.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace prover {

StrategyExpr StrategyExpr::make_atom(MethodInstance m) {
    StrategyExpr e;
    e.kind = Kind::Atom;
    e.atom = std::move(m);
    return e;
}
StrategyExpr StrategyExpr::make_dynamic(Method m) {
    StrategyExpr e;
    e.kind = Kind::Dynamic;
    e.dynamic_method = m;
    return e;
}
StrategyExpr StrategyExpr::thens(std::vector<StrategyExpr> es) {
    StrategyExpr e;
    e.kind = Kind::Thens;
    e.children = std::move(es);
    return e;
}
StrategyExpr StrategyExpr::ors(std::vector<StrategyExpr> es) {
    StrategyExpr e;
    e.kind = Kind::Ors;
    e.children = std::move(es);
    return e;
}
StrategyExpr StrategyExpr::repeat(StrategyExpr inner) {
    StrategyExpr e;
    e.kind = Kind::Repeat;
    e.children.push_back(std::move(inner));
    return e;
}
StrategyExpr StrategyExpr::try_(StrategyExpr inner) {
    StrategyExpr e;
    e.kind = Kind::Try;
    e.children.push_back(std::move(inner));
    return e;
}

bool operator==(const StrategyExpr& a, const StrategyExpr& b) {
    return a.kind == b.kind && a.atom == b.atom && a.dynamic_method == b.dynamic_method &&
           a.children == b.children;
}

namespace {

const char* method_keyword(Method m) {
    switch (m) {
        case Method::Refl: return "Refl";
        case Method::Simp: return "Simp";
        case Method::Auto: return "Auto";
        case Method::Hyp: return "Hyp";
        case Method::Induct: return "Induct";
        case Method::Cases: return "Cases";
    }
    return "?";
}

struct StrategyParser {
    std::string_view text;
    size_t pos = 0; // 0-based

    [[noreturn]] void fail(const std::string& what) {
        throw StrategyParseError(what + " at position " + std::to_string(pos + 1),
                                 static_cast<int>(pos + 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return std::string(text.substr(start, pos - start));
    }

    StrategyExpr expr() {
        skip_ws();
        if (pos >= text.size()) fail("expected strategy expression");
        size_t word_start = pos;
        std::string word = ident();
        if (word == "Thens" || word == "Ors") {
            expect('[');
            std::vector<StrategyExpr> items;
            items.push_back(expr());
            while (eat(',')) items.push_back(expr());
            expect(']');
            return word == "Thens" ? StrategyExpr::thens(std::move(items))
                                   : StrategyExpr::ors(std::move(items));
        }
        if (word == "Repeat" || word == "Try") {
            expect('(');
            StrategyExpr inner = expr();
            expect(')');
            return word == "Repeat" ? StrategyExpr::repeat(std::move(inner))
                                    : StrategyExpr::try_(std::move(inner));
        }
        if (word == "Dynamic") {
            expect('(');
            std::string name = ident();
            if (name != "Induct" && name != "Cases") {
                pos = word_start;
                fail("unknown dynamic method " + name);
            }
            expect(')');
            return StrategyExpr::make_dynamic(name == "Induct" ? Method::Induct
                                                               : Method::Cases);
        }
        if (word == "Refl") return StrategyExpr::make_atom({Method::Refl, {}});
        if (word == "Simp") return StrategyExpr::make_atom({Method::Simp, {}});
        if (word == "Auto") return StrategyExpr::make_atom({Method::Auto, {}});
        if (word == "Hyp") return StrategyExpr::make_atom({Method::Hyp, {}});
        if (word == "Induct" || word == "Cases") {
            std::string target = ident();
            return StrategyExpr::make_atom(
                {word == "Induct" ? Method::Induct : Method::Cases, std::move(target)});
        }
        pos = word_start;
        fail("unknown method name " + word);
    }

    StrategyExpr parse() {
        StrategyExpr e = expr();
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input");
        return e;
    }
};

} // namespace

StrategyExpr parse_strategy(std::string_view text) {
    StrategyParser p{text};
    return p.parse();
}

std::string to_string(const StrategyExpr& e) {
    std::ostringstream os;
    switch (e.kind) {
        case StrategyExpr::Kind::Atom:
            os << method_keyword(e.atom.method);
            if (!e.atom.target.empty()) os << ' ' << e.atom.target;
            break;
        case StrategyExpr::Kind::Dynamic:
            os << "Dynamic(" << method_keyword(e.dynamic_method) << ')';
            break;
        case StrategyExpr::Kind::Thens:
        case StrategyExpr::Kind::Ors: {
            os << (e.kind == StrategyExpr::Kind::Thens ? "Thens [" : "Ors [");
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) os << ", ";
                os << to_string(e.children[i]);
            }
            os << ']';
            break;
        }
        case StrategyExpr::Kind::Repeat:
            os << "Repeat(" << to_string(e.children.front()) << ')';
            break;
        case StrategyExpr::Kind::Try:
            os << "Try(" << to_string(e.children.front()) << ')';
            break;
    }
    return os.str();
}

std::vector<MethodInstance> instantiate_dynamic(Method m, const ProofState& state) {
    std::vector<MethodInstance> out;
    if (state.goals.empty()) return out;
    const Goal& g = state.goals.front();
    for (const auto& v : goal_vars(g)) out.push_back(MethodInstance{m, v});
    return out;
}

const char* outcome_name(Outcome::Kind k) {
    switch (k) {
        case Outcome::Kind::Proved: return "proved";
        case Outcome::Kind::Exhausted: return "exhausted";
        case Outcome::Kind::BudgetOut: return "budget_out";
    }
    return "?";
}

namespace {

struct BudgetExhausted {};

struct Searcher {
    const Theory& theory;
    int budget;
    int step_cap;
    int used = 0;
    std::vector<MethodInstance> trace;

    using Cont = std::function<bool(const ProofState&)>;

    bool apply_atom(const ProofState& st, const MethodInstance& m, const Cont& k) {
        if (st.goals.empty()) return false; // nothing to operate on
        if (used == budget) throw BudgetExhausted{};
        ++used;
        auto next = apply_method(st, m, theory, step_cap);
        for (auto& s : next) {
            trace.push_back(m);
            if (k(s)) return true;
            trace.pop_back();
        }
        return false;
    }

    bool search(const ProofState& st, const StrategyExpr& e, const Cont& k) {
        // A proved state has nothing left to attack: every strategy is a
        // successful no-op on it (no budget, no trace).
        if (st.goals.empty()) return k(st);
        switch (e.kind) {
            case StrategyExpr::Kind::Atom:
                return apply_atom(st, e.atom, k);
            case StrategyExpr::Kind::Dynamic: {
                for (const auto& m : instantiate_dynamic(e.dynamic_method, st))
                    if (apply_atom(st, m, k)) return true;
                return false;
            }
            case StrategyExpr::Kind::Thens: {
                std::function<bool(size_t, const ProofState&)> step =
                    [&](size_t i, const ProofState& s) -> bool {
                    if (i == e.children.size()) return k(s);
                    return search(s, e.children[i],
                                  [&, i](const ProofState& s2) { return step(i + 1, s2); });
                };
                return step(0, st);
            }
            case StrategyExpr::Kind::Ors: {
                for (const auto& c : e.children)
                    if (search(st, c, k)) return true;
                return false;
            }
            case StrategyExpr::Kind::Repeat: {
                // Longest runs first. An iteration that leaves the state
                // unchanged is a fixpoint: stop iterating there, otherwise
                // zero-cost bodies (skips, empty Dynamic) would loop forever.
                bool fixpoint = false;
                if (search(st, e.children.front(), [&](const ProofState& s2) {
                        if (s2 == st) {
                            fixpoint = true;
                            return k(s2);
                        }
                        return search(s2, e, k);
                    }))
                    return true;
                if (fixpoint) return false; // k(st) already attempted
                return k(st);               // zero iterations
            }
            case StrategyExpr::Kind::Try:
                if (search(st, e.children.front(), k)) return true;
                return k(st);
        }
        return false;
    }
};

} // namespace

RunResult run_strategy(const ProofState& state, const StrategyExpr& expr,
                       const Theory& theory, int budget, int step_cap) {
    if (state.proved()) return {Outcome{Outcome::Kind::Proved, {}}, 0};
    if (budget <= 0) return {Outcome{Outcome::Kind::BudgetOut, {}}, 0};
    Searcher s{theory, budget, step_cap};
    try {
        bool found =
            s.search(state, expr, [](const ProofState& st) { return st.proved(); });
        if (found) return {Outcome{Outcome::Kind::Proved, std::move(s.trace)}, s.used};
        return {Outcome{Outcome::Kind::Exhausted, {}}, s.used};
    } catch (const BudgetExhausted&) {
        return {Outcome{Outcome::Kind::BudgetOut, {}}, s.used};
    }
}

const StrategyExpr* StrategyLibrary::find(const std::string& name) const {
    for (const auto& [n, e] : entries)
        if (n == name) return &e;
    return nullptr;
}

StrategyLibrary default_library() {
    StrategyLibrary lib;
    lib.entries.emplace_back("simp_loop", parse_strategy("Repeat(Simp)"));
    lib.entries.emplace_back("induct_auto", parse_strategy("Thens [Dynamic(Induct), Auto]"));
    lib.entries.emplace_back("cases_auto", parse_strategy("Thens [Dynamic(Cases), Auto]"));
    lib.entries.emplace_back(
        "auto_induct",
        parse_strategy("Thens [Auto, Try(Thens [Dynamic(Induct), Auto])]"));
    return lib;
}

StrategyLibrary parse_library(std::string_view text) {
    StrategyLibrary lib;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        size_t sep = line.find(":=");
        if (sep == std::string::npos)
            throw StrategyParseError("missing ':=' on line " + std::to_string(line_no),
                                     line_no);
        std::string name = line.substr(0, sep);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty())
            throw StrategyParseError("missing name on line " + std::to_string(line_no),
                                     line_no);
        if (lib.find(name))
            throw StrategyParseError("duplicate strategy " + name, line_no);
        lib.entries.emplace_back(name, parse_strategy(line.substr(sep + 2)));
    }
    if (lib.entries.empty()) throw StrategyParseError("empty strategy library", 0);
    return lib;
}

std::string to_string(const StrategyLibrary& lib) {
    std::ostringstream os;
    for (const auto& [name, expr] : lib.entries)
        os << name << " := " << to_string(expr) << "\n";
    return os.str();
}

} // namespace prover
