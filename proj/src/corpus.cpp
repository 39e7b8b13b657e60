#include "prover/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace prover {

namespace {

// ---------------------------------------------------------------- raw terms

struct RawTerm {
    std::string name;
    std::vector<RawTerm> args;
    bool applied = false; // had a parenthesized argument list
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct RawScanner {
    std::string_view text;
    size_t pos = 0;
    int line;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + (line ? " on line " + std::to_string(line) : ""), line);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (start == pos) fail("expected identifier");
        if (std::isdigit(static_cast<unsigned char>(text[start])))
            fail("identifier may not start with a digit");
        return std::string(text.substr(start, pos - start));
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    RawTerm term() {
        RawTerm t;
        t.name = ident();
        if (eat('(')) {
            t.applied = true;
            t.args.push_back(term());
            while (eat(',')) t.args.push_back(term());
            if (!eat(')')) fail("expected ')'");
        }
        return t;
    }
    void finish() {
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input");
    }
};

RawTerm parse_raw(std::string_view text, int line) {
    RawScanner s{text, 0, line};
    RawTerm t = s.term();
    s.finish();
    return t;
}

// ------------------------------------------------- function type inference

// Union-find over type nodes, each optionally bound to a datatype name.
struct TypeSolver {
    std::vector<int> parent;
    std::vector<std::string> bound;

    int fresh() {
        parent.push_back(static_cast<int>(parent.size()));
        bound.emplace_back();
        return parent.back();
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void bind(int x, const std::string& type, int line) {
        x = find(x);
        auto& b = bound[static_cast<size_t>(x)];
        if (b.empty())
            b = type;
        else if (b != type)
            throw ParseError("type mismatch: " + b + " vs " + type + " on line " +
                                 std::to_string(line),
                             line);
    }
    void unify(int a, int b, int line) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        const auto& ba = bound[static_cast<size_t>(a)];
        const auto& bb = bound[static_cast<size_t>(b)];
        if (!ba.empty() && !bb.empty() && ba != bb)
            throw ParseError("type mismatch: " + ba + " vs " + bb + " on line " +
                                 std::to_string(line),
                             line);
        if (bb.empty()) bound[static_cast<size_t>(b)] = ba;
        parent[static_cast<size_t>(a)] = b;
    }
    std::string resolve(int x) { return bound[static_cast<size_t>(find(x))]; }
};

struct FunSlots {
    std::vector<int> args;
    int result = -1;
};

struct TheoryBuilder {
    Theory thy; // datatypes filled before rule parsing
    std::set<std::string> fun_names;
    TypeSolver types;
    std::map<std::string, FunSlots> slots;

    FunSlots& get_slots(const std::string& name, size_t arity, int line) {
        auto it = slots.find(name);
        if (it == slots.end()) {
            FunSlots s;
            for (size_t i = 0; i < arity; ++i) s.args.push_back(types.fresh());
            s.result = types.fresh();
            it = slots.emplace(name, std::move(s)).first;
        } else if (it->second.args.size() != arity) {
            throw ParseError("arity mismatch for function " + name + " on line " +
                                 std::to_string(line),
                             line);
        }
        return it->second;
    }

    int infer(const RawTerm& t, std::map<std::string, int>& rule_vars, int line) {
        auto [dt, ctor] = thy.constructor(t.name);
        if (ctor) {
            if (t.args.size() != ctor->arg_types.size())
                throw ParseError("arity mismatch for constructor " + t.name + " on line " +
                                     std::to_string(line),
                                 line);
            for (size_t i = 0; i < t.args.size(); ++i)
                types.bind(infer(t.args[i], rule_vars, line), ctor->arg_types[i], line);
            int r = types.fresh();
            types.bind(r, dt->name, line);
            return r;
        }
        if (fun_names.count(t.name)) {
            FunSlots& s = get_slots(t.name, t.args.size(), line);
            for (size_t i = 0; i < t.args.size(); ++i)
                types.unify(infer(t.args[i], rule_vars, line), s.args[i], line);
            return s.result;
        }
        if (t.applied)
            throw ParseError("unknown symbol " + t.name + " on line " + std::to_string(line),
                             line);
        auto it = rule_vars.find(t.name);
        if (it == rule_vars.end()) it = rule_vars.emplace(t.name, types.fresh()).first;
        return it->second;
    }

    Term build(const RawTerm& t, const std::map<std::string, int>& rule_vars, int line) {
        auto [dt, ctor] = thy.constructor(t.name);
        if (ctor) {
            std::vector<Term> args;
            for (const auto& a : t.args) args.push_back(build(a, rule_vars, line));
            return Term::ctor(t.name, dt->name, std::move(args));
        }
        if (fun_names.count(t.name)) {
            std::vector<Term> args;
            for (const auto& a : t.args) args.push_back(build(a, rule_vars, line));
            return Term::fun(t.name, slots.at(t.name).result >= 0
                                         ? types.resolve(slots.at(t.name).result)
                                         : std::string{},
                             std::move(args));
        }
        const std::string ty = types.resolve(rule_vars.at(t.name));
        if (ty.empty())
            throw ParseError("cannot infer type of variable " + t.name + " on line " +
                                 std::to_string(line),
                             line);
        return Term::var(t.name, ty);
    }
};

std::string trimmed(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

bool valid_ident(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), ident_char);
}

} // namespace

Theory parse_theory(std::string_view text) {
    TheoryBuilder b;
    struct FunLine {
        std::string name;
        std::vector<std::pair<RawTerm, RawTerm>> rules;
        int line;
    };
    std::vector<FunLine> fun_lines;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trimmed(line);
        if (line.empty()) continue;
        if (line.rfind("datatype ", 0) == 0) {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("missing '=' in datatype on line " + std::to_string(line_no),
                                 line_no);
            Datatype d;
            d.name = trimmed(line.substr(9, eq - 9));
            if (!valid_ident(d.name))
                throw ParseError("bad datatype name on line " + std::to_string(line_no),
                                 line_no);
            for (const auto& part : split_on(line.substr(eq + 1), '|')) {
                std::istringstream ps(part);
                Constructor c;
                if (!(ps >> c.name) || !valid_ident(c.name))
                    throw ParseError("bad constructor on line " + std::to_string(line_no),
                                     line_no);
                std::string at;
                while (ps >> at) {
                    if (!valid_ident(at))
                        throw ParseError("bad argument type '" + at + "' on line " +
                                             std::to_string(line_no),
                                         line_no);
                    c.arg_types.push_back(at);
                }
                d.constructors.push_back(std::move(c));
            }
            if (d.constructors.empty())
                throw ParseError("datatype without constructors on line " +
                                     std::to_string(line_no),
                                 line_no);
            b.thy.datatypes.push_back(std::move(d));
        } else if (line.rfind("fun ", 0) == 0) {
            size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("missing ':' in fun on line " + std::to_string(line_no),
                                 line_no);
            FunLine f;
            f.name = trimmed(line.substr(4, colon - 4));
            f.line = line_no;
            if (!valid_ident(f.name))
                throw ParseError("bad function name on line " + std::to_string(line_no),
                                 line_no);
            for (const auto& rule_text : split_on(line.substr(colon + 1), ';')) {
                size_t arrow = rule_text.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("missing '->' in rule on line " + std::to_string(line_no),
                                     line_no);
                f.rules.emplace_back(parse_raw(rule_text.substr(0, arrow), line_no),
                                     parse_raw(rule_text.substr(arrow + 2), line_no));
            }
            if (f.rules.empty())
                throw ParseError("function without rules on line " + std::to_string(line_no),
                                 line_no);
            fun_lines.push_back(std::move(f));
        } else {
            throw ParseError("expected 'datatype' or 'fun' on line " + std::to_string(line_no),
                             line_no);
        }
    }

    for (const auto& f : fun_lines) b.fun_names.insert(f.name);

    // first pass: constraints
    std::vector<std::vector<std::map<std::string, int>>> var_envs(fun_lines.size());
    for (size_t fi = 0; fi < fun_lines.size(); ++fi) {
        const auto& f = fun_lines[fi];
        for (const auto& [raw_lhs, raw_rhs] : f.rules) {
            if (raw_lhs.name != f.name || !raw_lhs.applied)
                throw ParseError("rule head is not " + f.name + " on line " +
                                     std::to_string(f.line),
                                 f.line);
            std::map<std::string, int> env;
            int lt = b.infer(raw_lhs, env, f.line);
            int rt = b.infer(raw_rhs, env, f.line);
            b.types.unify(lt, rt, f.line);
            var_envs[fi].push_back(std::move(env));
        }
    }

    // resolve signatures
    for (const auto& f : fun_lines) {
        const FunSlots& s = b.slots.at(f.name);
        FunctionDef def;
        def.name = f.name;
        for (size_t i = 0; i < s.args.size(); ++i) {
            std::string t = b.types.resolve(s.args[i]);
            if (t.empty())
                throw ParseError("cannot infer type of argument " + std::to_string(i + 1) +
                                     " of " + f.name,
                                 f.line);
            def.arg_types.push_back(std::move(t));
        }
        def.result_type = b.types.resolve(s.result);
        if (def.result_type.empty())
            throw ParseError("cannot infer result type of " + f.name, f.line);
        b.thy.functions.push_back(std::move(def));
    }

    // second pass: typed rules (functions were appended in fun_lines order)
    for (size_t fi = 0; fi < fun_lines.size(); ++fi) {
        const auto& f = fun_lines[fi];
        FunctionDef& def = b.thy.functions[fi];
        for (size_t ri = 0; ri < f.rules.size(); ++ri) {
            Term lhs = b.build(f.rules[ri].first, var_envs[fi][ri], f.line);
            Term rhs = b.build(f.rules[ri].second, var_envs[fi][ri], f.line);
            def.rules.push_back(RewriteRule{std::move(lhs), std::move(rhs), false});
        }
    }

    try {
        b.thy.validate();
    } catch (const TheoryError& e) {
        throw ParseError(e.what(), 0);
    }
    return b.thy;
}

// ------------------------------------------------------------- conjectures

Term parse_term(std::string_view text, const Theory& theory,
                const std::vector<std::pair<std::string, std::string>>& vars) {
    RawTerm raw = parse_raw(text, 0);
    std::function<Term(const RawTerm&)> build = [&](const RawTerm& t) -> Term {
        auto [dt, ctor] = theory.constructor(t.name);
        if (ctor) {
            if (t.args.size() != ctor->arg_types.size())
                throw ParseError("arity mismatch for constructor " + t.name, 0);
            std::vector<Term> args;
            for (size_t i = 0; i < t.args.size(); ++i) {
                args.push_back(build(t.args[i]));
                if (args.back().type != ctor->arg_types[i])
                    throw ParseError("argument " + std::to_string(i + 1) + " of " + t.name +
                                         " has type " + args.back().type + ", expected " +
                                         ctor->arg_types[i],
                                     0);
            }
            return Term::ctor(t.name, dt->name, std::move(args));
        }
        if (const FunctionDef* f = theory.function(t.name)) {
            if (t.args.size() != f->arg_types.size())
                throw ParseError("arity mismatch for function " + t.name, 0);
            std::vector<Term> args;
            for (size_t i = 0; i < t.args.size(); ++i) {
                args.push_back(build(t.args[i]));
                if (args.back().type != f->arg_types[i])
                    throw ParseError("argument " + std::to_string(i + 1) + " of " + t.name +
                                         " has type " + args.back().type + ", expected " +
                                         f->arg_types[i],
                                     0);
            }
            return Term::fun(t.name, f->result_type, std::move(args));
        }
        if (t.applied) throw ParseError("unknown symbol " + t.name, 0);
        for (const auto& [name, type] : vars)
            if (name == t.name) return Term::var(name, type);
        throw ParseError("unbound variable " + t.name, 0);
    };
    return build(raw);
}

std::vector<Conjecture> parse_conjectures(std::string_view text, const Theory& theory) {
    std::vector<Conjecture> out;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trimmed(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("missing ':' on line " + std::to_string(line_no), line_no);
        Conjecture c;
        c.id = trimmed(line.substr(0, colon));
        if (!valid_ident(c.id))
            throw ParseError("bad conjecture id on line " + std::to_string(line_no), line_no);
        if (!seen.insert(c.id).second)
            throw ParseError("duplicate conjecture id " + c.id, line_no);
        std::string body = trimmed(line.substr(colon + 1));
        if (body.rfind("forall", 0) == 0 &&
            (body.size() == 6 || !ident_char(body[6]))) {
            size_t dot = body.find('.');
            if (dot == std::string::npos)
                throw ParseError("missing '.' after forall in " + c.id, line_no);
            std::string decls = trimmed(body.substr(6, dot - 6));
            body = trimmed(body.substr(dot + 1));
            if (!decls.empty()) {
                for (const auto& d : split_on(decls, ',')) {
                    auto parts = split_on(d, ':');
                    if (parts.size() != 2)
                        throw ParseError("bad declaration in " + c.id, line_no);
                    std::string name = trimmed(parts[0]);
                    std::string type = trimmed(parts[1]);
                    if (!valid_ident(name))
                        throw ParseError("bad variable name in " + c.id, line_no);
                    if (!theory.datatype(type))
                        throw ParseError("unknown datatype " + type + " in " + c.id, line_no);
                    for (const auto& [n, t] : c.vars)
                        if (n == name)
                            throw ParseError("duplicate variable " + name + " in " + c.id,
                                             line_no);
                    if (theory.constructor(name).second || theory.function(name))
                        throw ParseError("variable " + name + " in " + c.id +
                                             " shadows a theory symbol",
                                         line_no);
                    c.vars.emplace_back(std::move(name), std::move(type));
                }
            }
        }
        size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("missing '=' in " + c.id, line_no);
        try {
            c.lhs = parse_term(body.substr(0, eq), theory, c.vars);
            c.rhs = parse_term(body.substr(eq + 1), theory, c.vars);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " in " + c.id, line_no);
        }
        if (c.lhs.type != c.rhs.type)
            throw ParseError("sides of " + c.id + " have different types (" + c.lhs.type +
                                 " vs " + c.rhs.type + ")",
                             line_no);
        out.push_back(std::move(c));
    }
    return out;
}

std::string to_string(const Conjecture& c) {
    std::ostringstream os;
    os << c.id << " : ";
    if (!c.vars.empty()) {
        os << "forall ";
        for (size_t i = 0; i < c.vars.size(); ++i) {
            if (i) os << ", ";
            os << c.vars[i].first << ':' << c.vars[i].second;
        }
        os << ". ";
    }
    os << to_string(c.lhs) << " = " << to_string(c.rhs);
    return os.str();
}

ProofState to_state(const Conjecture& c) {
    return ProofState{{Goal{{}, c.lhs, c.rhs}}};
}

// --------------------------------------------------------------- generator

namespace {

std::vector<std::pair<std::string, std::string>> variable_pool(const Theory& thy) {
    std::vector<std::pair<std::string, std::string>> pool;
    auto taken = [&](const std::string& n) {
        if (thy.constructor(n).second || thy.function(n)) return true;
        for (const auto& [name, type] : pool)
            if (name == n) return true;
        return false;
    };
    for (const auto& d : thy.datatypes) {
        std::vector<std::string> prefs;
        if (d.name == "nat")
            prefs = {"n", "m"};
        else if (d.name == "list")
            prefs = {"xs", "ys"};
        else
            prefs = {d.name.substr(0, 1), d.name.substr(0, 1) + "2"};
        int added = 0;
        for (const auto& p : prefs)
            if (!taken(p)) {
                pool.emplace_back(p, d.name);
                ++added;
            }
        for (int suffix = 1; added < 2; ++suffix) {
            std::string cand = d.name.substr(0, 1) + std::to_string(suffix);
            if (!taken(cand)) {
                pool.emplace_back(cand, d.name);
                ++added;
            }
        }
    }
    return pool;
}

} // namespace

Term random_term(const Theory& theory, const std::string& type, int depth,
                 RandomStream& rng) {
    const auto pool = variable_pool(theory);
    std::function<Term(const std::string&, int)> gen = [&](const std::string& ty,
                                                           int d) -> Term {
        struct Option {
            enum class Kind { Var, Ctor, Fun } kind;
            const Constructor* ctor = nullptr;
            const FunctionDef* fun = nullptr;
            const std::pair<std::string, std::string>* var = nullptr;
        };
        std::vector<Option> options;
        for (const auto& v : pool)
            if (v.second == ty) options.push_back({Option::Kind::Var, nullptr, nullptr, &v});
        const Datatype* dt = theory.datatype(ty);
        for (const auto& c : dt->constructors)
            if (d > 1 || c.arg_types.empty())
                options.push_back({Option::Kind::Ctor, &c, nullptr, nullptr});
        if (d > 1)
            for (const auto& f : theory.functions)
                if (f.result_type == ty) options.push_back({Option::Kind::Fun, nullptr, &f});
        const Option& pick = options[rng.next_below(static_cast<uint32_t>(options.size()))];
        switch (pick.kind) {
            case Option::Kind::Var: return Term::var(pick.var->first, pick.var->second);
            case Option::Kind::Ctor: {
                std::vector<Term> args;
                for (const auto& at : pick.ctor->arg_types) args.push_back(gen(at, d - 1));
                return Term::ctor(pick.ctor->name, ty, std::move(args));
            }
            case Option::Kind::Fun: {
                std::vector<Term> args;
                for (const auto& at : pick.fun->arg_types) args.push_back(gen(at, d - 1));
                return Term::fun(pick.fun->name, ty, std::move(args));
            }
        }
        return Term::var(pool.front().first, pool.front().second); // unreachable
    };
    return gen(type, depth);
}

std::vector<Conjecture> generate_conjectures(const Theory& theory, int n, uint64_t seed,
                                             int depth_cap, const StrategyLibrary& lib,
                                             int vet_budget) {
    if (n < 1) throw GenerateError("n must be >= 1");
    if (theory.datatypes.empty()) throw GenerateError("theory has no datatypes");
    const auto pool = variable_pool(theory);
    const RandomStream root(seed);
    std::vector<Conjecture> out;
    const long long max_attempts = 1000LL * n;
    long long attempts = 0;
    while (static_cast<int>(out.size()) < n && attempts < max_attempts) {
        RandomStream s = root.fork(static_cast<uint64_t>(attempts));
        ++attempts;
        const auto& dt =
            theory.datatypes[s.next_below(static_cast<uint32_t>(theory.datatypes.size()))];
        const int lhs_depth = 2 + static_cast<int>(s.next_below(
                                      static_cast<uint32_t>(std::max(1, depth_cap - 1))));
        const int rhs_depth =
            1 + static_cast<int>(s.next_below(static_cast<uint32_t>(std::max(1, depth_cap))));
        Term lhs = random_term(theory, dt.name, lhs_depth, s);
        Term rhs = random_term(theory, dt.name, rhs_depth, s);
        if (lhs == rhs) continue; // syntactic identities carry no signal
        Conjecture c;
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        for (const auto& v : free_vars(c.lhs)) {
            for (const auto& p : pool)
                if (p.first == v) c.vars.push_back(p);
        }
        for (const auto& v : free_vars(c.rhs)) {
            bool have = false;
            for (const auto& [name, type] : c.vars) have = have || name == v;
            if (!have)
                for (const auto& p : pool)
                    if (p.first == v) c.vars.push_back(p);
        }
        const ProofState state = to_state(c);
        bool provable = false;
        for (const auto& [name, expr] : lib.entries) {
            if (run_strategy(state, expr, theory, vet_budget).outcome.proved()) {
                provable = true;
                break;
            }
        }
        if (!provable) continue;
        c.id = "g" + std::to_string(out.size() + 1);
        out.push_back(std::move(c));
    }
    if (static_cast<int>(out.size()) < n)
        throw GenerateError("found only " + std::to_string(out.size()) + " of " +
                            std::to_string(n) + " provable conjectures in " +
                            std::to_string(attempts) + " samples");
    return out;
}

// ----------------------------------------------------------------- labels

LabelResult label_corpus(std::span<const Conjecture> conjectures, const Theory& theory,
                         int budget, int step_cap) {
    static const StrategyExpr finisher =
        parse_strategy("Thens [Auto, Try(Thens [Dynamic(Induct), Auto])]");
    LabelResult result;
    for (const auto& c : conjectures) {
        const ProofState state = to_state(c);
        std::vector<MethodInstance> firsts;
        firsts.push_back({Method::Simp, {}});
        for (const auto& v : goal_vars(state.goals.front()))
            firsts.push_back({Method::Induct, v});
        for (const auto& v : goal_vars(state.goals.front()))
            firsts.push_back({Method::Cases, v});
        firsts.push_back({Method::Auto, {}});
        firsts.push_back({Method::Refl, {}});
        firsts.push_back({Method::Hyp, {}});

        bool labeled = false;
        for (const auto& first : firsts) {
            StrategyExpr attempt = StrategyExpr::thens(
                {StrategyExpr::make_atom(first), finisher});
            if (run_strategy(state, attempt, theory, budget, step_cap).outcome.proved()) {
                result.labels.push_back(Label{c.id, method_name(first.method)});
                labeled = true;
                break;
            }
        }
        if (!labeled) ++result.dropped;
    }
    return result;
}

std::string labels_to_csv(std::span<const Label> labels) {
    std::ostringstream os;
    os << "id,method\n";
    for (const auto& l : labels) os << l.id << ',' << l.method << "\n";
    return os.str();
}

std::vector<Label> parse_label_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty label file", 0);
    if (trimmed(line) != "id,method")
        throw ParseError("label file must start with header 'id,method'", 1);
    std::vector<Label> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = trimmed(line);
        if (line.empty()) continue;
        auto parts = split_on(line, ',');
        if (parts.size() != 2)
            throw ParseError("expected 'id,method' on line " + std::to_string(line_no),
                             line_no);
        if (!method_from_name(parts[1]))
            throw ParseError("unknown method " + parts[1] + " on line " +
                                 std::to_string(line_no),
                             line_no);
        out.push_back(Label{parts[0], parts[1]});
    }
    return out;
}

} // namespace prover
