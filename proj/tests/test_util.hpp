#pragma once

// Shared fixtures for the unit suites.

#include <string>

#include "prover/corpus.hpp"

namespace prover::testing {

inline const char* kDefaultTheory = R"(
datatype nat = Zero | Suc nat
datatype list = Nil | Cons nat list

fun add: add(Zero, y) -> y ; add(Suc(x), y) -> Suc(add(x, y))
fun mul: mul(Zero, y) -> Zero ; mul(Suc(x), y) -> add(y, mul(x, y))
fun append: append(Nil, ys) -> ys ; append(Cons(x, xs), ys) -> Cons(x, append(xs, ys))
fun rev: rev(Nil) -> Nil ; rev(Cons(x, xs)) -> append(rev(xs), Cons(x, Nil))
fun len: len(Nil) -> Zero ; len(Cons(x, xs)) -> Suc(len(xs))
fun double: double(Zero) -> Zero ; double(Suc(x)) -> Suc(Suc(double(x)))
)";

// default theory plus a partial function (pred has no Zero case)
inline const char* kDemoTheory = R"(
datatype nat = Zero | Suc nat
datatype list = Nil | Cons nat list

fun add: add(Zero, y) -> y ; add(Suc(x), y) -> Suc(add(x, y))
fun mul: mul(Zero, y) -> Zero ; mul(Suc(x), y) -> add(y, mul(x, y))
fun append: append(Nil, ys) -> ys ; append(Cons(x, xs), ys) -> Cons(x, append(xs, ys))
fun rev: rev(Nil) -> Nil ; rev(Cons(x, xs)) -> append(rev(xs), Cons(x, Nil))
fun len: len(Nil) -> Zero ; len(Cons(x, xs)) -> Suc(len(xs))
fun double: double(Zero) -> Zero ; double(Suc(x)) -> Suc(Suc(double(x)))
fun pred: pred(Suc(x)) -> x
)";

inline const Theory& default_theory() {
    static const Theory thy = parse_theory(kDefaultTheory);
    return thy;
}

inline const Theory& demo_theory() {
    static const Theory thy = parse_theory(kDemoTheory);
    return thy;
}

// parses "forall n:nat. add(n, Zero) = n" (or a ground equation) into a
// one-goal proof state
inline ProofState goal_state(const Theory& thy, const std::string& equation) {
    auto cs = parse_conjectures("g : " + equation, thy);
    return to_state(cs.front());
}

// common variable environment for hand-built terms
inline const std::vector<std::pair<std::string, std::string>>& test_vars() {
    static const std::vector<std::pair<std::string, std::string>> vars = {
        {"n", "nat"}, {"m", "nat"}, {"k", "nat"}, {"xs", "list"}, {"ys", "list"}};
    return vars;
}

inline Term t(const Theory& thy, const std::string& text) {
    return parse_term(text, thy, test_vars());
}

} // namespace prover::testing
