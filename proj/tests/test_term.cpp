#include "doctest.h"

#include "prover/kernel.hpp"
#include "prover/rng.hpp"
#include "test_util.hpp"

using namespace prover;
using namespace prover::testing;

TEST_CASE("match: direct pattern fit") {
    const Theory& thy = default_theory();
    auto b = match(t(thy, "add(Zero, m)"), t(thy, "add(Zero, Suc(Zero))"));
    REQUIRE(b.has_value());
    CHECK(b->at("m") == t(thy, "Suc(Zero)"));
}

TEST_CASE("match: variable pattern binds anything of its type") {
    const Theory& thy = default_theory();
    auto b = match(t(thy, "n"), t(thy, "mul(Suc(Zero), m)"));
    REQUIRE(b.has_value());
    CHECK(b->at("n") == t(thy, "mul(Suc(Zero), m)"));
    // type mismatch: nat variable vs list subject
    CHECK_FALSE(match(t(thy, "n"), t(thy, "Nil")).has_value());
}

TEST_CASE("match: head mismatch fails") {
    const Theory& thy = default_theory();
    CHECK_FALSE(match(t(thy, "add(Zero, m)"), t(thy, "mul(Zero, Zero)")).has_value());
}

TEST_CASE("match: repeated variables must agree") {
    const Theory& thy = default_theory();
    CHECK(match(t(thy, "add(n, n)"), t(thy, "add(Zero, Zero)")).has_value());
    CHECK_FALSE(match(t(thy, "add(n, n)"), t(thy, "add(Zero, Suc(Zero))")).has_value());
}

TEST_CASE("match_rigid: rigid variables stand only for themselves") {
    const Theory& thy = default_theory();
    CHECK(match_rigid(t(thy, "add(n, Zero)"), t(thy, "add(n, Zero)"), {"n"}).has_value());
    CHECK_FALSE(
        match_rigid(t(thy, "add(n, Zero)"), t(thy, "add(Suc(Zero), Zero)"), {"n"})
            .has_value());
}

TEST_CASE("substitute: basics and simultaneity") {
    const Theory& thy = default_theory();
    CHECK(substitute(t(thy, "Suc(n)"), {{"n", t(thy, "Zero")}}) == t(thy, "Suc(Zero)"));
    // simultaneous: x -> y does not cascade through the replacement
    CHECK(substitute(t(thy, "add(n, m)"), {{"n", t(thy, "m")}}) == t(thy, "add(m, m)"));
    CHECK(substitute(t(thy, "Zero"), {{"n", t(thy, "Suc(Zero)")}}) == t(thy, "Zero"));
}

TEST_CASE("substitute: ill-typed binding throws") {
    const Theory& thy = default_theory();
    CHECK_THROWS_AS(substitute(t(thy, "Suc(n)"), {{"n", t(thy, "Nil")}}),
                    IllTypedSubstitution);
}

TEST_CASE("substitute inverts match") {
    const Theory& thy = default_theory();
    RandomStream rng(11);
    const std::vector<std::string> patterns = {"add(n, m)", "add(Suc(n), m)",
                                               "mul(n, Suc(m))", "append(Cons(n, xs), ys)",
                                               "len(Cons(n, xs))"};
    for (int i = 0; i < 100; ++i) {
        const Term p = t(thy, patterns[static_cast<size_t>(i) % patterns.size()]);
        Binding b;
        RandomStream s = rng.fork(static_cast<uint64_t>(i));
        for (const auto& v : free_vars(p))
            b.emplace(v, random_term(thy, goal_var_type(Goal{{}, p, p}, v), 3, s));
        const Term subject = substitute(p, b);
        auto back = match(p, subject);
        REQUIRE(back.has_value());
        CHECK(substitute(p, *back) == subject);
    }
}

TEST_CASE("normalize: single base-rule step") {
    const Theory& thy = default_theory();
    auto rules = thy.all_rules();
    auto r = normalize(t(thy, "add(Zero, m)"), rules, 100);
    CHECK(r.term == t(thy, "m"));
    CHECK(r.steps == 1);
    CHECK(r.normal);
}

TEST_CASE("normalize: two-step trace add(Suc(Zero), Zero)") {
    const Theory& thy = default_theory();
    auto rules = thy.all_rules();
    auto r = normalize(t(thy, "add(Suc(Zero), Zero)"), rules, 100);
    CHECK(r.term == t(thy, "Suc(Zero)"));
    CHECK(r.steps == 2);
    CHECK(r.normal);
}

TEST_CASE("normalize: variable has no redex") {
    const Theory& thy = default_theory();
    auto rules = thy.all_rules();
    auto r = normalize(t(thy, "n"), rules, 100);
    CHECK(r.term == t(thy, "n"));
    CHECK(r.steps == 0);
    CHECK(r.normal);
}

TEST_CASE("normalize: cap exhaustion flags the partial term") {
    const Theory& thy = default_theory();
    auto rules = thy.all_rules();
    auto r = normalize(t(thy, "add(Suc(Zero), Zero)"), rules, 1);
    CHECK_FALSE(r.normal);
    CHECK(r.steps == 1);
}

TEST_CASE("normalize: idempotence on random terms") {
    const Theory& thy = default_theory();
    auto rules = thy.all_rules();
    RandomStream rng(7);
    for (int i = 0; i < 200; ++i) {
        RandomStream s = rng.fork(static_cast<uint64_t>(i));
        const std::string type = i % 2 ? "nat" : "list";
        const Term term = random_term(thy, type, 4, s);
        auto r = normalize(term, rules, kDefaultStepCap);
        REQUIRE(r.normal);
        auto again = normalize(r.term, rules, kDefaultStepCap);
        CHECK(again.steps == 0);
        CHECK(again.term == r.term);
    }
}

TEST_CASE("term printing round-trips") {
    const Theory& thy = default_theory();
    for (const char* text :
         {"add(Suc(Zero), mul(n, m))", "append(Cons(Zero, xs), ys)", "Zero", "n",
          "rev(Cons(Suc(n), Nil))"}) {
        const Term term = t(thy, text);
        CHECK(parse_term(to_string(term), thy, test_vars()) == term);
    }
}

TEST_CASE("term depth and variable order") {
    const Theory& thy = default_theory();
    CHECK(term_depth(t(thy, "Zero")) == 1);
    CHECK(term_depth(t(thy, "Suc(Zero)")) == 2);
    CHECK(term_depth(t(thy, "add(Suc(Zero), Zero)")) == 3);
    CHECK(free_vars(t(thy, "add(n, add(m, n))")) == std::vector<std::string>{"n", "m"});
    CHECK(var_occurrences(t(thy, "add(n, add(m, n))"), "n") == 2);
}
