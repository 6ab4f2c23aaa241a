#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithsite/grothendieck.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sampler.hpp"

using namespace arithsite;

namespace {

Sieve sv(std::initializer_list<std::uint64_t> gens) { return Sieve::from_generators(gens); }

} // namespace

TEST_CASE("GP membership") {
    CHECK(in_GP(sv({6}), {2, 3}));
    CHECK_FALSE(in_GP(sv({6}), {2}));
    CHECK(in_GP(Sieve::one(), {}));
    CHECK_FALSE(in_GP(Sieve::zero(), {2, 3, 5}));
    CHECK(in_GP(sv({10, 21}), {3, 7}));

    // Witness search over the ideal agrees: some m <= 1000 in the ideal with
    // support inside P exists iff a generator qualifies.
    auto witness = [](const Sieve& s, const std::vector<std::uint64_t>& P) {
        for (std::uint64_t m = 1; m <= 1000; ++m) {
            if (!s.contains(m)) continue;
            std::uint64_t rest = m;
            for (std::uint64_t p : P)
                while (rest % p == 0) rest /= p;
            if (rest == 1) return true;
        }
        return false;
    };
    CHECK(witness(sv({6}), {2, 3}));
    CHECK_FALSE(witness(sv({6}), {2}));
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Sieve s = random_sieve(rng, 3, 30);
        std::vector<std::uint64_t> P;
        for (std::uint64_t p : {2, 3, 5, 7})
            if (rng.chance(1, 2)) P.push_back(static_cast<std::uint64_t>(p));
        CHECK(in_GP(s, P) == witness(s, P));
    }
}

TEST_CASE("GP upward closure") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        Sieve s = random_sieve(rng, 3, 30);
        Sieve bigger = join(s, random_sieve(rng, 3, 30));
        if (in_GP(s, {2, 3})) CHECK(in_GP(bigger, {2, 3}));
    }
}

TEST_CASE("chaotic topology is GP over the empty prime set") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Sieve s = random_sieve(rng, 3, 30);
        CHECK(in_GP(s, {}) == s.is_one());
    }
}

TEST_CASE("principal action identity from the GP proof") {
    Rng rng(37);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t m = rng.range(1, 1000);
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[rng.below(5)];
        Sieve expected = m % p == 0 ? Sieve::principal(m / p) : Sieve::principal(m);
        CHECK(act(Sieve::principal(m), p) == expected);
    }
}

TEST_CASE("axiom check certifies GP families") {
    AxiomCheckBudget b;
    b.cases = 120;
    b.seed = 42;
    for (auto P : {std::vector<std::uint64_t>{}, {2}, {2, 3}, {3, 5, 7}}) {
        AxiomCheckReport rep = axiom_check(FamilySpec::gp(P), b);
        CHECK(rep.axiom1_holds);
        CHECK(rep.stability_violations == 0);
        CHECK(rep.transitivity_violations == 0);
        CHECK(rep.ok());
    }
}

TEST_CASE("axiom check refutes the augmented chaotic table") {
    AxiomCheckBudget b;
    b.cases = 100;
    b.seed = 42;
    FamilySpec broken = FamilySpec::table({Sieve::one(), Sieve::principal(2)});
    AxiomCheckReport rep = axiom_check(broken, b);
    CHECK(rep.axiom1_holds);
    CHECK_FALSE(rep.ok());
    CHECK(rep.transitivity_violations > 0);
    // The canonical witness: orbit(<4>, <2>) = {<1>, <2>} lies in the table
    // but <4> does not.
    bool found = false;
    for (const auto& cx : rep.transitivity)
        if (cx.candidate == Sieve::principal(4) && cx.member == Sieve::principal(2))
            found = true;
    CHECK(found);
}

TEST_CASE("axiom check accepts the chaotic table") {
    AxiomCheckBudget b;
    b.cases = 100;
    b.seed = 42;
    AxiomCheckReport rep = axiom_check(FamilySpec::table({Sieve::one()}, true), b);
    CHECK(rep.ok());
}

TEST_CASE("upward closure claims are validated") {
    AxiomCheckBudget b;
    b.cases = 50;
    b.seed = 42;
    FamilySpec f = FamilySpec::table({Sieve::one(), Sieve::principal(2)}, true);
    CHECK_THROWS_AS(axiom_check(f, b), InvalidInputError);
}

TEST_CASE("a table containing the zero sieve fails transitivity vacuously") {
    // The orbit premise over the zero sieve is vacuous, so any non-member
    // refutes transitivity; only the improper family contains zero.
    AxiomCheckBudget b;
    b.cases = 30;
    b.seed = 42;
    AxiomCheckReport rep = axiom_check(FamilySpec::table({Sieve::one(), Sieve::zero()}), b);
    CHECK_FALSE(rep.ok());
    CHECK(rep.transitivity_violations > 0);
}

TEST_CASE("family without the full sieve fails axiom 1") {
    AxiomCheckBudget b;
    b.cases = 30;
    b.seed = 42;
    AxiomCheckReport rep = axiom_check(FamilySpec::table({sv({2})}), b);
    CHECK_FALSE(rep.axiom1_holds);
    CHECK_FALSE(rep.ok());
}
