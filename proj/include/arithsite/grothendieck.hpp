#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithsite/sieve.hpp"

namespace arithsite {

// A candidate family of covering sieves: either G_P (all sieves containing a
// principal sieve generated by an integer supported in the prime set P), or
// an explicit finite table. G_P is a Grothendieck topology for every P; a
// table usually is not, and the checker exists to refute it.
struct FamilySpec {
    enum class Kind { GP, Table };

    Kind kind = Kind::GP;
    std::vector<std::uint64_t> primes;   // GP: the allowed prime divisors
    std::vector<Sieve> members;          // Table: explicit members, canonical
    bool claims_upward_closed = false;   // Table: asserted upward closure

    static FamilySpec gp(std::vector<std::uint64_t> primes);
    static FamilySpec table(std::vector<Sieve> members, bool claims_upward_closed = false);

    bool member(const Sieve& s) const;
    std::string to_string() const;
};

// Membership in G_P: some generator of s has all its prime divisors in P.
// Equivalent to the existence of any member m of s supported in P, since the
// generator dividing such an m already qualifies.
bool in_GP(const Sieve& s, const std::vector<std::uint64_t>& P);

struct AxiomCheckBudget {
    std::uint64_t cases = 200;
    std::uint64_t seed = 42;
    unsigned max_generators = 3;
    std::uint64_t max_value = 30;
};

struct StabilityCounterexample {
    Sieve member;
    std::uint64_t n;
    Sieve acted; // act(member, n), outside the family
};

struct TransitivityCounterexample {
    Sieve candidate; // r outside the family
    Sieve member;    // s in the family with orbit(r, s) inside it
    std::vector<Sieve> orbit;
};

// Result of sampling the three Grothendieck-topology axioms. The premise of
// transitivity is evaluated exactly through the finite orbit; a clean report
// certifies only the sampled instances, while any recorded counterexample is
// an exact refutation.
struct AxiomCheckReport {
    bool axiom1_holds = false; // the full sieve belongs to the family
    std::uint64_t stability_cases = 0;
    std::uint64_t transitivity_cases = 0;
    std::uint64_t stability_violations = 0;
    std::uint64_t transitivity_violations = 0;
    std::vector<StabilityCounterexample> stability;    // first few found
    std::vector<TransitivityCounterexample> transitivity;

    bool ok() const {
        return axiom1_holds && stability_violations == 0 && transitivity_violations == 0;
    }
    std::string to_string() const;
};

// Throws InvalidInputError when a table claims upward closure but a sampled
// superset of a member is missing.
AxiomCheckReport axiom_check(const FamilySpec& family, const AxiomCheckBudget& budget);

} // namespace arithsite
