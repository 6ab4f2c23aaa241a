#pragma once

#include <string>

#include "arithsite/sieve.hpp"
#include "arithsite/topology.hpp"

namespace arithsite {

// A constructible truth fluctuation: a pair of a sieve S and a continuous
// map from X_s(S) to {0,1} for the patch topology, stored as the
// characteristic formula of its support. The support is normalized to lie
// inside the atom of the domain on construction. Together with the
// operations below these pairs form a strongly distributive, left-handed
// skew lattice (a noncommutative frame) whose Leech quotient is the lattice
// of sieves; `shadow` is the quotient map and `embed` its canonical section.
//
// Equality of fluctuations is semantic: equal domains and c_equal supports.
// Use theta_equal, not operator==.
struct Fluctuation {
    Sieve domain;
    Constructible support;

    Fluctuation() : domain(Sieve::zero()), support(Constructible::falsity()) {}
    Fluctuation(Sieve d, Constructible s)
        : domain(std::move(d)),
          support(Constructible::conjunction(std::move(s), Constructible::atom(domain))) {}

    // "th(<2>, Xs<2> & !Xs<3>)".
    std::string to_string() const;
};

// The minimal element (empty domain, empty support).
Fluctuation theta_bottom();

// Restriction of x to X_s(domain) intersected with X_s(t).
Fluctuation restrict_to(const Fluctuation& x, const Sieve& t);

// Meet: intersection of domains, keeping the LEFT fluctuation's values.
Fluctuation meet(const Fluctuation& a, const Fluctuation& b);

// Join: union of domains; the RIGHT fluctuation wins on its own domain and
// the left fills the rest (override union).
Fluctuation join(const Fluctuation& a, const Fluctuation& b);

// Implication: domain is the sieve implication of the domains; the right
// support extended by truth on the rest of the implication domain.
Fluctuation implies(const Fluctuation& a, const Fluctuation& b);

// Natural partial order: extension of local sections.
bool leq(const Fluctuation& a, const Fluctuation& b,
         unsigned prime_budget = kDefaultPrimeBudget);

// The Leech equivalence: same domain.
bool equiv(const Fluctuation& a, const Fluctuation& b);

// a and b commute for meet (equivalently join) iff their restrictions to
// the common domain agree.
bool commutes(const Fluctuation& a, const Fluctuation& b,
              unsigned prime_budget = kDefaultPrimeBudget);

// Projection onto the commutative shadow.
const Sieve& shadow(const Fluctuation& a);

// The section of shadow sending a sieve to constant truth on its open.
Fluctuation embed(const Sieve& s);

// Semantic equality.
bool theta_equal(const Fluctuation& a, const Fluctuation& b,
                 unsigned prime_budget = kDefaultPrimeBudget);

} // namespace arithsite
