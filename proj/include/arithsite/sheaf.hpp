#pragma once

#include <string>

#include "arithsite/rational.hpp"
#include "arithsite/sieve.hpp"
#include "arithsite/supernatural.hpp"

namespace arithsite {

// A subring of the rationals described by the set of invertible primes:
// a/b belongs iff every prime factor of b is invertible. A finite invertible
// set gives Z[1/p : p in set]; a cofinite one gives the semilocal ring of
// fractions with denominator coprime to the excluded primes (Q when nothing
// is excluded). This is all the structure the section and stalk
// computations ever need; no ring arithmetic is modelled.
struct DenominatorSpec {
    PrimeSetDesc invertible;

    bool contains(const Rational& q) const;
    bool operator==(const DenominatorSpec&) const = default;

    // "Z", "Z[1/2,1/3]", "Q", "Z_(5,7)".
    std::string to_string() const;
};

// Sections of the pushforward of the Zariski structure sheaf along the
// arithmetic-topology inclusion, over the basic open X_a(P): Z with the
// primes of P inverted.
DenominatorSpec sections_i(const std::vector<std::uint64_t>& P);

// Stalk at a class: denominators must avoid every prime with infinite
// exponent, so the invertible set is the complement of the
// infinity-support. At the class of p^inf this is the local ring at p.
DenominatorSpec stalk_i(const SupernaturalClass& c);

// Sections over the sieve-topology basic open X_s(S): Z with gcd(S)
// inverted. S must be nonzero.
DenominatorSpec sections_j(const Sieve& S);

// Stalk at a class: exactly the primes of the infinity-support become
// invertible. At the j-image of p this is again the local ring at p.
DenominatorSpec stalk_j(const SupernaturalClass& c);

bool contains_rational(const DenominatorSpec& spec, const Rational& q);

} // namespace arithsite
