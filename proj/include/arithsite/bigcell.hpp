#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithsite/rational.hpp"
#include "arithsite/supernatural.hpp"

namespace arithsite {

// A commensurable rank-2 lattice in Conway's canonical form: generated by
// scale*e1 + shift*e2 and e2, with scale a positive rational and shift a
// rational mod 1 stored in [0, 1).
struct ConwayLattice {
    Rational scale;
    Rational shift;

    ConwayLattice(Rational scale_, Rational shift_);

    bool operator==(const ConwayLattice&) const = default;
    std::string to_string() const; // "(2, 1/2)"
};

// Conway's hyperdistance: det(alpha * D) where D is the exact rational basis
// change matrix between the two lattices and alpha is the least positive
// rational making alpha*D integral. Always a positive integer, symmetric in
// its arguments, and 1 exactly on equal lattices.
std::uint64_t hyperdistance(const ConwayLattice& a, const ConwayLattice& b);

// Closed form for integer lattices: (M*N) / gcd(M,N)^2.
std::uint64_t hyperdistance_integers(std::uint64_t m, std::uint64_t n);

// All N <= bound at prime hyperdistance from the integer lattice L_M,
// ascending. These are the neighbours of L_M in the big-picture graph.
std::vector<std::uint64_t> bigcell_neighbors(std::uint64_t m, std::uint64_t bound);

// The divisor set of a supernatural number truncated at a bound. Such sets
// are exactly the bounded fragments of the points of the presheaf topos on
// the reverse-division poset of positive integers.
struct DivisorTruncation {
    std::uint64_t bound = 1;
    std::vector<std::uint64_t> members; // sorted, distinct, all <= bound

    bool operator==(const DivisorTruncation&) const = default;
};

DivisorTruncation divisor_truncation(const Supernatural& s, std::uint64_t bound);

// 1 belongs, divisor-closed, and closed under lcms that stay under the
// bound.
bool is_point_truncation(const DivisorTruncation& t);

} // namespace arithsite
