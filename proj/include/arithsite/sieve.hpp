#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arithsite/errors.hpp"

namespace arithsite {

// A finitely generated sieve: a right ideal of the multiplicative monoid of
// positive integers, i.e. a set closed under taking multiples. The canonical
// representation is the unique divisibility-minimal antichain of generators,
// sorted ascending. The empty list is the zero sieve (the empty ideal); the
// single generator 1 is the full sieve.
//
// The set of all sieves is the subobject classifier of the presheaf topos on
// the one-object monoid category, and carries a Heyting algebra structure
// realised by the free functions below.
class Sieve {
  public:
    Sieve() = default; // the zero sieve

    static Sieve zero() { return Sieve(); }
    static Sieve one();
    // Canonicalizes: deduplicates and keeps divisibility-minimal entries.
    // Throws InvalidInputError if any generator is 0.
    static Sieve from_generators(std::span<const std::uint64_t> gens);
    static Sieve from_generators(std::initializer_list<std::uint64_t> gens);
    // Single-generator sieve n * N.
    static Sieve principal(std::uint64_t n);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_one() const { return gens_.size() == 1 && gens_[0] == 1; }

    // Ideal membership: some generator divides n. Throws on n = 0.
    bool contains(std::uint64_t n) const;

    // Canonical literal: "<>", "<1>", "<2,3>".
    std::string to_string() const;

    bool operator==(const Sieve&) const = default;
    // Lexicographic on generator lists; used only for deterministic ordering
    // of sieve sets, not for the ideal-inclusion order (see leq).
    bool operator<(const Sieve& o) const { return gens_ < o.gens_; }

  private:
    std::vector<std::uint64_t> gens_;
};

// Ideal inclusion: every generator of s is a member of t.
bool leq(const Sieve& s, const Sieve& t);

// Union of ideals.
Sieve join(const Sieve& s, const Sieve& t);

// Intersection of ideals: generated by the pairwise lcms.
Sieve meet(const Sieve& s, const Sieve& t);

// Heyting implication: the sieve of all e such that lcm(e, n) lies in t for
// every generator n of s. Right adjoint to meet.
Sieve implies(const Sieve& s, const Sieve& t);

// Heyting negation: one() when s is zero, zero() otherwise.
Sieve neg(const Sieve& s);

// Right monoid action: act(s, n) = { k : n*k in s }, generated by the values
// n_i / gcd(n_i, n).
Sieve act(const Sieve& s, std::uint64_t n);

// The exact finite set { act(r, s) : s in the ideal of S }, for S nonzero.
// Sorted lexicographically. Throws EmptySieveError when S is zero.
std::vector<Sieve> orbit(const Sieve& r, const Sieve& s);

// gcd of the generators. Throws EmptySieveError on the zero sieve.
std::uint64_t gcd_of(const Sieve& s);

// Double negation of t inside the frame { u : base <= u } + { zero }, the
// opens of the closed complement of the basic open of `base`. Maps zero to
// zero and everything else to one. `base` must be nonzero and t must lie in
// the frame (FrameDomainError otherwise).
Sieve relative_double_neg(const Sieve& t, const Sieve& base);

} // namespace arithsite
