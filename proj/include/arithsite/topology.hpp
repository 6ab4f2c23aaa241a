#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithsite/sieve.hpp"
#include "arithsite/supernatural.hpp"

namespace arithsite {

// Membership in the basic open X_l(S) of the localic topology on the space
// of supernatural numbers: some generator of S divides s.
bool in_Xl(const Supernatural& s, const Sieve& S);

// Membership in the basic open X_s(S) of the sieve topology on the class
// space. The defining condition asks for an infinite product of elements of
// S dividing a representative; for finitely generated S this is equivalent
// to some generator having all its prime divisors inside the class's
// infinity-support (pigeonhole over the generators in one direction, a
// repeated single generator in the other).
bool in_Xs(const SupernaturalClass& c, const Sieve& S);

// Membership in the basic open X_a(P) of the arithmetic topology: no prime
// of P has infinite exponent.
bool in_Xa(const SupernaturalClass& c, const std::vector<std::uint64_t>& P);

// A patch-constructible subset of the class space: a boolean formula whose
// atoms are the sieve-topology basic opens X_s(S). Constants fold away on
// construction, so True/False only ever appear as whole formulas; atoms on
// the zero and full sieves fold to False and True.
class Constructible {
  public:
    enum class Kind { True, False, Atom, Not, And, Or };

    static Constructible truth();
    static Constructible falsity();
    static Constructible atom(Sieve s);
    static Constructible negation(Constructible c);
    static Constructible conjunction(Constructible a, Constructible b);
    static Constructible disjunction(Constructible a, Constructible b);
    static Constructible conjunction(std::vector<Constructible> cs);
    static Constructible disjunction(std::vector<Constructible> cs);

    Kind kind() const { return kind_; }
    const Sieve& atom_sieve() const { return atom_; }
    const std::vector<Constructible>& children() const { return kids_; }

    // Evaluate with the given truth assignment for atoms.
    template <typename AtomPred>
    bool eval(const AtomPred& atom_true) const {
        switch (kind_) {
            case Kind::True: return true;
            case Kind::False: return false;
            case Kind::Atom: return atom_true(atom_);
            case Kind::Not: return !kids_[0].eval(atom_true);
            case Kind::And:
                for (const auto& k : kids_)
                    if (!k.eval(atom_true)) return false;
                return true;
            case Kind::Or:
                for (const auto& k : kids_)
                    if (k.eval(atom_true)) return true;
                return false;
        }
        return false;
    }

    // Union of the prime supports of all atom generators, ascending.
    std::vector<std::uint64_t> relevant_primes() const;

    // "any", "none", "Xs<2,3>", "!C", "C & D", "C | D" with precedence
    // ! > & > |.
    std::string to_string() const;

    // Structural equality; semantic equality is c_equal.
    bool operator==(const Constructible&) const = default;

  private:
    Constructible(Kind k) : kind_(k) {}
    Kind kind_;
    Sieve atom_;
    std::vector<Constructible> kids_;
};

inline constexpr unsigned kDefaultPrimeBudget = 20;

// Point evaluation: each atom X_s(S) is tested at c.
bool c_member(const SupernaturalClass& c, const Constructible& C);

// Exact emptiness test. Atom truth depends only on the intersection of the
// infinity-support with the relevant primes R, and every subset of R is
// realized by a class, so enumerating the 2^|R| subsets decides emptiness.
// Throws ResourceLimitError when |R| exceeds the budget.
bool c_is_empty(const Constructible& C, unsigned prime_budget = kDefaultPrimeBudget);

// Semantic equality: the symmetric difference is empty.
bool c_equal(const Constructible& C, const Constructible& D,
             unsigned prime_budget = kDefaultPrimeBudget);

// The integer n with i^{-1}(X_a(P)) the Zariski basic open of n, i.e. the
// product of P. P must be a nonempty set of primes.
std::uint64_t preimage_i(const std::vector<std::uint64_t>& P);

// The integer gcd(S) with j^{-1}(X_s(S)) the Zariski basic open of that gcd.
std::uint64_t preimage_j(const Sieve& S);

} // namespace arithsite
