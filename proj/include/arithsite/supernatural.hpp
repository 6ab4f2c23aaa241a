#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arithsite/errors.hpp"

namespace arithsite {

// An exponent in N + {infinity}.
class Exponent {
  public:
    static Exponent infinite() { return Exponent(0, true); }
    static Exponent finite(std::uint64_t v) { return Exponent(v, false); }

    bool is_infinite() const { return inf_; }
    std::uint64_t finite_value() const;

    bool operator==(const Exponent&) const = default;
    bool operator<=(const Exponent& o) const;

    // Addition with infinity absorbing; finite part overflow-checked.
    Exponent operator+(const Exponent& o) const;

    std::string to_string() const;

  private:
    Exponent(std::uint64_t v, bool inf) : v_(v), inf_(inf) {}
    std::uint64_t v_;
    bool inf_;
};

// A finite or cofinite set of primes, canonical: the listed primes are
// sorted and distinct. Finite and cofinite descriptors are never equal as
// sets, so structural equality is semantic equality.
struct PrimeSetDesc {
    enum class Mode { Finite, Cofinite };

    Mode mode = Mode::Finite;
    std::vector<std::uint64_t> primes; // the set itself, or its complement

    // Validates primality, sorts, deduplicates.
    static PrimeSetDesc finite(std::vector<std::uint64_t> ps);
    static PrimeSetDesc cofinite_complement(std::vector<std::uint64_t> ps);

    bool contains(std::uint64_t p) const;
    PrimeSetDesc complement() const;
    bool is_finite() const { return mode == Mode::Finite; }

    bool operator==(const PrimeSetDesc&) const = default;
};

// A finitely described supernatural number: a formal product over all primes
// of p^(s_p) with s_p in N + {infinity}, where all but finitely many
// exponents equal a default of 0 or infinity. This fragment covers the
// natural numbers, p^inf, and products of p^inf over all but finitely many
// primes, and is closed under multiplication.
class Supernatural {
  public:
    enum class Default { Zero, Inf };

    Supernatural() : default_(Default::Zero) {} // the unit 1

    // Drops exceptions equal to the default; validates primality of keys
    // and, for an Inf default, finiteness of the exceptional exponents.
    static Supernatural make(Default d, std::map<std::uint64_t, Exponent> exceptions);
    static Supernatural from_nat(std::uint64_t n);
    // The product of p^inf over every prime.
    static Supernatural all_inf();

    Default default_exponent() const { return default_; }
    const std::map<std::uint64_t, Exponent>& exceptions() const { return exc_; }
    Exponent exponent(std::uint64_t p) const;

    // Canonical literal: "sn(1)", "sn(2^inf * 3^2)", "sn(all^inf / 5^0)".
    std::string to_string() const;

    bool operator==(const Supernatural&) const = default;

  private:
    Default default_;
    std::map<std::uint64_t, Exponent> exc_;
};

// A point of the space of supernatural classes: supernaturals up to the
// equivalence identifying s and t when they have the same infinity-support
// and cofinitely equal finite exponents. On the finitely described fragment
// the second clause holds automatically, so the infinity-support is a
// complete invariant and is all the class stores.
struct SupernaturalClass {
    PrimeSetDesc inf_support;

    bool operator==(const SupernaturalClass&) const = default;
    std::string to_string() const;
};

Supernatural mul(const Supernatural& s, const Supernatural& t);
// Pointwise exponent comparison.
bool divides(const Supernatural& s, const Supernatural& t);
// The set of primes with infinite exponent.
PrimeSetDesc inf_support(const Supernatural& s);
// Projection of a supernatural number onto its class.
SupernaturalClass class_of(const Supernatural& s);
bool equivalent(const Supernatural& s, const Supernatural& t);

// The class of p^inf (prime required).
SupernaturalClass i_point(std::uint64_t p);
// The class of the product of q^inf over all primes q != p (prime required).
SupernaturalClass j_point(std::uint64_t p);

} // namespace arithsite
