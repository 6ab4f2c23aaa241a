#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "arithsite/bigcell.hpp"
#include "arithsite/parser.hpp"
#include "arithsite/skew.hpp"

namespace arithsite {

// Sorts of the expression language. Values never coerce between sorts; every
// operator and call resolves on the exact sorts of its operands.
enum class Sort {
    Sieve,
    Supernatural,
    Class,
    Theta,
    Constructible,
    PrimeSet,
    Rational,
    Nat,
    Bool,
    Ring,
    SieveSet,
    Lattice,
};

std::string sort_name(Sort s);

struct Value {
    // Alternative order mirrors Sort.
    std::variant<Sieve, Supernatural, SupernaturalClass, Fluctuation, Constructible,
                 std::vector<std::uint64_t>, Rational, std::uint64_t, bool,
                 DenominatorSpec, std::vector<Sieve>, ConwayLattice>
        data;

    Sort sort() const { return static_cast<Sort>(data.index()); }
    // Canonical literal; parses back to an expression evaluating to the
    // same value (SieveSet and Lattice render for display only).
    std::string to_string() const;
    // {"sort": ..., "value": ..., "canonical": ...} as a JSON document.
    std::string to_json_record() const;
};

using Environment = std::map<std::string, Value>;

// Bottom-up sort inference; throws SortError with the offending offset.
Sort sort_of(const Expr& e, const Environment& env);

// Evaluates a well-sorted expression. Runs sort_of first, so sort errors
// surface before any computation.
Value eval(const Expr& e, const Environment& env);

inline Value eval(const Expr& e) {
    Environment env;
    return eval(e, env);
}

} // namespace arithsite
