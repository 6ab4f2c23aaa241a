#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arithsite/errors.hpp"
#include "arithsite/rational.hpp"
#include "arithsite/sheaf.hpp"
#include "arithsite/sieve.hpp"
#include "arithsite/supernatural.hpp"
#include "arithsite/topology.hpp"

namespace arithsite {

// Syntax error with the byte offset it was detected at and a description of
// what was expected.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Sort (type) error produced by the bottom-up sort inference.
struct SortError : Error {
    std::size_t offset;
    SortError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Abstract syntax of the expression language. Literals are constructed (and
// canonicalized) at parse time; everything else is resolved by the
// evaluator after sort inference.
struct Expr {
    enum class Kind {
        SieveLit,
        SupernaturalLit,
        PrimeSetLit,
        NatLit,
        RatLit,
        BoolLit,
        RingLit,
        ConstructibleLit, // any / none / Xs<...> / Xa{...}
        ThetaLit,         // th(domain-expr, support-expr)
        LatticePair,      // (scale, shift)
        Ident,
        Neg,  // neg x       (sieve negation)
        Not,  // !x          (constructible complement)
        Meet, // /\ or &
        Join, // \/ or |
        Implies,
        Act, // s (.) n
        In,  // x in y
        Call, // name(args...) and the stalk/sections keyword forms
    };

    Kind kind;
    std::size_t pos = 0;
    // For Meet/Join: whether the formula spelling (& or |) was used rather
    // than the lattice spelling (/\ or \/). Sorts are checked against the
    // spelling, so sieves and formulas cannot be silently confused.
    bool formula_op = false;

    // Literal payloads (set for the matching kind only).
    Sieve sieve;
    Supernatural sn;
    std::vector<std::uint64_t> primes;
    std::uint64_t nat = 0;
    Rational rat;
    bool boolean = false;
    DenominatorSpec ring;
    Constructible formula = Constructible::falsity();

    std::string name; // Ident / Call
    std::vector<Expr> args;
};

// Either a bare expression or a `let name = expr` binding.
struct Statement {
    std::string binding; // empty for a bare expression
    Expr expr;
};

Expr parse(const std::string& text);
Statement parse_statement(const std::string& text);

} // namespace arithsite
