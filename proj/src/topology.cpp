#include "arithsite/topology.hpp"

#include <algorithm>
#include <set>

#include "arithsite/numeric.hpp"

namespace arithsite {

bool in_Xl(const Supernatural& s, const Sieve& S) {
    for (std::uint64_t g : S.generators())
        if (divides(Supernatural::from_nat(g), s)) return true;
    return false;
}

bool in_Xs(const SupernaturalClass& c, const Sieve& S) {
    for (std::uint64_t g : S.generators()) {
        bool ok = true;
        for (std::uint64_t p : prime_support(g)) {
            if (!c.inf_support.contains(p)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool in_Xa(const SupernaturalClass& c, const std::vector<std::uint64_t>& P) {
    for (std::uint64_t p : P)
        if (c.inf_support.contains(p)) return false;
    return true;
}

Constructible Constructible::truth() { return Constructible(Kind::True); }
Constructible Constructible::falsity() { return Constructible(Kind::False); }

Constructible Constructible::atom(Sieve s) {
    if (s.is_zero()) return falsity();  // X_s(0) is empty
    if (s.is_one()) return truth();     // X_s(1) is the whole space
    Constructible c(Kind::Atom);
    c.atom_ = std::move(s);
    return c;
}

Constructible Constructible::negation(Constructible c) {
    if (c.kind_ == Kind::True) return falsity();
    if (c.kind_ == Kind::False) return truth();
    if (c.kind_ == Kind::Not) return c.kids_[0];
    Constructible out(Kind::Not);
    out.kids_.push_back(std::move(c));
    return out;
}

namespace {

// Is b already a top-level operand of the (binary, left-leaning) a-chain of
// the given kind? Keeps repeated normalization idempotent.
bool chain_contains(const Constructible& a, Constructible::Kind kind,
                    const Constructible& b) {
    if (a == b) return true;
    if (a.kind() != kind) return false;
    for (const auto& k : a.children())
        if (chain_contains(k, kind, b)) return true;
    return false;
}

} // namespace

Constructible Constructible::conjunction(Constructible a, Constructible b) {
    if (a.kind_ == Kind::False || b.kind_ == Kind::False) return falsity();
    if (a.kind_ == Kind::True) return b;
    if (b.kind_ == Kind::True) return a;
    if (chain_contains(a, Kind::And, b)) return a;
    Constructible out(Kind::And);
    out.kids_.push_back(std::move(a));
    out.kids_.push_back(std::move(b));
    return out;
}

Constructible Constructible::disjunction(Constructible a, Constructible b) {
    if (a.kind_ == Kind::True || b.kind_ == Kind::True) return truth();
    if (a.kind_ == Kind::False) return b;
    if (b.kind_ == Kind::False) return a;
    if (chain_contains(a, Kind::Or, b)) return a;
    Constructible out(Kind::Or);
    out.kids_.push_back(std::move(a));
    out.kids_.push_back(std::move(b));
    return out;
}

Constructible Constructible::conjunction(std::vector<Constructible> cs) {
    Constructible out = truth();
    for (auto& c : cs) out = conjunction(std::move(out), std::move(c));
    return out;
}

Constructible Constructible::disjunction(std::vector<Constructible> cs) {
    Constructible out = falsity();
    for (auto& c : cs) out = disjunction(std::move(out), std::move(c));
    return out;
}

namespace {

void collect_primes(const Constructible& c, std::set<std::uint64_t>& out) {
    if (c.kind() == Constructible::Kind::Atom) {
        for (std::uint64_t g : c.atom_sieve().generators())
            for (std::uint64_t p : prime_support(g)) out.insert(p);
        return;
    }
    for (const auto& k : c.children()) collect_primes(k, out);
}

} // namespace

std::vector<std::uint64_t> Constructible::relevant_primes() const {
    std::set<std::uint64_t> s;
    collect_primes(*this, s);
    return std::vector<std::uint64_t>(s.begin(), s.end());
}

std::string Constructible::to_string() const {
    switch (kind_) {
        case Kind::True: return "any";
        case Kind::False: return "none";
        case Kind::Atom: {
            std::string s = atom_.to_string();
            return "Xs" + s;
        }
        case Kind::Not: {
            const Constructible& k = kids_[0];
            bool paren = k.kind_ == Kind::And || k.kind_ == Kind::Or;
            return "!" + (paren ? "(" + k.to_string() + ")" : k.to_string());
        }
        case Kind::And: {
            std::string out;
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) out += " & ";
                bool paren = kids_[i].kind_ == Kind::Or;
                out += paren ? "(" + kids_[i].to_string() + ")" : kids_[i].to_string();
            }
            return out;
        }
        case Kind::Or: {
            std::string out;
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) out += " | ";
                out += kids_[i].to_string();
            }
            return out;
        }
    }
    return "";
}

bool c_member(const SupernaturalClass& c, const Constructible& C) {
    return C.eval([&](const Sieve& s) { return in_Xs(c, s); });
}

namespace {

// Flattened view of a formula over a fixed relevant-prime list: each atom is
// replaced by the bitmasks of its generators' supports. An atom is true at a
// subset I (as a mask) iff some generator mask is contained in I.
struct MaskedAtoms {
    std::vector<std::vector<std::uint64_t>> by_atom;
    std::vector<const Constructible*> atoms;

    void build(const Constructible& c, const std::vector<std::uint64_t>& primes) {
        if (c.kind() == Constructible::Kind::Atom) {
            std::vector<std::uint64_t> masks;
            for (std::uint64_t g : c.atom_sieve().generators()) {
                std::uint64_t m = 0;
                for (std::uint64_t p : prime_support(g)) {
                    auto it = std::lower_bound(primes.begin(), primes.end(), p);
                    m |= 1ull << (it - primes.begin());
                }
                masks.push_back(m);
            }
            atoms.push_back(&c);
            by_atom.push_back(std::move(masks));
            return;
        }
        for (const auto& k : c.children()) build(k, primes);
    }

    bool atom_true(const Constructible* node, std::uint64_t subset) const {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i] == node) {
                for (std::uint64_t m : by_atom[i])
                    if ((m & ~subset) == 0) return true;
                return false;
            }
        }
        return false;
    }
};

bool eval_at_subset(const Constructible& c, const MaskedAtoms& ma, std::uint64_t subset) {
    switch (c.kind()) {
        case Constructible::Kind::True: return true;
        case Constructible::Kind::False: return false;
        case Constructible::Kind::Atom: return ma.atom_true(&c, subset);
        case Constructible::Kind::Not: return !eval_at_subset(c.children()[0], ma, subset);
        case Constructible::Kind::And:
            for (const auto& k : c.children())
                if (!eval_at_subset(k, ma, subset)) return false;
            return true;
        case Constructible::Kind::Or:
            for (const auto& k : c.children())
                if (eval_at_subset(k, ma, subset)) return true;
            return false;
    }
    return false;
}

} // namespace

bool c_is_empty(const Constructible& C, unsigned prime_budget) {
    std::vector<std::uint64_t> primes = C.relevant_primes();
    if (primes.size() > prime_budget)
        throw ResourceLimitError("constructible decision over " +
                                 std::to_string(primes.size()) +
                                 " primes exceeds budget " + std::to_string(prime_budget));
    MaskedAtoms ma;
    ma.build(C, primes);
    const std::uint64_t limit = 1ull << primes.size();
    for (std::uint64_t subset = 0; subset < limit; ++subset)
        if (eval_at_subset(C, ma, subset)) return false;
    return true;
}

bool c_equal(const Constructible& C, const Constructible& D, unsigned prime_budget) {
    Constructible sym = Constructible::disjunction(
        Constructible::conjunction(C, Constructible::negation(D)),
        Constructible::conjunction(D, Constructible::negation(C)));
    return c_is_empty(sym, prime_budget);
}

std::uint64_t preimage_i(const std::vector<std::uint64_t>& P) {
    if (P.empty()) throw InvalidInputError("preimage of X_a over the empty prime set");
    std::vector<std::uint64_t> ps(P);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::uint64_t n = 1;
    for (std::uint64_t p : ps) {
        if (!is_prime(p)) throw InvalidInputError(std::to_string(p) + " is not prime");
        n = checked_mul(n, p);
    }
    return n;
}

std::uint64_t preimage_j(const Sieve& S) {
    return gcd_of(S);
}

} // namespace arithsite
