#include "arithsite/sieve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arithsite/numeric.hpp"

namespace arithsite {

Sieve Sieve::one() { return principal(1); }

Sieve Sieve::principal(std::uint64_t n) {
    return from_generators({{n}});
}

Sieve Sieve::from_generators(std::initializer_list<std::uint64_t> gens) {
    return from_generators(std::span<const std::uint64_t>(gens.begin(), gens.size()));
}

Sieve Sieve::from_generators(std::span<const std::uint64_t> gens) {
    std::vector<std::uint64_t> v(gens.begin(), gens.end());
    for (std::uint64_t g : v)
        if (g == 0) throw InvalidInputError("sieve generator must be >= 1");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    // Keep the divisibility-minimal entries. Sorted ascending, so only
    // earlier entries can divide later ones.
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t g : v) {
        bool dominated = false;
        for (std::uint64_t m : minimal) {
            if (g % m == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(g);
    }
    Sieve s;
    s.gens_ = std::move(minimal);
    return s;
}

bool Sieve::contains(std::uint64_t n) const {
    if (n == 0) throw InvalidInputError("membership of 0 is undefined");
    for (std::uint64_t g : gens_)
        if (n % g == 0) return true;
    return false;
}

std::string Sieve::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(gens_[i]);
    }
    out += ">";
    return out;
}

bool leq(const Sieve& s, const Sieve& t) {
    for (std::uint64_t g : s.generators())
        if (!t.contains(g)) return false;
    return true;
}

Sieve join(const Sieve& s, const Sieve& t) {
    std::vector<std::uint64_t> gens = s.generators();
    gens.insert(gens.end(), t.generators().begin(), t.generators().end());
    return Sieve::from_generators(gens);
}

Sieve meet(const Sieve& s, const Sieve& t) {
    std::vector<std::uint64_t> gens;
    for (std::uint64_t a : s.generators())
        for (std::uint64_t b : t.generators())
#ifdef ARITH_FAULT_MEET_USES_GCD
            // Fault-injection build for suite self-checks: wrong lattice op.
            gens.push_back(gcd_u64(a, b));
#else
            gens.push_back(checked_lcm(a, b));
#endif
    return Sieve::from_generators(gens);
}

Sieve implies(const Sieve& s, const Sieve& t) {
    // The condition "lcm(e, n_i) in t for all i" depends on e only through
    // its exponents at the primes of t's generators, capped at the maximal
    // exponent appearing in t: raising e's exponent at such a prime past the
    // cap cannot change divisibility by any generator of t, and exponents at
    // other primes never help. The satisfying set is upward closed, so the
    // divisibility-minimal satisfiers on that finite exponent grid generate
    // the full sieve.
    if (s.is_zero()) return Sieve::one();
    std::map<std::uint64_t, std::uint32_t> caps;
    for (std::uint64_t g : t.generators())
        for (const auto& [p, e] : factorize(g))
            caps[p] = std::max(caps[p], e);
    std::vector<std::uint64_t> primes;
    std::vector<std::uint32_t> maxExp;
    for (const auto& [p, e] : caps) {
        primes.push_back(p);
        maxExp.push_back(e);
    }
    std::vector<std::uint32_t> exp(primes.size(), 0);
    std::vector<std::uint64_t> satisfiers;
    for (;;) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            e = checked_mul(e, checked_pow(primes[i], exp[i]));
        bool ok = true;
        for (std::uint64_t n : s.generators()) {
            if (!t.contains(checked_lcm(e, n))) {
                ok = false;
                break;
            }
        }
        if (ok) satisfiers.push_back(e);
        std::size_t i = 0;
        while (i < exp.size() && exp[i] == maxExp[i]) exp[i++] = 0;
        if (i == exp.size()) break;
        ++exp[i];
    }
    return Sieve::from_generators(satisfiers);
}

Sieve neg(const Sieve& s) {
    return s.is_zero() ? Sieve::one() : Sieve::zero();
}

Sieve act(const Sieve& s, std::uint64_t n) {
    if (n == 0) throw InvalidInputError("action by 0 is undefined");
    std::vector<std::uint64_t> gens;
    for (std::uint64_t g : s.generators()) gens.push_back(g / std::gcd(g, n));
    return Sieve::from_generators(gens);
}

std::vector<Sieve> orbit(const Sieve& r, const Sieve& s) {
    if (s.is_zero()) throw EmptySieveError("orbit over the zero sieve");
    // act(r, m) depends on m only through the vector of exponents of m at
    // the primes of r's generators, capped at the largest exponent cap_p
    // occurring in r. A capped vector w is realizable by some multiple of an
    // s-generator g iff at every such prime: v_p(g) <= cap_p implies
    // w_p >= v_p(g), and v_p(g) > cap_p forces w_p = cap_p.
    std::map<std::uint64_t, std::uint32_t> caps;
    for (std::uint64_t g : r.generators())
        for (const auto& [p, e] : factorize(g))
            caps[p] = std::max(caps[p], e);
    std::vector<std::uint64_t> primes;
    std::vector<std::uint32_t> cap;
    for (const auto& [p, e] : caps) {
        primes.push_back(p);
        cap.push_back(e);
    }
    std::uint64_t boxSize = 1;
    for (std::uint32_t c : cap) {
        boxSize = checked_mul(boxSize, c + 1);
        if (boxSize > (1u << 22))
            throw ResourceLimitError("orbit enumeration too large");
    }
    std::vector<std::vector<std::uint32_t>> genVals; // v_p(g) per s-generator
    for (std::uint64_t g : s.generators()) {
        std::vector<std::uint32_t> vals;
        for (std::uint64_t p : primes) vals.push_back(valuation(g, p));
        genVals.push_back(std::move(vals));
    }
    std::set<Sieve> out;
    std::vector<std::uint32_t> w(primes.size(), 0);
    for (;;) {
        bool realizable = false;
        for (const auto& vals : genVals) {
            bool ok = true;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (vals[i] <= cap[i] ? w[i] < vals[i] : w[i] != cap[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                realizable = true;
                break;
            }
        }
        if (realizable) {
            std::vector<std::uint64_t> gens;
            for (std::uint64_t g : r.generators()) {
                std::uint64_t q = g;
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    std::uint32_t v = std::min(valuation(g, primes[i]), w[i]);
                    for (std::uint32_t k = 0; k < v; ++k) q /= primes[i];
                }
                gens.push_back(q);
            }
            out.insert(Sieve::from_generators(gens));
        }
        std::size_t i = 0;
        while (i < w.size() && w[i] == cap[i]) w[i++] = 0;
        if (i == w.size()) break;
        ++w[i];
    }
    return std::vector<Sieve>(out.begin(), out.end());
}

std::uint64_t gcd_of(const Sieve& s) {
    if (s.is_zero()) throw EmptySieveError("gcd of the zero sieve");
    std::uint64_t g = 0;
    for (std::uint64_t n : s.generators()) g = std::gcd(g, n);
    return g;
}

Sieve relative_double_neg(const Sieve& t, const Sieve& base) {
    if (base.is_zero())
        throw InvalidInputError("relative double negation needs a nonzero base");
    if (!t.is_zero() && !leq(base, t))
        throw FrameDomainError("element outside the relative frame");
    return t.is_zero() ? Sieve::zero() : Sieve::one();
}

} // namespace arithsite
