#include "arithsite/skew.hpp"

namespace arithsite {

std::string Fluctuation::to_string() const {
    return "th(" + domain.to_string() + ", " + support.to_string() + ")";
}

Fluctuation theta_bottom() { return Fluctuation(); }

Fluctuation restrict_to(const Fluctuation& x, const Sieve& t) {
    return Fluctuation(meet(x.domain, t),
                       Constructible::conjunction(x.support, Constructible::atom(t)));
}

Fluctuation meet(const Fluctuation& a, const Fluctuation& b) {
    return restrict_to(a, b.domain);
}

Fluctuation join(const Fluctuation& a, const Fluctuation& b) {
    return Fluctuation(
        join(a.domain, b.domain),
        Constructible::disjunction(
            b.support,
            Constructible::conjunction(
                a.support, Constructible::negation(Constructible::atom(b.domain)))));
}

Fluctuation implies(const Fluctuation& a, const Fluctuation& b) {
    Sieve dom = implies(a.domain, b.domain);
    return Fluctuation(
        dom,
        Constructible::disjunction(
            b.support,
            Constructible::conjunction(
                Constructible::atom(dom),
                Constructible::negation(Constructible::atom(b.domain)))));
}

bool leq(const Fluctuation& a, const Fluctuation& b, unsigned prime_budget) {
    return leq(a.domain, b.domain) &&
           c_equal(restrict_to(b, a.domain).support, a.support, prime_budget);
}

bool equiv(const Fluctuation& a, const Fluctuation& b) {
    return a.domain == b.domain;
}

bool commutes(const Fluctuation& a, const Fluctuation& b, unsigned prime_budget) {
    return c_equal(restrict_to(a, b.domain).support, restrict_to(b, a.domain).support,
                   prime_budget);
}

const Sieve& shadow(const Fluctuation& a) { return a.domain; }

Fluctuation embed(const Sieve& s) {
    return Fluctuation(s, Constructible::atom(s));
}

bool theta_equal(const Fluctuation& a, const Fluctuation& b, unsigned prime_budget) {
    return a.domain == b.domain && c_equal(a.support, b.support, prime_budget);
}

} // namespace arithsite
