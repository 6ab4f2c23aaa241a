#include "arithsite/sheaf.hpp"

#include "arithsite/numeric.hpp"

namespace arithsite {

bool DenominatorSpec::contains(const Rational& q) const {
    for (std::uint64_t p : prime_support(q.den()))
        if (!invertible.contains(p)) return false;
    return true;
}

std::string DenominatorSpec::to_string() const {
    if (invertible.is_finite()) {
        if (invertible.primes.empty()) return "Z";
        std::string out = "Z[";
        for (std::size_t i = 0; i < invertible.primes.size(); ++i) {
            if (i) out += ",";
            out += "1/" + std::to_string(invertible.primes[i]);
        }
        return out + "]";
    }
    if (invertible.primes.empty()) return "Q";
    std::string out = "Z_(";
    for (std::size_t i = 0; i < invertible.primes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(invertible.primes[i]);
    }
    return out + ")";
}

DenominatorSpec sections_i(const std::vector<std::uint64_t>& P) {
    return DenominatorSpec{PrimeSetDesc::finite(P)};
}

DenominatorSpec stalk_i(const SupernaturalClass& c) {
    return DenominatorSpec{c.inf_support.complement()};
}

DenominatorSpec sections_j(const Sieve& S) {
    return DenominatorSpec{PrimeSetDesc::finite(prime_support(gcd_of(S)))};
}

DenominatorSpec stalk_j(const SupernaturalClass& c) {
    return DenominatorSpec{c.inf_support};
}

bool contains_rational(const DenominatorSpec& spec, const Rational& q) {
    return spec.contains(q);
}

} // namespace arithsite
