#include "arithsite/bigcell.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arithsite/numeric.hpp"

namespace arithsite {

ConwayLattice::ConwayLattice(Rational scale_, Rational shift_)
    : scale(scale_), shift(shift_) {
    if (!scale.is_positive())
        throw InvalidInputError("lattice scale must be positive");
    // Reduce the shift mod 1 into [0, 1).
    std::int64_t whole = shift.num() / static_cast<std::int64_t>(shift.den());
    Rational frac = shift - Rational::from_int(whole);
    if (frac.is_negative()) frac = frac + Rational::from_int(1);
    shift = frac;
}

std::string ConwayLattice::to_string() const {
    auto part = [](const Rational& r) {
        return r.is_integer() ? std::to_string(r.num()) : r.to_string();
    };
    return "(" + part(scale) + ", " + part(shift) + ")";
}

std::uint64_t hyperdistance(const ConwayLattice& a, const ConwayLattice& b) {
    // D = [[M, x], [0, 1]] * [[N, y], [0, 1]]^{-1}
    //   = [[M/N, x - M*y/N], [0, 1]]
    Rational d00 = a.scale / b.scale;
    Rational d01 = a.shift - a.scale * b.shift / b.scale;
    // alpha must clear both nontrivial entries and keep the unit entry
    // integral, so it is the lcm of the reduced denominators.
    std::uint64_t alpha = checked_lcm(d00.den(), d01.den());
    Rational det = Rational(static_cast<std::int64_t>(checked_mul(alpha, alpha)), 1) * d00;
    if (!det.is_integer() || !det.is_positive())
        throw Error("hyperdistance did not evaluate to a positive integer");
    return static_cast<std::uint64_t>(det.num());
}

std::uint64_t hyperdistance_integers(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw InvalidInputError("lattice index must be >= 1");
    std::uint64_t g = std::gcd(m, n);
    return checked_mul(m / g, n / g);
}

std::vector<std::uint64_t> bigcell_neighbors(std::uint64_t m, std::uint64_t bound) {
    if (m == 0) throw InvalidInputError("lattice index must be >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= bound; ++n)
        if (is_prime(hyperdistance_integers(m, n))) out.push_back(n);
    return out;
}

DivisorTruncation divisor_truncation(const Supernatural& s, std::uint64_t bound) {
    if (bound == 0) throw InvalidInputError("bound must be >= 1");
    DivisorTruncation t;
    t.bound = bound;
    for (std::uint64_t n = 1; n <= bound; ++n)
        if (divides(Supernatural::from_nat(n), s)) t.members.push_back(n);
    return t;
}

bool is_point_truncation(const DivisorTruncation& t) {
    std::set<std::uint64_t> members(t.members.begin(), t.members.end());
    if (!members.count(1)) return false;
    for (std::uint64_t m : members) {
        if (m > t.bound) return false;
        for (std::uint64_t d : divisors(m))
            if (!members.count(d)) return false;
    }
    for (std::uint64_t a : members)
        for (std::uint64_t b : members) {
            std::uint64_t l = checked_lcm(a, b);
            if (l <= t.bound && !members.count(l)) return false;
        }
    return true;
}

} // namespace arithsite
