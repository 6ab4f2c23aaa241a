#include "arithsite/supernatural.hpp"

#include <algorithm>

#include "arithsite/numeric.hpp"

namespace arithsite {

std::uint64_t Exponent::finite_value() const {
    if (inf_) throw InvalidInputError("infinite exponent has no finite value");
    return v_;
}

bool Exponent::operator<=(const Exponent& o) const {
    if (o.inf_) return true;
    if (inf_) return false;
    return v_ <= o.v_;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (inf_ || o.inf_) return infinite();
    return finite(checked_add(v_, o.v_));
}

std::string Exponent::to_string() const {
    return inf_ ? "inf" : std::to_string(v_);
}

static std::vector<std::uint64_t> checked_prime_set(std::vector<std::uint64_t> ps) {
    for (std::uint64_t p : ps)
        if (!is_prime(p))
            throw InvalidInputError(std::to_string(p) + " is not prime");
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

PrimeSetDesc PrimeSetDesc::finite(std::vector<std::uint64_t> ps) {
    return PrimeSetDesc{Mode::Finite, checked_prime_set(std::move(ps))};
}

PrimeSetDesc PrimeSetDesc::cofinite_complement(std::vector<std::uint64_t> ps) {
    return PrimeSetDesc{Mode::Cofinite, checked_prime_set(std::move(ps))};
}

bool PrimeSetDesc::contains(std::uint64_t p) const {
    bool listed = std::binary_search(primes.begin(), primes.end(), p);
    return mode == Mode::Finite ? listed : !listed;
}

PrimeSetDesc PrimeSetDesc::complement() const {
    return PrimeSetDesc{mode == Mode::Finite ? Mode::Cofinite : Mode::Finite, primes};
}

Supernatural Supernatural::make(Default d, std::map<std::uint64_t, Exponent> exceptions) {
    Supernatural s;
    s.default_ = d;
    for (auto& [p, e] : exceptions) {
        if (!is_prime(p))
            throw InvalidInputError(std::to_string(p) + " is not prime");
        if (d == Default::Inf && e.is_infinite())
            continue; // equal to the default
        if (d == Default::Zero && e == Exponent::finite(0))
            continue;
        s.exc_.emplace(p, e);
    }
    return s;
}

Supernatural Supernatural::from_nat(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("supernatural of 0 is undefined");
    std::map<std::uint64_t, Exponent> exc;
    for (const auto& [p, e] : factorize(n)) exc.emplace(p, Exponent::finite(e));
    return make(Default::Zero, std::move(exc));
}

Supernatural Supernatural::all_inf() {
    return make(Default::Inf, {});
}

Exponent Supernatural::exponent(std::uint64_t p) const {
    auto it = exc_.find(p);
    if (it != exc_.end()) return it->second;
    return default_ == Default::Zero ? Exponent::finite(0) : Exponent::infinite();
}

std::string Supernatural::to_string() const {
    if (default_ == Default::Zero) {
        if (exc_.empty()) return "sn(1)";
        std::string out = "sn(";
        bool first = true;
        for (const auto& [p, e] : exc_) {
            if (!first) out += " * ";
            first = false;
            out += std::to_string(p) + "^" + e.to_string();
        }
        return out + ")";
    }
    std::string out = "sn(all^inf";
    for (const auto& [p, e] : exc_)
        out += " / " + std::to_string(p) + "^" + e.to_string();
    return out + ")";
}

std::string SupernaturalClass::to_string() const {
    // The canonical representative: the product of p^inf over the support.
    if (inf_support.is_finite()) {
        std::map<std::uint64_t, Exponent> exc;
        for (std::uint64_t p : inf_support.primes)
            exc.emplace(p, Exponent::infinite());
        return "pi(" + Supernatural::make(Supernatural::Default::Zero, exc).to_string() + ")";
    }
    std::map<std::uint64_t, Exponent> exc;
    for (std::uint64_t p : inf_support.primes)
        exc.emplace(p, Exponent::finite(0));
    return "pi(" + Supernatural::make(Supernatural::Default::Inf, exc).to_string() + ")";
}

Supernatural mul(const Supernatural& s, const Supernatural& t) {
    auto d = (s.default_exponent() == Supernatural::Default::Inf ||
              t.default_exponent() == Supernatural::Default::Inf)
                 ? Supernatural::Default::Inf
                 : Supernatural::Default::Zero;
    std::map<std::uint64_t, Exponent> exc;
    for (const auto& [p, e] : s.exceptions()) exc.emplace(p, s.exponent(p) + t.exponent(p));
    for (const auto& [p, e] : t.exceptions()) exc.emplace(p, s.exponent(p) + t.exponent(p));
    return Supernatural::make(d, std::move(exc));
}

bool divides(const Supernatural& s, const Supernatural& t) {
    // Outside the exception primes both sides sit at their defaults.
    if (s.default_exponent() == Supernatural::Default::Inf &&
        t.default_exponent() == Supernatural::Default::Zero)
        return false;
    for (const auto& [p, e] : s.exceptions())
        if (!(e <= t.exponent(p))) return false;
    for (const auto& [p, e] : t.exceptions())
        if (!(s.exponent(p) <= e)) return false;
    return true;
}

PrimeSetDesc inf_support(const Supernatural& s) {
    std::vector<std::uint64_t> ps;
    if (s.default_exponent() == Supernatural::Default::Zero) {
        for (const auto& [p, e] : s.exceptions())
            if (e.is_infinite()) ps.push_back(p);
        return PrimeSetDesc::finite(std::move(ps));
    }
    // Inf default: exceptions are exactly the primes with finite exponent.
    for (const auto& [p, e] : s.exceptions()) ps.push_back(p);
    return PrimeSetDesc::cofinite_complement(std::move(ps));
}

SupernaturalClass class_of(const Supernatural& s) {
    return SupernaturalClass{inf_support(s)};
}

bool equivalent(const Supernatural& s, const Supernatural& t) {
    // On finitely described supernaturals the "cofinitely equal finite
    // part" clause of the equivalence holds automatically: both sides
    // differ from their defaults at finitely many primes, and equal
    // infinity-supports force equal defaults.
    return inf_support(s) == inf_support(t);
}

SupernaturalClass i_point(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInputError(std::to_string(p) + " is not prime");
    return SupernaturalClass{PrimeSetDesc::finite({p})};
}

SupernaturalClass j_point(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInputError(std::to_string(p) + " is not prime");
    return SupernaturalClass{PrimeSetDesc::cofinite_complement({p})};
}

} // namespace arithsite
