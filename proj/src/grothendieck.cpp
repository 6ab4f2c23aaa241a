#include "arithsite/grothendieck.hpp"

#include <algorithm>

#include "arithsite/numeric.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sampler.hpp"

namespace arithsite {

FamilySpec FamilySpec::gp(std::vector<std::uint64_t> primes) {
    for (std::uint64_t p : primes)
        if (!is_prime(p)) throw InvalidInputError(std::to_string(p) + " is not prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    FamilySpec f;
    f.kind = Kind::GP;
    f.primes = std::move(primes);
    return f;
}

FamilySpec FamilySpec::table(std::vector<Sieve> members, bool claims_upward_closed) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    FamilySpec f;
    f.kind = Kind::Table;
    f.members = std::move(members);
    f.claims_upward_closed = claims_upward_closed;
    return f;
}

bool FamilySpec::member(const Sieve& s) const {
    if (kind == Kind::GP) return in_GP(s, primes);
    return std::binary_search(members.begin(), members.end(), s);
}

std::string FamilySpec::to_string() const {
    if (kind == Kind::GP) {
        std::string out = "GP{";
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(primes[i]);
        }
        return out + "}";
    }
    std::string out = "table{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += members[i].to_string();
    }
    return out + "}";
}

bool in_GP(const Sieve& s, const std::vector<std::uint64_t>& P) {
    for (std::uint64_t g : s.generators()) {
        bool supported = true;
        for (std::uint64_t p : prime_support(g)) {
            if (!std::count(P.begin(), P.end(), p)) {
                supported = false;
                break;
            }
        }
        if (supported) return true;
    }
    return false;
}

namespace {

// Sieves to feed the stability and transitivity samplers with. For GP this
// biases towards actual members; for tables the members themselves are the
// only interesting sources.
std::vector<Sieve> family_samples(const FamilySpec& f, Rng& rng,
                                  const AxiomCheckBudget& b) {
    std::vector<Sieve> out;
    if (f.kind == FamilySpec::Kind::Table) {
        out = f.members;
        return out;
    }
    for (std::uint64_t i = 0; i < b.cases; ++i) {
        Sieve s = random_sieve(rng, b.max_generators, b.max_value);
        if (!f.primes.empty() && rng.chance(2, 3)) {
            // Join in a generator supported in P so the sample lands in GP.
            std::uint64_t g = 1;
            for (std::uint64_t p : f.primes)
                if (rng.chance(1, 2)) g = checked_mul(g, checked_pow(p, rng.range(1, 3)));
            if (g > 1) s = join(s, Sieve::principal(g));
        }
        if (f.member(s)) out.push_back(s);
    }
    if (f.member(Sieve::one())) out.push_back(Sieve::one());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

AxiomCheckReport axiom_check(const FamilySpec& family, const AxiomCheckBudget& budget) {
    Rng rng(derive_seed(budget.seed, "axiom-check"));
    if (family.kind == FamilySpec::Kind::Table && family.claims_upward_closed) {
        // Every superset of a member is a join with something; sample joins
        // and demand membership.
        for (const Sieve& m : family.members) {
            for (std::uint64_t i = 0; i < budget.cases; ++i) {
                Sieve up = join(m, random_sieve(rng, budget.max_generators, budget.max_value));
                if (!family.member(up))
                    throw InvalidInputError(
                        "table claims upward closure but misses " + up.to_string());
            }
        }
    }

    AxiomCheckReport report;
    report.axiom1_holds = family.member(Sieve::one());

    std::vector<Sieve> members = family_samples(family, rng, budget);

    // Stability: members stay members under the integer action.
    for (const Sieve& s : members) {
        for (std::uint64_t n = 1; n <= budget.max_value; ++n) {
            ++report.stability_cases;
            Sieve acted = act(s, n);
            if (!family.member(acted)) {
                ++report.stability_violations;
                if (report.stability.size() < 5)
                    report.stability.push_back({s, n, acted});
            }
        }
    }

    // Transitivity: if the whole (exact, finite) orbit of r over a member
    // lies in the family, r itself must belong. Candidate r's: all principal
    // sieves up to the value bound, plus random sieves.
    std::vector<Sieve> candidates;
    for (std::uint64_t k = 1; k <= budget.max_value; ++k)
        candidates.push_back(Sieve::principal(k));
    for (std::uint64_t i = 0; i < budget.cases; ++i)
        candidates.push_back(random_sieve(rng, budget.max_generators, budget.max_value));

    for (const Sieve& r : candidates) {
        if (family.member(r)) continue;
        for (const Sieve& s : members) {
            ++report.transitivity_cases;
            // For the zero sieve the orbit premise is vacuously satisfied.
            std::vector<Sieve> orb = s.is_zero() ? std::vector<Sieve>{} : orbit(r, s);
            bool inside = std::all_of(orb.begin(), orb.end(),
                                      [&](const Sieve& o) { return family.member(o); });
            if (inside) {
                ++report.transitivity_violations;
                if (report.transitivity.size() < 5)
                    report.transitivity.push_back({r, s, orb});
            }
        }
    }
    return report;
}

std::string AxiomCheckReport::to_string() const {
    std::string out;
    out += std::string("axiom 1 (full sieve belongs): ") + (axiom1_holds ? "ok" : "VIOLATED") + "\n";
    out += "stability: " + std::to_string(stability_cases) + " cases, " +
           std::to_string(stability_violations) + " counterexamples\n";
    for (const auto& cx : stability)
        out += "  act(" + cx.member.to_string() + ", " + std::to_string(cx.n) + ") = " +
               cx.acted.to_string() + " is not in the family\n";
    out += "transitivity: " + std::to_string(transitivity_cases) + " cases, " +
           std::to_string(transitivity_violations) + " counterexamples\n";
    for (const auto& cx : transitivity) {
        out += "  orbit(" + cx.candidate.to_string() + ", " + cx.member.to_string() +
               ") = {";
        for (std::size_t i = 0; i < cx.orbit.size(); ++i) {
            if (i) out += ", ";
            out += cx.orbit[i].to_string();
        }
        out += "} lies in the family but " + cx.candidate.to_string() + " does not\n";
    }
    return out;
}

} // namespace arithsite
