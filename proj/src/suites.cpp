#include "arithsite/suites.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "arithsite/bigcell.hpp"
#include "arithsite/grothendieck.hpp"
#include "arithsite/numeric.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sampler.hpp"
#include "arithsite/sheaf.hpp"
#include "arithsite/sieve.hpp"
#include "arithsite/skew.hpp"
#include "arithsite/supernatural.hpp"

namespace arithsite {

namespace {

struct Defaults {
    std::uint64_t cases;
    unsigned max_generators;
    std::uint64_t max_value;
};

Defaults defaults_for(SuiteId id) {
    switch (id) {
        case SuiteId::Heyting: return {1000, 4, 60};
        case SuiteId::Oracle: return {500, 4, 60};
        case SuiteId::Action: return {300, 4, 60};
        case SuiteId::Grothendieck: return {200, 3, 30};
        case SuiteId::Topologies: return {300, 3, 30};
        case SuiteId::Sheaves: return {200, 3, 60};
        case SuiteId::SkewFrame: return {500, 3, 30};
        case SuiteId::SkewHeyting: return {500, 3, 30};
        case SuiteId::Bigcell: return {200, 3, 30};
        case SuiteId::All: return {0, 0, 0};
    }
    return {0, 0, 0};
}

struct Params {
    std::uint64_t cases;
    std::uint64_t seed;
    unsigned max_gens;
    std::uint64_t max_val;
    unsigned prime_budget;
};

Params resolve(SuiteId id, const SuiteBudget& b) {
    Defaults d = defaults_for(id);
    return Params{
        b.cases.value_or(d.cases),
        b.seed,
        b.max_generators ? b.max_generators : d.max_generators,
        b.max_value ? b.max_value : d.max_value,
        b.prime_budget,
    };
}

// Runs one law: `body` is called once per case with a fresh deterministic
// stream and returns a counterexample rendering, or nothing.
class Harness {
  public:
    Harness(SuiteReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

    void law(const std::string& name, std::uint64_t cases,
             const std::function<std::optional<std::string>(Rng&)>& body) {
        LawResult r;
        r.law = name;
        r.cases = cases;
        Rng rng(derive_seed(seed_, name));
        for (std::uint64_t i = 0; i < cases; ++i) {
            std::optional<std::string> cx = body(rng);
            if (cx) {
                ++r.violations;
                if (r.counterexamples.size() < 3) r.counterexamples.push_back(*cx);
            }
        }
        report_.laws.push_back(std::move(r));
    }

  private:
    SuiteReport& report_;
    std::uint64_t seed_;
};

std::string pair_str(const Sieve& a, const Sieve& b) {
    return a.to_string() + ", " + b.to_string();
}

std::string triple_str(const Sieve& a, const Sieve& b, const Sieve& c) {
    return a.to_string() + ", " + b.to_string() + ", " + c.to_string();
}

// ---- multiple-set oracle -------------------------------------------------
//
// The oracle works purely with enumerated multiple sets: membership[n] is
// marked by stepping through the multiples of each generator. No divisions,
// no factorizations, no reuse of the lattice operations under test.

std::vector<bool> multiple_set(const Sieve& s, std::uint64_t bound) {
    std::vector<bool> in(bound + 1, false);
    for (std::uint64_t g : s.generators())
        for (std::uint64_t m = g; m <= bound; m += g) in[m] = true;
    return in;
}

// ---- suite bodies ----------------------------------------------------------

void heyting_suite(Harness& h, const Params& p) {
    auto sieve3 = [&p](Rng& rng) {
        return std::array<Sieve, 3>{random_sieve(rng, p.max_gens, p.max_val),
                                    random_sieve(rng, p.max_gens, p.max_val),
                                    random_sieve(rng, p.max_gens, p.max_val)};
    };

    h.law("meet-associative", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = sieve3(rng);
        if (meet(x, meet(y, z)) == meet(meet(x, y), z)) return std::nullopt;
        return triple_str(x, y, z);
    });
    h.law("join-associative", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = sieve3(rng);
        if (join(x, join(y, z)) == join(join(x, y), z)) return std::nullopt;
        return triple_str(x, y, z);
    });
    h.law("commutative", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        Sieve y = random_sieve(rng, p.max_gens, p.max_val);
        if (meet(x, y) == meet(y, x) && join(x, y) == join(y, x)) return std::nullopt;
        return pair_str(x, y);
    });
    h.law("idempotent", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        if (meet(x, x) == x && join(x, x) == x) return std::nullopt;
        return x.to_string();
    });
    h.law("units", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        if (meet(Sieve::one(), x) == x && join(Sieve::zero(), x) == x) return std::nullopt;
        return x.to_string();
    });
    h.law("absorption", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        Sieve y = random_sieve(rng, p.max_gens, p.max_val);
        if (meet(x, join(y, x)) == x && join(meet(x, y), x) == x) return std::nullopt;
        return pair_str(x, y);
    });
    h.law("distributive", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = sieve3(rng);
        bool a = meet(x, join(y, z)) == join(meet(x, y), meet(x, z));
        bool b = join(x, meet(y, z)) == meet(join(x, y), join(x, z));
        if (a && b) return std::nullopt;
        return triple_str(x, y, z);
    });
    h.law("order-characterization", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        Sieve y = random_sieve(rng, p.max_gens, p.max_val);
        bool v1 = leq(x, y);
        bool v2 = x == meet(x, y);
        bool v3 = y == join(x, y);
        if (v1 == v2 && v2 == v3) return std::nullopt;
        return pair_str(x, y);
    });
    h.law("implication-adjunction", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = sieve3(rng);
        if (leq(meet(x, y), z) == leq(x, implies(y, z))) return std::nullopt;
        return triple_str(x, y, z);
    });
    h.law("double-negation-bound", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        if (leq(x, neg(neg(x)))) return std::nullopt;
        return x.to_string();
    });
    h.law("negation-case-formula", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve x = random_sieve(rng, p.max_gens, p.max_val);
        Sieve expected = x.is_zero() ? Sieve::one() : Sieve::zero();
        if (neg(x) == expected && neg(x) == implies(x, Sieve::zero())) return std::nullopt;
        return x.to_string();
    });
    h.law("relative-double-negation", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve base = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        Sieve up = join(base, random_sieve(rng, p.max_gens, p.max_val));
        bool ok = relative_double_neg(Sieve::zero(), base) == Sieve::zero() &&
                  relative_double_neg(up, base) == Sieve::one() &&
                  relative_double_neg(Sieve::one(), base) == Sieve::one();
        if (ok) return std::nullopt;
        return base.to_string();
    });
}

void oracle_suite(Harness& h, const Params& p) {
    const std::uint64_t bound = 5000;
    const std::uint64_t act_bound = 30;

    auto sieve2 = [&p](Rng& rng) {
        return std::array<Sieve, 2>{random_sieve(rng, p.max_gens, p.max_val),
                                    random_sieve(rng, p.max_gens, p.max_val)};
    };

    h.law("meet-vs-multiple-sets", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [s, t] = sieve2(rng);
        auto ss = multiple_set(s, bound), tt = multiple_set(t, bound);
        Sieve m = meet(s, t);
        for (std::uint64_t n = 1; n <= bound; ++n)
            if (m.contains(n) != (ss[n] && tt[n]))
                return pair_str(s, t) + " at n=" + std::to_string(n);
        return std::nullopt;
    });
    h.law("join-vs-multiple-sets", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [s, t] = sieve2(rng);
        auto ss = multiple_set(s, bound), tt = multiple_set(t, bound);
        Sieve j = join(s, t);
        for (std::uint64_t n = 1; n <= bound; ++n)
            if (j.contains(n) != (ss[n] || tt[n]))
                return pair_str(s, t) + " at n=" + std::to_string(n);
        return std::nullopt;
    });
    h.law("implies-vs-multiple-sets", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [s, t] = sieve2(rng);
        // lcm(e, g) <= e*g <= bound * max_val, so one extended table of t's
        // multiples decides the defining condition directly.
        auto tt = multiple_set(t, bound * p.max_val);
        Sieve imp = implies(s, t);
        for (std::uint64_t e = 1; e <= bound; ++e) {
            bool expect = true;
            for (std::uint64_t g : s.generators())
                if (!tt[e / std::gcd(e, g) * g]) {
                    expect = false;
                    break;
                }
            if (imp.contains(e) != expect)
                return pair_str(s, t) + " at e=" + std::to_string(e);
        }
        return std::nullopt;
    });
    h.law("act-vs-multiple-sets", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        auto ss = multiple_set(s, bound * act_bound);
        for (std::uint64_t m = 1; m <= act_bound; ++m) {
            Sieve a = act(s, m);
            for (std::uint64_t n = 1; n <= bound; ++n)
                if (a.contains(n) != ss[m * n])
                    return s.to_string() + " at m=" + std::to_string(m) +
                           ", n=" + std::to_string(n);
        }
        return std::nullopt;
    });
}

void action_suite(Harness& h, const Params& p) {
    h.law("action-composition", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        std::uint64_t m = rng.range(1, 30), n = rng.range(1, 30);
        if (act(act(s, m), n) == act(s, m * n)) return std::nullopt;
        return s.to_string() + " with m=" + std::to_string(m) + ", n=" + std::to_string(n);
    });
    h.law("action-identity", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        if (act(s, 1) == s) return std::nullopt;
        return s.to_string();
    });
    h.law("action-monotone", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        Sieve t = join(s, random_sieve(rng, p.max_gens, p.max_val)); // s <= t
        std::uint64_t n = rng.range(1, 30);
        if (leq(act(s, n), act(t, n))) return std::nullopt;
        return pair_str(s, t) + " with n=" + std::to_string(n);
    });
    h.law("orbit-vs-sampling", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve r = random_sieve(rng, 2, 12);
        Sieve s = random_nonzero_sieve(rng, 2, 12);
        std::uint64_t l = 1;
        for (std::uint64_t g : r.generators()) l = checked_lcm(l, g);
        for (std::uint64_t g : s.generators()) l = checked_lcm(l, g);
        std::uint64_t bound = 10 * l;
        std::vector<Sieve> sampled;
        for (std::uint64_t n = 1; n <= bound; ++n)
            if (s.contains(n)) sampled.push_back(act(r, n));
        std::sort(sampled.begin(), sampled.end());
        sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
        if (orbit(r, s) == sampled) return std::nullopt;
        return pair_str(r, s);
    });
    h.law("orbit-of-top", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        if (orbit(Sieve::one(), s) == std::vector<Sieve>{Sieve::one()}) return std::nullopt;
        return s.to_string();
    });
}

void grothendieck_suite(Harness& h, const Params& p) {
    std::vector<std::uint64_t> pool = first_primes(6);

    auto random_prime_set = [&pool](Rng& rng) {
        std::vector<std::uint64_t> ps;
        for (std::uint64_t q : pool)
            if (rng.chance(1, 2)) ps.push_back(q);
        return ps;
    };

    h.law("gp-upward-closure", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        std::vector<std::uint64_t> P = random_prime_set(rng);
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        Sieve bigger = join(s, random_sieve(rng, p.max_gens, p.max_val));
        if (!in_GP(s, P) || in_GP(bigger, P)) return std::nullopt;
        return pair_str(s, bigger);
    });
    h.law("prop1-action-identity", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        std::uint64_t m = rng.range(1, 1000);
        std::uint64_t q = pool[rng.below(pool.size())];
        Sieve acted = act(Sieve::principal(m), q);
        Sieve expected = m % q == 0 ? Sieve::principal(m / q) : Sieve::principal(m);
        if (acted == expected) return std::nullopt;
        return "m=" + std::to_string(m) + ", p=" + std::to_string(q);
    });
    h.law("gp-empty-is-chaotic", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        if (in_GP(s, {}) == s.is_one()) return std::nullopt;
        return s.to_string();
    });
    h.law("gp-axiom-check", std::min<std::uint64_t>(p.cases, 5), [&](Rng& rng) -> std::optional<std::string> {
        FamilySpec family = FamilySpec::gp(random_prime_set(rng));
        AxiomCheckBudget b;
        b.cases = p.cases;
        b.seed = rng.next();
        b.max_generators = p.max_gens;
        b.max_value = p.max_val;
        AxiomCheckReport rep = axiom_check(family, b);
        if (rep.ok()) return std::nullopt;
        return family.to_string();
    });
    h.law("broken-table-is-refuted", std::min<std::uint64_t>(p.cases, 1), [&](Rng& rng) -> std::optional<std::string> {
        FamilySpec family =
            FamilySpec::table({Sieve::one(), Sieve::principal(2)});
        AxiomCheckBudget b;
        b.cases = p.cases;
        b.seed = rng.next();
        AxiomCheckReport rep = axiom_check(family, b);
        // This family is NOT a topology; a clean report would be the bug.
        if (!rep.ok()) return std::nullopt;
        return family.to_string() + " was not refuted";
    });
    h.law("chaotic-table-is-clean", std::min<std::uint64_t>(p.cases, 1), [&](Rng& rng) -> std::optional<std::string> {
        FamilySpec family = FamilySpec::table({Sieve::one()}, true);
        AxiomCheckBudget b;
        b.cases = p.cases;
        b.seed = rng.next();
        AxiomCheckReport rep = axiom_check(family, b);
        if (rep.ok()) return std::nullopt;
        return rep.to_string();
    });
}

void topologies_suite(Harness& h, const Params& p) {
    std::vector<std::uint64_t> small_primes;
    for (std::uint64_t q = 2; q < 100; ++q)
        if (is_prime(q)) small_primes.push_back(q);
    std::vector<std::uint64_t> pool = first_primes(6);

    h.law("sieve-preimage-is-gcd", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        std::uint64_t g = preimage_j(s);
        for (std::uint64_t q : small_primes)
            if (in_Xs(j_point(q), s) != (g % q != 0))
                return s.to_string() + " at q=" + std::to_string(q);
        return std::nullopt;
    });
    h.law("arithmetic-preimage-is-product", std::min<std::uint64_t>(p.cases, 1), [&](Rng&) -> std::optional<std::string> {
        std::vector<std::uint64_t> five = first_primes(5);
        for (std::uint64_t mask = 0; mask < (1u << 5); ++mask) {
            std::vector<std::uint64_t> P;
            std::uint64_t prod = 1;
            for (std::size_t i = 0; i < 5; ++i)
                if (mask & (1u << i)) {
                    P.push_back(five[i]);
                    prod *= five[i];
                }
            for (std::uint64_t q : small_primes)
                if (in_Xa(i_point(q), P) != (prod % q != 0))
                    return "P mask=" + std::to_string(mask) + ", q=" + std::to_string(q);
        }
        return std::nullopt;
    });
    h.law("arithmetic-opens-closed-in-sieve-topology", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              SupernaturalClass c = random_class(rng, pool);
              std::vector<std::uint64_t> P;
              for (std::uint64_t q : pool)
                  if (rng.chance(1, 2)) P.push_back(q);
              Sieve primes_sieve = Sieve::from_generators(P);
              if (in_Xa(c, P) == !in_Xs(c, primes_sieve)) return std::nullopt;
              return c.to_string();
          });
    h.law("atom-meet-compatibility", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        Sieve t = random_sieve(rng, p.max_gens, p.max_val);
        bool ok = c_equal(Constructible::atom(meet(s, t)),
                          Constructible::conjunction(Constructible::atom(s),
                                                     Constructible::atom(t)),
                          p.prime_budget);
        if (ok) return std::nullopt;
        return pair_str(s, t);
    });
    h.law("atom-join-compatibility", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        Sieve t = random_sieve(rng, p.max_gens, p.max_val);
        bool ok = c_equal(Constructible::atom(join(s, t)),
                          Constructible::disjunction(Constructible::atom(s),
                                                     Constructible::atom(t)),
                          p.prime_budget);
        if (ok) return std::nullopt;
        return pair_str(s, t);
    });
    h.law("nonempty-opens-intersect", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        Sieve t = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        Constructible both = Constructible::conjunction(Constructible::atom(s),
                                                        Constructible::atom(t));
        if (!c_is_empty(both, p.prime_budget)) return std::nullopt;
        return pair_str(s, t);
    });
    h.law("emptiness-vs-point-enumeration", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              // Values <= 21 keep the relevant primes within the first 8.
              Constructible c = random_constructible(rng, 4, p.max_gens, 21);
              std::vector<std::uint64_t> rel = c.relevant_primes();
              bool any_point = false;
              for (std::uint64_t mask = 0; mask < (1ull << rel.size()); ++mask) {
                  std::vector<std::uint64_t> sub;
                  for (std::size_t i = 0; i < rel.size(); ++i)
                      if (mask & (1ull << i)) sub.push_back(rel[i]);
                  SupernaturalClass cl{PrimeSetDesc::finite(sub)};
                  if (c_member(cl, c)) {
                      any_point = true;
                      break;
                  }
              }
              if (c_is_empty(c, p.prime_budget) == !any_point) return std::nullopt;
              return c.to_string();
          });
}

void sheaves_suite(Harness& h, const Params& p) {
    std::vector<std::uint64_t> pool = first_primes(6);

    h.law("sections-restriction-monotone", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              Sieve s = random_nonzero_sieve(rng, p.max_gens, p.max_val);
              Sieve t = join(s, random_nonzero_sieve(rng, p.max_gens, p.max_val));
              if (gcd_of(s) % gcd_of(t) != 0) return pair_str(s, t) + " (gcd)";
              DenominatorSpec lo = sections_j(t), hi = sections_j(s);
              for (std::uint64_t q : lo.invertible.primes)
                  if (!hi.invertible.contains(q)) return pair_str(s, t);
              Rational sample = random_rational(rng, 50, 1000, true);
              if (lo.contains(sample) && !hi.contains(sample))
                  return pair_str(s, t) + " at " + sample.to_string();
              return std::nullopt;
          });
    h.law("sections-contained-in-stalk", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_nonzero_sieve(rng, p.max_gens, p.max_val);
        // Build a class guaranteed to lie in the open: absorb one
        // generator's primes into the infinity-support.
        SupernaturalClass c = random_class(rng, pool);
        std::uint64_t g = s.generators()[rng.below(s.generators().size())];
        std::vector<std::uint64_t> listed = c.inf_support.primes;
        for (std::uint64_t q : prime_support(g)) {
            if (c.inf_support.is_finite())
                listed.push_back(q);
            else
                listed.erase(std::remove(listed.begin(), listed.end(), q), listed.end());
        }
        c.inf_support = c.inf_support.is_finite()
                            ? PrimeSetDesc::finite(listed)
                            : PrimeSetDesc::cofinite_complement(listed);
        if (!in_Xs(c, s)) return "failed to place " + c.to_string() + " in " + s.to_string();
        DenominatorSpec sec = sections_j(s), st = stalk_j(c);
        for (std::uint64_t d = 1; d <= 1000; ++d) {
            Rational q(1, static_cast<std::int64_t>(d));
            if (sec.contains(q) && !st.contains(q))
                return c.to_string() + " in " + s.to_string() + " at 1/" + std::to_string(d);
        }
        return std::nullopt;
    });
    h.law("both-stalks-are-local-ring-at-p", std::min<std::uint64_t>(p.cases, 1), [&](Rng&) -> std::optional<std::string> {
        for (std::uint64_t q : first_primes(15)) {
            DenominatorSpec a = stalk_i(i_point(q));
            DenominatorSpec b = stalk_j(j_point(q));
            if (!(a == b)) return "p=" + std::to_string(q);
            for (std::uint64_t n = 1; n <= 200; ++n)
                for (std::uint64_t d = 1; d <= 200; d += 7) {
                    Rational r(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
                    bool expect = r.den() % q != 0; // denominator coprime to q
                    if (a.contains(r) != expect || b.contains(r) != expect)
                        return "p=" + std::to_string(q) + ", " + r.to_string();
                }
        }
        return std::nullopt;
    });
}

void skew_frame_suite(Harness& h, const Params& p) {
    const unsigned pb = p.prime_budget;
    auto theta3 = [&p](Rng& rng) {
        return std::array<Fluctuation, 3>{random_fluctuation(rng, p.max_gens, p.max_val, 2),
                                          random_fluctuation(rng, p.max_gens, p.max_val, 2),
                                          random_fluctuation(rng, p.max_gens, p.max_val, 2)};
    };
    auto render3 = [](const Fluctuation& x, const Fluctuation& y, const Fluctuation& z) {
        return x.to_string() + ", " + y.to_string() + ", " + z.to_string();
    };

    h.law("nc01-meet-associative", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = theta3(rng);
        if (theta_equal(meet(x, meet(y, z)), meet(meet(x, y), z), pb)) return std::nullopt;
        return render3(x, y, z);
    });
    h.law("nc02-join-associative", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = theta3(rng);
        if (theta_equal(join(x, join(y, z)), join(join(x, y), z), pb)) return std::nullopt;
        return render3(x, y, z);
    });
    auto theta1 = [&p](Rng& rng) { return random_fluctuation(rng, p.max_gens, p.max_val, 2); };

    h.law("nc03-meet-idempotent", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng);
        if (theta_equal(meet(x, x), x, pb)) return std::nullopt;
        return x.to_string();
    });
    h.law("nc04-join-idempotent", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng);
        if (theta_equal(join(x, x), x, pb)) return std::nullopt;
        return x.to_string();
    });
    h.law("nc05-absorption", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        bool ok = theta_equal(meet(x, join(x, y)), x, pb) &&
                  theta_equal(join(x, meet(x, y)), x, pb);
        if (ok) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("nc06-absorption-flipped", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        bool ok = theta_equal(meet(join(y, x), x), x, pb) &&
                  theta_equal(join(meet(y, x), x), x, pb);
        if (ok) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("nc07-bottom-absorbs-meet", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng);
        Fluctuation bot = theta_bottom();
        bool ok = theta_equal(meet(x, bot), bot, pb) && theta_equal(meet(bot, x), bot, pb);
        if (ok) return std::nullopt;
        return x.to_string();
    });
    h.law("nc08-bottom-neutral-join", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng);
        Fluctuation bot = theta_bottom();
        bool ok = theta_equal(join(x, bot), x, pb) && theta_equal(join(bot, x), x, pb);
        if (ok) return std::nullopt;
        return x.to_string();
    });
    h.law("nc09-left-distributive", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = theta3(rng);
        if (theta_equal(meet(x, join(y, z)), join(meet(x, y), meet(x, z)), pb))
            return std::nullopt;
        return render3(x, y, z);
    });
    h.law("nc10-right-distributive", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = theta3(rng);
        if (theta_equal(meet(join(y, z), x), join(meet(y, x), meet(z, x)), pb))
            return std::nullopt;
        return render3(x, y, z);
    });
    h.law("nc11-left-handed-meet", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        if (theta_equal(meet(meet(x, y), x), meet(x, y), pb)) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("nc12-left-handed-join", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        if (theta_equal(join(join(x, y), x), join(y, x), pb)) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("nc13-left-normal", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        auto [x, y, z] = theta3(rng);
        if (theta_equal(meet(meet(x, y), z), meet(meet(x, z), y), pb)) return std::nullopt;
        return render3(x, y, z);
    });
    h.law("order-coherence", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        bool v1 = leq(x, y, pb);
        bool v2 = theta_equal(meet(x, y), x, pb) && theta_equal(meet(y, x), x, pb);
        bool v3 = theta_equal(join(x, y), y, pb) && theta_equal(join(y, x), y, pb);
        if (v1 == v2 && v2 == v3) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("commutation-criterion", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        bool comm = commutes(x, y, pb);
        bool meets = theta_equal(meet(x, y), meet(y, x), pb);
        bool joins = theta_equal(join(x, y), join(y, x), pb);
        if (comm == meets && comm == joins) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("leech-quotient-morphism", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        bool ok = shadow(meet(x, y)) == meet(shadow(x), shadow(y)) &&
                  shadow(join(x, y)) == join(shadow(x), shadow(y));
        if (ok) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("equivalence-congruence", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta1(rng), y = theta1(rng);
        // Same domain as x, different fluctuation.
        Fluctuation x2(x.domain, random_constructible(rng, 2, p.max_gens, p.max_val));
        bool ok = equiv(x, x2) && equiv(meet(x, y), meet(x2, y)) &&
                  equiv(join(x, y), join(x2, y)) && equiv(meet(y, x), meet(y, x2)) &&
                  equiv(join(y, x), join(y, x2));
        if (ok) return std::nullopt;
        return x.to_string() + ", " + x2.to_string() + ", " + y.to_string();
    });
    h.law("omega-embedding", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Sieve s = random_sieve(rng, p.max_gens, p.max_val);
        Sieve t = random_sieve(rng, p.max_gens, p.max_val);
        bool ok = shadow(embed(s)) == s &&
                  theta_equal(embed(meet(s, t)), meet(embed(s), embed(t)), pb) &&
                  theta_equal(embed(join(s, t)), join(embed(s), embed(t)), pb);
        if (ok) return std::nullopt;
        return pair_str(s, t);
    });
}

void skew_heyting_suite(Harness& h, const Params& p) {
    const unsigned pb = p.prime_budget;
    auto theta = [&p](Rng& rng) {
        return random_fluctuation(rng, p.max_gens, p.max_val, 2);
    };

    h.law("sh1-implication-normalizes-left", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              Fluctuation x = theta(rng), y = theta(rng);
              if (theta_equal(implies(x, y), implies(join(join(y, x), y), y), pb))
                  return std::nullopt;
              return x.to_string() + ", " + y.to_string();
          });
    h.law("sh3-meet-with-implication", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta(rng), y = theta(rng);
        Fluctuation lhs = meet(meet(x, implies(x, y)), x);
        Fluctuation rhs = meet(meet(x, y), x);
        if (theta_equal(lhs, rhs, pb)) return std::nullopt;
        return x.to_string() + ", " + y.to_string();
    });
    h.law("sh4-implication-absorbs-target", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              Fluctuation x = theta(rng), y = theta(rng);
              bool ok = theta_equal(meet(y, implies(x, y)), y, pb) &&
                        theta_equal(meet(implies(x, y), y), y, pb);
              if (ok) return std::nullopt;
              return x.to_string() + ", " + y.to_string();
          });
    h.law("sh5-implication-distributes", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Fluctuation x = theta(rng), y = theta(rng), z = theta(rng), u = theta(rng);
        Fluctuation lhs = implies(x, join(join(u, meet(y, z)), u));
        Fluctuation rhs = meet(implies(x, join(join(u, y), u)),
                               implies(x, join(join(u, z), u)));
        if (theta_equal(lhs, rhs, pb)) return std::nullopt;
        return x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ", " +
               u.to_string();
    });
    h.law("sh2-replacement-self-implication", p.cases,
          [&](Rng& rng) -> std::optional<std::string> {
              Fluctuation x = theta(rng);
              Fluctuation expected(
                  Sieve::one(),
                  Constructible::disjunction(
                      x.support,
                      Constructible::negation(Constructible::atom(x.domain))));
              if (theta_equal(implies(x, x), expected, pb)) return std::nullopt;
              return x.to_string();
          });
}

void bigcell_suite(Harness& h, const Params& p) {
    h.law("hyperdistance-symmetric", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        ConwayLattice a = random_lattice(rng, 12), b = random_lattice(rng, 12);
        std::uint64_t ab = hyperdistance(a, b), ba = hyperdistance(b, a);
        if (ab == ba && ab >= 1) return std::nullopt;
        return a.to_string() + " vs " + b.to_string();
    });
    h.law("hyperdistance-one-iff-equal", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        ConwayLattice a = random_lattice(rng, 8), b = random_lattice(rng, 8);
        bool ok = (hyperdistance(a, b) == 1) == (a == b) && hyperdistance(a, a) == 1;
        if (ok) return std::nullopt;
        return a.to_string() + " vs " + b.to_string();
    });
    h.law("integer-lattice-closed-form", std::min<std::uint64_t>(p.cases, 1), [&](Rng&) -> std::optional<std::string> {
        for (std::uint64_t m = 1; m <= 50; ++m)
            for (std::uint64_t n = 1; n <= 50; ++n) {
                ConwayLattice a(Rational::from_int(static_cast<std::int64_t>(m)),
                                Rational());
                ConwayLattice b(Rational::from_int(static_cast<std::int64_t>(n)),
                                Rational());
                if (hyperdistance(a, b) != hyperdistance_integers(m, n))
                    return "M=" + std::to_string(m) + ", N=" + std::to_string(n);
            }
        return std::nullopt;
    });
    h.law("truncations-are-points", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Supernatural s = random_supernatural(rng, first_primes(6), 5);
        if (is_point_truncation(divisor_truncation(s, 200))) return std::nullopt;
        return s.to_string();
    });
    h.law("truncation-monotone-in-bound", p.cases, [&](Rng& rng) -> std::optional<std::string> {
        Supernatural s = random_supernatural(rng, first_primes(6), 5);
        std::uint64_t b1 = rng.range(1, 100), b2 = b1 + rng.below(100);
        DivisorTruncation t1 = divisor_truncation(s, b1);
        DivisorTruncation t2 = divisor_truncation(s, b2);
        if (std::includes(t2.members.begin(), t2.members.end(), t1.members.begin(),
                          t1.members.end()))
            return std::nullopt;
        return s.to_string();
    });
}

} // namespace

std::optional<SuiteId> suite_from_name(std::string_view name) {
    if (name == "heyting") return SuiteId::Heyting;
    if (name == "oracle") return SuiteId::Oracle;
    if (name == "action") return SuiteId::Action;
    if (name == "grothendieck") return SuiteId::Grothendieck;
    if (name == "topologies") return SuiteId::Topologies;
    if (name == "sheaves") return SuiteId::Sheaves;
    if (name == "skew-frame") return SuiteId::SkewFrame;
    if (name == "skew-heyting") return SuiteId::SkewHeyting;
    if (name == "bigcell") return SuiteId::Bigcell;
    if (name == "all") return SuiteId::All;
    return std::nullopt;
}

std::string suite_name(SuiteId id) {
    switch (id) {
        case SuiteId::Heyting: return "heyting";
        case SuiteId::Oracle: return "oracle";
        case SuiteId::Action: return "action";
        case SuiteId::Grothendieck: return "grothendieck";
        case SuiteId::Topologies: return "topologies";
        case SuiteId::Sheaves: return "sheaves";
        case SuiteId::SkewFrame: return "skew-frame";
        case SuiteId::SkewHeyting: return "skew-heyting";
        case SuiteId::Bigcell: return "bigcell";
        case SuiteId::All: return "all";
    }
    return "?";
}

std::vector<std::string> suite_names() {
    return {"heyting",    "oracle",  "action",     "grothendieck", "topologies",
            "sheaves",    "skew-frame", "skew-heyting", "bigcell",  "all"};
}

std::uint64_t SuiteReport::total_cases() const {
    std::uint64_t n = 0;
    for (const auto& l : laws) n += l.cases;
    return n;
}

std::uint64_t SuiteReport::total_violations() const {
    std::uint64_t n = 0;
    for (const auto& l : laws) n += l.violations;
    return n;
}

std::string SuiteReport::to_string() const {
    std::string out = "suite " + suite + "  seed " + std::to_string(seed) + "\n";
    for (const auto& l : laws) {
        out += (l.violations ? "  FAIL " : "  ok   ") + l.law + "  (" +
               std::to_string(l.cases) + " cases";
        if (l.violations) out += ", " + std::to_string(l.violations) + " violations";
        out += ")\n";
        for (const auto& cx : l.counterexamples) out += "       counterexample: " + cx + "\n";
    }
    out += "total: " + std::to_string(laws.size()) + " laws, " +
           std::to_string(total_cases()) + " cases, " +
           std::to_string(total_violations()) + " violations\n";
    return out;
}

SuiteReport run_suite(SuiteId id, const SuiteBudget& budget) {
    if (id == SuiteId::All) {
        SuiteReport merged;
        merged.suite = "all";
        merged.seed = budget.seed;
        for (SuiteId sub :
             {SuiteId::Heyting, SuiteId::Oracle, SuiteId::Action, SuiteId::Grothendieck,
              SuiteId::Topologies, SuiteId::Sheaves, SuiteId::SkewFrame,
              SuiteId::SkewHeyting, SuiteId::Bigcell}) {
            SuiteReport r = run_suite(sub, budget);
            for (auto& l : r.laws) {
                l.law = r.suite + "/" + l.law;
                merged.laws.push_back(std::move(l));
            }
        }
        return merged;
    }

    Params p = resolve(id, budget);
    SuiteReport report;
    report.suite = suite_name(id);
    report.seed = p.seed;
    Harness h(report, derive_seed(p.seed, report.suite));

    switch (id) {
        case SuiteId::Heyting: heyting_suite(h, p); break;
        case SuiteId::Oracle: oracle_suite(h, p); break;
        case SuiteId::Action: action_suite(h, p); break;
        case SuiteId::Grothendieck: grothendieck_suite(h, p); break;
        case SuiteId::Topologies: topologies_suite(h, p); break;
        case SuiteId::Sheaves: sheaves_suite(h, p); break;
        case SuiteId::SkewFrame: skew_frame_suite(h, p); break;
        case SuiteId::SkewHeyting: skew_heyting_suite(h, p); break;
        case SuiteId::Bigcell: bigcell_suite(h, p); break;
        case SuiteId::All: break;
    }
    return report;
}

} // namespace arithsite
