#include "arithsite/sampler.hpp"

namespace arithsite {

Sieve random_sieve(Rng& rng, unsigned max_gens, std::uint64_t max_val) {
    unsigned k = static_cast<unsigned>(rng.below(max_gens + 1));
    std::vector<std::uint64_t> gens;
    for (unsigned i = 0; i < k; ++i) gens.push_back(rng.range(1, max_val));
    return Sieve::from_generators(gens);
}

Sieve random_nonzero_sieve(Rng& rng, unsigned max_gens, std::uint64_t max_val) {
    unsigned k = static_cast<unsigned>(rng.range(1, max_gens));
    std::vector<std::uint64_t> gens;
    for (unsigned i = 0; i < k; ++i) gens.push_back(rng.range(1, max_val));
    return Sieve::from_generators(gens);
}

Supernatural random_supernatural(Rng& rng, const std::vector<std::uint64_t>& prime_pool,
                                 std::uint64_t max_exp) {
    auto d = rng.chance(1, 4) ? Supernatural::Default::Inf : Supernatural::Default::Zero;
    std::map<std::uint64_t, Exponent> exc;
    for (std::uint64_t p : prime_pool) {
        if (!rng.chance(1, 2)) continue;
        if (d == Supernatural::Default::Inf) {
            exc.emplace(p, Exponent::finite(rng.below(max_exp + 1)));
        } else {
            exc.emplace(p, rng.chance(1, 3) ? Exponent::infinite()
                                            : Exponent::finite(rng.range(1, max_exp)));
        }
    }
    return Supernatural::make(d, std::move(exc));
}

SupernaturalClass random_class(Rng& rng, const std::vector<std::uint64_t>& prime_pool) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : prime_pool)
        if (rng.chance(1, 2)) ps.push_back(p);
    if (rng.chance(1, 4))
        return SupernaturalClass{PrimeSetDesc::cofinite_complement(std::move(ps))};
    return SupernaturalClass{PrimeSetDesc::finite(std::move(ps))};
}

Constructible random_constructible(Rng& rng, unsigned max_atoms, unsigned max_gens,
                                   std::uint64_t max_val) {
    unsigned atoms = static_cast<unsigned>(rng.below(max_atoms + 1));
    if (atoms == 0)
        return rng.chance(1, 2) ? Constructible::truth() : Constructible::falsity();
    Constructible out = Constructible::atom(random_sieve(rng, max_gens, max_val));
    if (rng.chance(1, 3)) out = Constructible::negation(out);
    for (unsigned i = 1; i < atoms; ++i) {
        Constructible next = Constructible::atom(random_sieve(rng, max_gens, max_val));
        if (rng.chance(1, 3)) next = Constructible::negation(next);
        out = rng.chance(1, 2) ? Constructible::conjunction(out, next)
                               : Constructible::disjunction(out, next);
    }
    return out;
}

Fluctuation random_fluctuation(Rng& rng, unsigned max_gens, std::uint64_t max_val,
                               unsigned max_support_atoms) {
    Sieve dom = random_sieve(rng, max_gens, max_val);
    return Fluctuation(dom, random_constructible(rng, max_support_atoms, max_gens, max_val));
}

Rational random_rational(Rng& rng, std::uint64_t max_num, std::uint64_t max_den,
                         bool allow_negative) {
    std::int64_t num = static_cast<std::int64_t>(rng.range(1, max_num));
    if (allow_negative && rng.chance(1, 2)) num = -num;
    return Rational(num, static_cast<std::int64_t>(rng.range(1, max_den)));
}

ConwayLattice random_lattice(Rng& rng, std::uint64_t max_component) {
    Rational scale = random_rational(rng, max_component, max_component, false);
    Rational shift = random_rational(rng, max_component, max_component, false);
    return ConwayLattice(scale, shift);
}

} // namespace arithsite
