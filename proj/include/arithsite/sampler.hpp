#pragma once

#include <cstdint>
#include <vector>

#include "arithsite/bigcell.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sieve.hpp"
#include "arithsite/skew.hpp"
#include "arithsite/supernatural.hpp"
#include "arithsite/topology.hpp"

namespace arithsite {

// Random values for the property suites and tests. All draws are pure
// functions of the Rng stream.

// Sieve with up to max_gens generators valued in [1, max_val]; the zero
// sieve appears with probability ~1/(max_gens+1).
Sieve random_sieve(Rng& rng, unsigned max_gens, std::uint64_t max_val);

// Nonzero variant.
Sieve random_nonzero_sieve(Rng& rng, unsigned max_gens, std::uint64_t max_val);

// Supernatural over the given prime pool with mixed defaults.
Supernatural random_supernatural(Rng& rng, const std::vector<std::uint64_t>& prime_pool,
                                 std::uint64_t max_exp);

SupernaturalClass random_class(Rng& rng, const std::vector<std::uint64_t>& prime_pool);

// Formula with at most max_atoms atoms over random sieves.
Constructible random_constructible(Rng& rng, unsigned max_atoms, unsigned max_gens,
                                   std::uint64_t max_val);

Fluctuation random_fluctuation(Rng& rng, unsigned max_gens, std::uint64_t max_val,
                               unsigned max_support_atoms);

// Reduced rational with |num| <= max_num, den <= max_den.
Rational random_rational(Rng& rng, std::uint64_t max_num, std::uint64_t max_den,
                         bool allow_negative);

ConwayLattice random_lattice(Rng& rng, std::uint64_t max_component);

} // namespace arithsite
