#pragma once

// Brute-force oracles for the unit tests. Everything here works by direct
// enumeration of multiple sets and never calls the lattice operations whose
// results it is used to check.

#include <cstdint>
#include <numeric>
#include <vector>

#include "arithsite/sieve.hpp"

namespace oracle {

// Membership table of the ideal generated by `gens` over 1..bound, built by
// stepping through multiples.
inline std::vector<bool> multiple_set(const std::vector<std::uint64_t>& gens,
                                      std::uint64_t bound) {
    std::vector<bool> in(bound + 1, false);
    for (std::uint64_t g : gens)
        for (std::uint64_t m = g; m <= bound; m += g) in[m] = true;
    return in;
}

inline std::vector<bool> multiple_set(const arithsite::Sieve& s, std::uint64_t bound) {
    return multiple_set(s.generators(), bound);
}

inline bool same_set(const std::vector<bool>& a, const std::vector<bool>& b) {
    return a == b;
}

// The divisibility-minimal elements of the satisfier set {e <= bound :
// pred(e)}; canonical generators when the satisfier set is upward closed.
template <typename Pred>
std::vector<std::uint64_t> minimal_satisfiers(std::uint64_t bound, Pred pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 1; e <= bound; ++e) {
        if (!pred(e)) continue;
        bool dominated = false;
        for (std::uint64_t m : out)
            if (e % m == 0) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(e);
    }
    return out;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

} // namespace oracle
