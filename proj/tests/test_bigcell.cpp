#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithsite/bigcell.hpp"
#include "arithsite/numeric.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sampler.hpp"

using namespace arithsite;

namespace {

ConwayLattice latt(std::int64_t m_num, std::int64_t m_den, std::int64_t s_num,
                   std::int64_t s_den) {
    return ConwayLattice(Rational(m_num, m_den), Rational(s_num, s_den));
}

} // namespace

TEST_CASE("canonical form of lattices") {
    ConwayLattice l = latt(2, 1, 5, 2); // shift 5/2 reduces to 1/2
    CHECK(l.shift == Rational(1, 2));
    ConwayLattice n = latt(1, 2, -1, 3); // negative shift wraps to 2/3
    CHECK(n.shift == Rational(2, 3));
    CHECK_THROWS_AS(latt(-1, 2, 0, 1), InvalidInputError);
    CHECK(latt(3, 1, 0, 1).to_string() == "(3, 0)");
    CHECK(latt(1, 2, 1, 2).to_string() == "(1/2, 1/2)");
}

TEST_CASE("hyperdistance basic values") {
    CHECK(hyperdistance(latt(1, 1, 0, 1), latt(1, 1, 0, 1)) == 1);
    CHECK(hyperdistance(latt(2, 1, 0, 1), latt(1, 1, 0, 1)) == 2);
    CHECK(hyperdistance(latt(2, 1, 0, 1), latt(3, 1, 0, 1)) == 6);
    CHECK(hyperdistance(latt(1, 1, 1, 2), latt(1, 1, 0, 1)) == 4);
    CHECK(hyperdistance(latt(1, 2, 0, 1), latt(1, 1, 0, 1)) == 2);
}

TEST_CASE("hyperdistance symmetry and separation on random lattices") {
    Rng rng(53);
    for (int i = 0; i < 300; ++i) {
        ConwayLattice a = random_lattice(rng, 12);
        ConwayLattice b = random_lattice(rng, 12);
        std::uint64_t ab = hyperdistance(a, b);
        CHECK(ab == hyperdistance(b, a));
        CHECK(ab >= 1);
        CHECK((ab == 1) == (a == b));
        CHECK(hyperdistance(a, a) == 1);
    }
}

TEST_CASE("integer lattices match the closed form") {
    for (std::uint64_t m = 1; m <= 50; ++m)
        for (std::uint64_t n = 1; n <= 50; ++n) {
            ConwayLattice a(Rational::from_int(static_cast<std::int64_t>(m)), Rational());
            ConwayLattice b(Rational::from_int(static_cast<std::int64_t>(n)), Rational());
            CHECK(hyperdistance(a, b) == hyperdistance_integers(m, n));
        }
    CHECK(hyperdistance_integers(12, 18) == 6);
}

TEST_CASE("big cell neighbors") {
    CHECK(bigcell_neighbors(1, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(bigcell_neighbors(2, 10) == std::vector<std::uint64_t>{1, 4, 6, 10});
    for (std::uint64_t m : {1ull, 2ull, 6ull, 12ull}) {
        auto ns = bigcell_neighbors(m, 60);
        for (std::uint64_t n : ns) CHECK(n != m);
    }
}

TEST_CASE("divisor truncations") {
    Supernatural two_inf =
        Supernatural::make(Supernatural::Default::Zero, {{2, Exponent::infinite()}});
    CHECK(divisor_truncation(two_inf, 10).members == std::vector<std::uint64_t>{1, 2, 4, 8});
    CHECK(divisor_truncation(Supernatural::from_nat(6), 20).members ==
          std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(divisor_truncation(Supernatural::from_nat(1), 50).members ==
          std::vector<std::uint64_t>{1});
    CHECK(divisor_truncation(Supernatural::all_inf(), 6).members ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("point truncation closure test") {
    CHECK(is_point_truncation({20, {1, 2, 3, 6}}));
    CHECK_FALSE(is_point_truncation({20, {1, 2, 3}})); // lcm(2,3)=6 missing
    CHECK(is_point_truncation({5, {1, 2, 3}}));        // 6 exceeds the bound
    CHECK(is_point_truncation({100, {1}}));
    CHECK_FALSE(is_point_truncation({10, {2, 4}})); // 1 missing, not divisor closed
    CHECK_FALSE(is_point_truncation({10, {1, 4}})); // 2 missing

    Rng rng(59);
    for (int i = 0; i < 100; ++i) {
        Supernatural s = random_supernatural(rng, first_primes(6), 5);
        CHECK(is_point_truncation(divisor_truncation(s, 200)));
    }
}

TEST_CASE("truncation grows with the bound") {
    Supernatural s = Supernatural::make(
        Supernatural::Default::Zero,
        {{2, Exponent::infinite()}, {3, Exponent::finite(2)}});
    auto t1 = divisor_truncation(s, 50), t2 = divisor_truncation(s, 200);
    for (std::uint64_t m : t1.members)
        CHECK(std::binary_search(t2.members.begin(), t2.members.end(), m));
}
