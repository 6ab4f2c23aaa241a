// Cross-validation of the skew module against an explicit finite semantic
// model. Over a fixed prime pool, every representable class is a subset of
// the pool, a (truncated) sieve open is the set of subsets where some
// generator is supported, and a fluctuation is its domain plus the exact
// set of subsets where its support holds. The model computes all operations
// by plain set algebra, with no constructible formulas involved, so
// agreement here checks the formula-based implementation end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "arithsite/numeric.hpp"
#include "arithsite/rng.hpp"
#include "arithsite/sampler.hpp"
#include "arithsite/skew.hpp"

using namespace arithsite;

namespace {

using Mask = std::uint64_t;
using MaskSet = std::set<Mask>;

const std::vector<std::uint64_t>& pool() {
    static std::vector<std::uint64_t> p = first_primes(2); // 2, 3
    return p;
}

// Generators whose prime support stays inside the pool, so the four test
// points determine every formula exactly.
Sieve random_smooth_sieve(Rng& rng, unsigned max_gens) {
    static const std::vector<std::uint64_t> smooth{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 36};
    unsigned k = static_cast<unsigned>(rng.below(max_gens + 1));
    std::vector<std::uint64_t> gens;
    for (unsigned i = 0; i < k; ++i) gens.push_back(smooth[rng.below(smooth.size())]);
    return Sieve::from_generators(gens);
}

Constructible random_smooth_formula(Rng& rng, unsigned max_atoms) {
    unsigned atoms = static_cast<unsigned>(rng.below(max_atoms + 1));
    if (atoms == 0)
        return rng.chance(1, 2) ? Constructible::truth() : Constructible::falsity();
    Constructible out = Constructible::atom(random_smooth_sieve(rng, 2));
    for (unsigned i = 1; i < atoms; ++i) {
        Constructible next = Constructible::atom(random_smooth_sieve(rng, 2));
        if (rng.chance(1, 3)) next = Constructible::negation(next);
        out = rng.chance(1, 2) ? Constructible::conjunction(out, next)
                               : Constructible::disjunction(out, next);
    }
    return out;
}

Fluctuation random_smooth_fluctuation(Rng& rng) {
    return Fluctuation(random_smooth_sieve(rng, 3), random_smooth_formula(rng, 2));
}

Mask mask_count() { return Mask(1) << pool().size(); }

// The class whose infinity-support is exactly the pooled primes in `mask`.
SupernaturalClass class_at(Mask mask) {
    std::vector<std::uint64_t> ps;
    for (std::size_t i = 0; i < pool().size(); ++i)
        if (mask & (Mask(1) << i)) ps.push_back(pool()[i]);
    return SupernaturalClass{PrimeSetDesc::finite(ps)};
}

// Truth of the sieve open at a point, computed from scratch.
bool open_at(const Sieve& s, Mask mask) {
    for (std::uint64_t g : s.generators()) {
        bool inside = true;
        for (std::uint64_t q : prime_support(g)) {
            bool pooled = false;
            for (std::size_t i = 0; i < pool().size(); ++i)
                if (pool()[i] == q && (mask & (Mask(1) << i))) pooled = true;
            if (!pooled) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

MaskSet open_points(const Sieve& s) {
    MaskSet out;
    for (Mask m = 0; m < mask_count(); ++m)
        if (open_at(s, m)) out.insert(m);
    return out;
}

// A fluctuation in the model: domain sieve plus the exact point set of its
// support.
struct ModelTheta {
    Sieve domain;
    MaskSet points;

    bool operator==(const ModelTheta&) const = default;
    bool operator<(const ModelTheta& o) const {
        if (domain == o.domain) return points < o.points;
        return domain < o.domain;
    }
};

MaskSet intersect(const MaskSet& a, const MaskSet& b) {
    MaskSet out;
    for (Mask m : a)
        if (b.count(m)) out.insert(m);
    return out;
}

MaskSet unite(const MaskSet& a, const MaskSet& b) {
    MaskSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

MaskSet subtract(const MaskSet& a, const MaskSet& b) {
    MaskSet out;
    for (Mask m : a)
        if (!b.count(m)) out.insert(m);
    return out;
}

ModelTheta m_meet(const ModelTheta& a, const ModelTheta& b) {
    Sieve dom = meet(a.domain, b.domain);
    return {dom, intersect(a.points, open_points(dom))};
}

ModelTheta m_join(const ModelTheta& a, const ModelTheta& b) {
    Sieve dom = join(a.domain, b.domain);
    return {dom, unite(b.points, subtract(a.points, open_points(b.domain)))};
}

ModelTheta m_implies(const ModelTheta& a, const ModelTheta& b) {
    Sieve dom = implies(a.domain, b.domain);
    return {dom, unite(b.points, subtract(open_points(dom), open_points(b.domain)))};
}

bool m_leq(const ModelTheta& a, const ModelTheta& b) {
    return leq(a.domain, b.domain) &&
           intersect(b.points, open_points(a.domain)) == a.points;
}

bool m_commutes(const ModelTheta& a, const ModelTheta& b) {
    MaskSet common = open_points(meet(a.domain, b.domain));
    return intersect(a.points, common) == intersect(b.points, common);
}

ModelTheta m_bottom() { return {Sieve::zero(), {}}; }

// Projection of an implementation value into the model.
ModelTheta project(const Fluctuation& f) {
    ModelTheta out;
    out.domain = f.domain;
    for (Mask m = 0; m < mask_count(); ++m)
        if (c_member(class_at(m), f.support)) out.points.insert(m);
    return out;
}

// All canonical sieves generated from divisors of n (a finite Heyting
// subalgebra: lcms and the implication grid stay inside the divisors).
std::vector<Sieve> sieves_over(std::uint64_t n) {
    std::vector<std::uint64_t> divs = divisors(n);
    std::set<Sieve> out;
    for (std::uint64_t mask = 0; mask < (1ull << divs.size()); ++mask) {
        std::vector<std::uint64_t> gens;
        for (std::size_t i = 0; i < divs.size(); ++i)
            if (mask & (1ull << i)) gens.push_back(divs[i]);
        out.insert(Sieve::from_generators(gens));
    }
    return std::vector<Sieve>(out.begin(), out.end());
}

// Every model fluctuation over the given sieves.
std::vector<ModelTheta> all_thetas(const std::vector<Sieve>& sieves) {
    std::vector<ModelTheta> out;
    for (const Sieve& s : sieves) {
        MaskSet pt_set = open_points(s);
        std::vector<Mask> pts(pt_set.begin(), pt_set.end());
        for (std::uint64_t mask = 0; mask < (1ull << pts.size()); ++mask) {
            ModelTheta t;
            t.domain = s;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (mask & (1ull << i)) t.points.insert(pts[i]);
            out.push_back(std::move(t));
        }
    }
    return out;
}

// A fluctuation whose support is the exact point set of a model element,
// written as a disjunction of point formulas Xs(product of mask primes)
// minus the neighbouring opens. Used to push model elements back into the
// implementation.
Fluctuation lift(const ModelTheta& t) {
    Constructible support = Constructible::falsity();
    for (Mask m : t.points) {
        // The conjunction of Xs over the mask primes and the negations of
        // Xs over the others pins the point exactly.
        Constructible point = Constructible::truth();
        for (std::size_t i = 0; i < pool().size(); ++i) {
            Constructible atom = Constructible::atom(Sieve::principal(pool()[i]));
            point = Constructible::conjunction(
                point, (m & (Mask(1) << i)) ? atom : Constructible::negation(atom));
        }
        support = Constructible::disjunction(support, point);
    }
    return Fluctuation(t.domain, support);
}

} // namespace

TEST_CASE("projection of lifted model elements is the identity") {
    for (const ModelTheta& t : all_thetas(sieves_over(12)))
        CHECK(project(lift(t)) == t);
}

TEST_CASE("implementation operations agree with the set model, exhaustively") {
    std::vector<ModelTheta> thetas = all_thetas(sieves_over(12));
    std::vector<Fluctuation> lifted;
    for (const ModelTheta& t : thetas) lifted.push_back(lift(t));
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = 0; j < thetas.size(); ++j) {
            const ModelTheta &a = thetas[i], &b = thetas[j];
            const Fluctuation &x = lifted[i], &y = lifted[j];
            CHECK(project(meet(x, y)) == m_meet(a, b));
            CHECK(project(join(x, y)) == m_join(a, b));
            CHECK(project(implies(x, y)) == m_implies(a, b));
            CHECK(leq(x, y) == m_leq(a, b));
            CHECK(commutes(x, y) == m_commutes(a, b));
            CHECK(theta_equal(x, y) == (a == b));
        }
}

TEST_CASE("implementation operations agree with the set model on random data") {
    Rng rng(67);
    for (int i = 0; i < 800; ++i) {
        Fluctuation x = random_smooth_fluctuation(rng);
        Fluctuation y = random_smooth_fluctuation(rng);
        ModelTheta a = project(x), b = project(y);
        CHECK(project(meet(x, y)) == m_meet(a, b));
        CHECK(project(join(x, y)) == m_join(a, b));
        CHECK(project(implies(x, y)) == m_implies(a, b));
        CHECK(project(restrict_to(x, y.domain)) == m_meet(a, b));
        CHECK(leq(x, y) == m_leq(a, b));
        CHECK(commutes(x, y) == m_commutes(a, b));
    }
}

TEST_CASE("the model itself satisfies the frame axioms, exhaustively") {
    std::vector<ModelTheta> thetas = all_thetas(sieves_over(12));
    ModelTheta bot = m_bottom();
    for (const ModelTheta& x : thetas) {
        CHECK(m_meet(x, x) == x);
        CHECK(m_join(x, x) == x);
        CHECK(m_meet(x, bot) == bot);
        CHECK(m_meet(bot, x) == bot);
        CHECK(m_join(x, bot) == x);
        CHECK(m_join(bot, x) == x);
    }
    for (const ModelTheta& x : thetas)
        for (const ModelTheta& y : thetas) {
            CHECK(m_meet(x, m_join(x, y)) == x);
            CHECK(m_join(x, m_meet(x, y)) == x);
            CHECK(m_meet(m_join(y, x), x) == x);
            CHECK(m_join(m_meet(y, x), x) == x);
            CHECK(m_meet(m_meet(x, y), x) == m_meet(x, y));
            CHECK(m_join(m_join(x, y), x) == m_join(y, x));
        }
    // Associativity, distributivity, left normality on a deterministic
    // sample of triples (the full cube is large but uniform).
    Rng rng(71);
    for (int i = 0; i < 4000; ++i) {
        const ModelTheta& x = thetas[rng.below(thetas.size())];
        const ModelTheta& y = thetas[rng.below(thetas.size())];
        const ModelTheta& z = thetas[rng.below(thetas.size())];
        CHECK(m_meet(x, m_meet(y, z)) == m_meet(m_meet(x, y), z));
        CHECK(m_join(x, m_join(y, z)) == m_join(m_join(x, y), z));
        CHECK(m_meet(x, m_join(y, z)) == m_join(m_meet(x, y), m_meet(x, z)));
        CHECK(m_meet(m_join(y, z), x) == m_join(m_meet(y, x), m_meet(z, x)));
        CHECK(m_meet(m_meet(x, y), z) == m_meet(m_meet(x, z), y));
    }
}

TEST_CASE("the model satisfies the implication laws except distributivity") {
    std::vector<ModelTheta> thetas = all_thetas(sieves_over(12));
    Rng rng(73);
    std::uint64_t sh5_failures = 0;
    for (int i = 0; i < 4000; ++i) {
        const ModelTheta& x = thetas[rng.below(thetas.size())];
        const ModelTheta& y = thetas[rng.below(thetas.size())];
        const ModelTheta& z = thetas[rng.below(thetas.size())];
        const ModelTheta& u = thetas[rng.below(thetas.size())];
        CHECK(m_implies(x, y) == m_implies(m_join(m_join(y, x), y), y));
        CHECK(m_meet(m_meet(x, m_implies(x, y)), x) == m_meet(m_meet(x, y), x));
        CHECK(m_meet(y, m_implies(x, y)) == y);
        CHECK(m_meet(m_implies(x, y), y) == y);
        ModelTheta lhs = m_implies(x, m_join(m_join(u, m_meet(y, z)), u));
        ModelTheta rhs = m_meet(m_implies(x, m_join(m_join(u, y), u)),
                                m_implies(x, m_join(m_join(u, z), u)));
        if (!(lhs == rhs)) ++sh5_failures;
    }
    // The distributive law fails in the bare set model too; the defect is
    // in the structure, not in the formula machinery.
    CHECK(sh5_failures > 0);

    ModelTheta x{Sieve::principal(6), open_points(Sieve::principal(6))};
    ModelTheta y{Sieve::principal(2), {}};
    ModelTheta z{Sieve::principal(3), open_points(Sieve::principal(3))};
    CHECK_FALSE(m_implies(x, m_meet(y, z)) ==
                m_meet(m_implies(x, y), m_implies(x, z)));
}
