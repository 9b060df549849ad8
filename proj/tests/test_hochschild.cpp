#include "doctest.h"

#include <random>

#include "hgt/algebras.hpp"
#include "hgt/hochschild.hpp"

using namespace hgt;

namespace {
std::vector<GradedAlgebra> fixtures()
{
    return {GradedAlgebra(truncated_polynomial(2)), GradedAlgebra(truncated_polynomial(3)),
            GradedAlgebra(upper_triangular()), GradedAlgebra(truncated_polynomial(2, 1))};
}

HCochain random_in(const GradedAlgebra& h, std::size_t m, int n, std::mt19937_64& rng)
{
    return CochainSpace(h, m, n).random(rng);
}
}  // namespace

TEST_CASE("delta examples")
{
    for (const auto& h : fixtures()) {
        const auto id = HCochain::identity(h);
        const auto mu = HCochain::multiplication(h);
        CHECK(delta(h, id) == mu);
        CHECK(delta(h, mu).is_zero());
        // delta of a 0-cochain a is b -> ba + ab
        for (std::size_t a = 0; a < h.dim(); ++a) {
            auto da = delta(h, HCochain::element(h, Mask{1} << a));
            for (std::size_t b = 0; b < h.dim(); ++b)
                CHECK(da.value(b) == (h.product(b, a) ^ h.product(a, b)));
        }
    }
}

TEST_CASE("delta squares to zero on random cochains")
{
    std::mt19937_64 rng(5);
    for (const auto& h : fixtures())
        for (std::size_t m = 0; m <= 4; ++m)
            for (int n = -2; n <= 1; ++n)
                for (int trial = 0; trial < 5; ++trial) {
                    auto f = random_in(h, m, n, rng);
                    CHECK(f.well_typed(h));
                    auto df = delta(h, f);
                    CHECK(df.well_typed(h));
                    CHECK(delta(h, df).is_zero());
                }
}

TEST_CASE("cup product")
{
    std::mt19937_64 rng(9);
    for (const auto& h : fixtures()) {
        const auto one = HCochain::element(h, h.unit());
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = rng() % 3, p = rng() % 3;
            const int n = static_cast<int>(rng() % 3) - 1, q = static_cast<int>(rng() % 3) - 1;
            auto f = random_in(h, m, n, rng), g = random_in(h, p, q, rng);
            CHECK(cup(h, f, one) == f);
            auto fg = cup(h, f, g);
            if (!fg.is_zero()) {
                CHECK(fg.arity() == m + p);
                CHECK(fg.degree() == n + q);
            }
            CHECK(delta(h, fg) == cup(h, delta(h, f), g) + cup(h, f, delta(h, g)));
        }
    }
}

TEST_CASE("brace examples")
{
    std::mt19937_64 rng(13);
    for (const auto& h : fixtures()) {
        const auto mu = HCochain::multiplication(h);
        CHECK(brace(h, mu, {}) == mu);
        CHECK(cup1(h, mu, mu).is_zero());
        auto f = random_in(h, 1, 0, rng);
        std::vector<HCochain> two{f, f};
        CHECK(brace(h, f, two).is_zero());
        // Circle product f o g on arity (2;1) against direct insertion.
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_in(h, 2, 0, rng), g = random_in(h, 1, 0, rng);
            auto c = cup1(h, a, g);
            for (std::size_t x = 0; x < h.dim(); ++x)
                for (std::size_t y = 0; y < h.dim(); ++y) {
                    const Mask gx = evaluate(h, g, std::vector<Mask>{Mask{1} << x});
                    const Mask gy = evaluate(h, g, std::vector<Mask>{Mask{1} << y});
                    const Mask expected = evaluate(h, a, std::vector<Mask>{gx, Mask{1} << y}) ^
                                          evaluate(h, a, std::vector<Mask>{Mask{1} << x, gy});
                    CHECK(c.value(x * h.dim() + y) == expected);
                }
        }
        // Bidegree law.
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_in(h, 3, 0, rng);
            std::vector<HCochain> gs{random_in(h, rng() % 3, 0, rng), random_in(h, rng() % 3, -1, rng)};
            auto b = brace(h, a, gs);
            if (!b.is_zero()) {
                CHECK(b.arity() == 3 + gs[0].arity() + gs[1].arity() - 2);
                CHECK(b.degree() == a.degree() + gs[0].degree() + gs[1].degree());
                CHECK(b.well_typed(h));
            }
        }
    }
}

TEST_CASE("brace with 0-cochains inserts elements")
{
    GradedAlgebra h(truncated_polynomial(3));
    auto mu = HCochain::multiplication(h);
    auto x = HCochain::element(h, Mask{1} << 1);
    // E_{1,1}(mu; x)(b) = x.b + b.x
    auto e = cup1(h, mu, x);
    CHECK(e.arity() == 1);
    for (std::size_t b = 0; b < 3; ++b) CHECK(e.value(b) == (h.product(1, b) ^ h.product(b, 1)));
    std::vector<HCochain> xs{x, x};
    CHECK(brace(h, mu, xs) == HCochain::element(h, h.product(1, 1)));
}

TEST_CASE("Hochschild cohomology of F2[x]/(x^2)")
{
    HochschildComplex c(GradedAlgebra(truncated_polynomial(2)));
    CHECK(c.cohomology(0, 0).dimension() == 2);
    CHECK(c.cohomology(1, 0).dimension() == 2);
    const auto& g = c.cohomology(2, 0);
    CHECK(g.dimension() == g.quotient.cycle_rank() - g.quotient.boundary_rank());
    // A coboundary lifts and reduces to zero.
    std::mt19937_64 rng(1);
    auto f = CochainSpace(c.algebra(), 1, 0).random(rng);
    auto z = delta(c.algebra(), f);
    CHECK(g.is_coboundary(z));
    auto l = g.lift(z);
    REQUIRE(l.solvable());
    CHECK(delta(c.algebra(), g.previous.from_vector(*l.particular)) == z);
    CHECK(g.reduce(z).is_zero());
    for (const auto& r : g.class_basis()) CHECK(delta(c.algebra(), r).is_zero());
}
