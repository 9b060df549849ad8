#include "doctest.h"

#include <random>

#include "hgt/algebras.hpp"
#include "hgt/twist.hpp"

using namespace hgt;

namespace {
std::vector<TwistCarrier> carriers()
{
    std::vector<TwistCarrier> out;
    out.emplace_back(GradedAlgebra(truncated_polynomial(2)), Grading::t_adic);
    out.emplace_back(GradedAlgebra(truncated_polynomial(3)), Grading::t_adic);
    out.emplace_back(GradedAlgebra(upper_triangular()), Grading::t_adic);
    out.emplace_back(GradedAlgebra(truncated_polynomial(2, 1)), Grading::internal);
    out.emplace_back(GradedAlgebra(truncated_polynomial(2, 1)), Grading::t_adic);
    return out;
}
}  // namespace

TEST_CASE("zero and identity")
{
    for (auto& c : carriers()) {
        CHECK(check_v2(c, zero_twist(4)).ok);
        std::mt19937_64 rng(1);
        auto b = random_twist(c, 4, rng);
        REQUIRE(b);
        CHECK(check_v2(c, *b).ok);
        CHECK(act_v2(c, identity_gauge(4), *b).b == b->b);
        CHECK(triviality_reduce(c, zero_twist(3)).verdict == Verdict::success);
    }
}

TEST_CASE("action closure and group laws")
{
    std::mt19937_64 rng(7);
    for (auto& c : carriers()) {
        for (int i = 0; i < 10; ++i) {
            auto b = random_twist(c, 4, rng);
            REQUIRE(b);
            const auto g = random_gauge(c, 4, rng), gbar = random_gauge(c, 4, rng), k = random_gauge(c, 4, rng);
            const auto gb = act_v2(c, g, *b);
            CHECK(check_v2(c, gb).ok);
            CHECK(act_v2(c, gauge_mul(c, gbar, g), *b).b == act_v2(c, gbar, gb).b);
            CHECK(gauge_mul(c, gauge_mul(c, gbar, g), k).g == gauge_mul(c, gbar, gauge_mul(c, g, k)).g);
            const auto inv = gauge_inverse(c, g);
            CHECK(gauge_mul(c, g, inv).g == identity_gauge(4).g);
            CHECK(gauge_mul(c, inv, g).g == identity_gauge(4).g);
            CHECK(gauge_inverse(c, inv).g == g.g);
            CHECK(act_v2(c, inv, gb).b == b->b);
            // the class of the first component is invariant
            const auto bd = c.twist_bidegree(1);
            const auto& h1 = c.complex().cohomology(bd.first, bd.second);
            CHECK(h1.class_of(gb.b[0]) == h1.class_of(b->b[0]));
        }
    }
}

TEST_CASE("low weight expansions")
{
    std::mt19937_64 rng(3);
    for (auto& c : carriers()) {
        const auto& h = c.algebra();
        auto b = *random_twist(c, 3, rng);
        const auto g = random_gauge(c, 3, rng), gbar = random_gauge(c, 3, rng);
        const auto prod = gauge_mul(c, gbar, g);
        CHECK(prod.g[0] == gbar.g[0] + g.g[0]);
        CHECK(prod.g[1] == gbar.g[1] + g.g[1] + cup1(h, gbar.g[0], g.g[0]));
        const auto m = act_v2(c, g, b);
        CHECK(m.b[0] == b.b[0] + delta(h, g.g[0]));
        CHECK(m.b[1] == b.b[1] + delta(h, g.g[1]) + cup(h, g.g[0], g.g[0]) + cup1(h, g.g[0], b.b[0]) +
                            cup1(h, m.b[0], g.g[0]));
        const HCochain gg[2] = {g.g[0], g.g[0]};
        CHECK(m.b[2] == b.b[2] + delta(h, g.g[2]) + cup(h, g.g[0], g.g[1]) + cup(h, g.g[1], g.g[0]) +
                            cup1(h, g.g[0], b.b[1]) + cup1(h, g.g[1], b.b[0]) + cup1(h, m.b[0], g.g[1]) +
                            cup1(h, m.b[1], g.g[0]) + brace(h, m.b[0], gg));
    }
}

TEST_CASE("perturbation")
{
    std::mt19937_64 rng(11);
    for (auto& c : carriers()) {
        auto b = *random_twist(c, 5, rng);
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto bd = c.gauge_bidegree(n);
            const auto gn = c.complex().space(bd.first, bd.second).random(rng);
            const auto p = perturb(c, b, n, gn);
            for (std::size_t w = 1; w < n; ++w) CHECK(p.b[w - 1] == b.b[w - 1]);
            CHECK(p.b[n - 1] == b.b[n - 1] + delta(c.algebra(), gn));
            CHECK(check_v2(c, p).ok);
            CHECK(perturb(c, b, n, HCochain()).b == b.b);
        }
    }
}

TEST_CASE("version 1 indexing")
{
    TwistCarrier c(GradedAlgebra(truncated_polynomial(2, 1)), Grading::internal);
    std::mt19937_64 rng(5);
    auto b = *random_twist(c, 4, rng);
    const auto m = regrade_v1(b);
    CHECK(m.T == 6);
    CHECK(m.m[0].arity() + 0 == (m.m[0].is_zero() ? m.m[0].arity() : 3));
    CHECK(regrade(m).b == b.b);
    CHECK(check_v1(c, m).ok);
    const auto g = regrade_v1(random_gauge(c, 5, rng));
    CHECK(g.T == 6);
    CHECK(check_v1(c, act_v1(c, g, m)).ok);
    CHECK(act_v1(c, g, m).m == act_v2(c, regrade(g), b).b);
}

TEST_CASE("failures and obstructions")
{
    TwistCarrier c(GradedAlgebra(truncated_polynomial(2)), Grading::t_adic);
    const auto& h = c.algebra();
    // a 2-cochain that is not a cocycle fails at weight 1
    const std::uint8_t t[2] = {1, 1};
    auto b = zero_twist(2);
    b.b[0] = HCochain::elementary(h, t, 0);
    if (!delta(h, b.b[0]).is_zero()) {
        const auto r = check_v2(c, b);
        CHECK_FALSE(r.ok);
        CHECK(*r.failing == 1);
    }
    // wrong bidegree is rejected
    auto bad = zero_twist(1);
    bad.b[0] = HCochain::identity(h);
    CHECK_THROWS_AS(check_v2(c, bad), PreconditionError);
    // quantizing 0 gives 0
    const auto& h21 = c.complex().cohomology(2, 0);
    const auto q = quantize(c, F2Vector(h21.dimension()), 4);
    CHECK(q.verdict == Verdict::success);
    CHECK(check_v2(c, q.twist).ok);
    // a nonzero class in HH^2 is an obstruction to triviality at weight 1
    if (h21.dimension() > 0) {
        auto nb = zero_twist(1);
        nb.b[0] = h21.class_basis()[0];
        const auto t1 = triviality_reduce(c, nb);
        CHECK(t1.verdict == Verdict::obstructed);
        REQUIRE(t1.blocking);
        CHECK(t1.blocking->weight == 1);
    }
}

TEST_CASE("searches succeed on orbits and respect the budget")
{
    std::mt19937_64 rng(13);
    for (auto& c : carriers()) {
        for (int i = 0; i < 5; ++i) {
            const auto g = random_gauge(c, 4, rng);
            const auto b = act_v2(c, g, zero_twist(4));
            const auto r = triviality_reduce(c, b);
            CHECK(r.verdict == Verdict::success);
            CHECK(act_v2(c, r.gauge, b).b == zero_twist(4).b);
            auto x = *random_twist(c, 4, rng);
            const auto y = act_v2(c, random_gauge(c, 4, rng), x);
            const auto e = equivalence(c, x, y);
            CHECK(e.verdict == Verdict::success);
        }
        const auto bd = c.twist_bidegree(1);
        const auto dim = c.complex().cohomology(bd.first, bd.second).dimension();
        const auto q = quantize(c, F2Vector(dim), 4, 0);
        CHECK(q.verdict == Verdict::inconclusive);
    }
}

TEST_CASE("quantize backtracks past blocked lifts")
{
    const auto a = algebra_from_products({{"1", 0}, {"x", 0}, {"y", 1}, {"xy", 1}}, "1",
                                         {{"x", "y", {"xy"}}, {"y", "x", {"xy"}}});
    TwistCarrier c(GradedAlgebra(a), Grading::internal);
    const auto q = quantize(c, F2Vector::from_bits({0, 0, 1, 1}), 4);
    CHECK(q.verdict == Verdict::success);
    CHECK(q.backtracks > 0);
    REQUIRE(q.blocking);
    CHECK(q.blocking->weight == 3);
    CHECK(q.blocking->bidegree == Bidegree{6, -3});
    CHECK(check_v2(c, q.twist).ok);
    CHECK(c.complex().cohomology(3, -1).class_of(q.twist.b[0]) == F2Vector::from_bits({0, 0, 1, 1}));
}
