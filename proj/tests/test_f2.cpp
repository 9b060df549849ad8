#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hgt/f2.hpp"

using namespace hgt;

namespace {
F2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) m.set(i, j);
    return m;
}
F2Vector random_vector(std::mt19937_64& rng, std::size_t n)
{
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i);
    return v;
}
}  // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(F2Matrix::identity(3)) == 3);
    CHECK(rank(F2Matrix(4, 2)) == 0);
    CHECK(rank(F2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("solve examples")
{
    auto b = F2Vector::from_bits({1, 0, 1});
    auto s = solve(F2Matrix::identity(3), b);
    REQUIRE(s.solvable());
    CHECK(*s.particular == b);
    CHECK(s.kernel_basis.empty());

    auto z = solve(F2Matrix(2, 2), F2Vector(2));
    REQUIRE(z.solvable());
    CHECK(z.particular->is_zero());
    CHECK(z.kernel_basis.size() == 2);

    auto one = solve(F2Matrix::from_rows({{1, 1}}), F2Vector::from_bits({1}));
    REQUIRE(one.solvable());
    CHECK(*one.particular == F2Vector::from_bits({1, 0}));
    REQUIRE(one.kernel_basis.size() == 1);
    CHECK(one.kernel_basis[0] == F2Vector::from_bits({1, 1}));

    CHECK(!solve(F2Matrix(2, 2), F2Vector::from_bits({0, 1})).solvable());
    CHECK_THROWS_AS(solve(F2Matrix(2, 2), F2Vector(3)), std::invalid_argument);
}

TEST_CASE("quotient examples")
{
    std::vector<F2Vector> c{F2Vector::from_bits({1, 0, 0}), F2Vector::from_bits({0, 1, 0}),
                            F2Vector::from_bits({0, 0, 1})};
    CHECK(QuotientSpace(3, c, c).dimension() == 0);
    CHECK(QuotientSpace(3, c, {}).dimension() == 3);
    std::vector<F2Vector> b{F2Vector::from_bits({1, 1, 0})};
    QuotientSpace q(3, c, b);
    CHECK(q.dimension() == 2);
    std::vector<F2Vector> bad{F2Vector::from_bits({0, 0, 1})};
    CHECK_THROWS_AS(QuotientSpace(3, std::vector<F2Vector>{c[0]}, bad), InconsistentComplex);
}

TEST_CASE("random linear algebra properties")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 70, c = 1 + rng() % 70;
        auto m = random_matrix(rng, r, c);
        CHECK(rank(m) == rank(m.transpose()));
        auto b = random_vector(rng, r);
        auto s = solve(m, b);
        if (s.solvable()) CHECK(m.apply(*s.particular) == b);
        for (const auto& k : s.kernel_basis) CHECK(m.apply(k).is_zero());
        CHECK(s.kernel_basis.size() + rank(m) == c);
        // Image vectors are always solvable.
        auto x = random_vector(rng, c);
        CHECK(solve(m, m.apply(x)).solvable());
    }
}

TEST_CASE("quotient reduce is canonical")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        std::vector<F2Vector> cycles, bounds;
        for (std::size_t i = 0; i < 1 + rng() % n; ++i) cycles.push_back(random_vector(rng, n));
        for (std::size_t i = 0; i < rng() % (cycles.size() + 1); ++i) {
            F2Vector v(n);
            for (const auto& z : cycles)
                if (rng() & 1) v ^= z;
            bounds.push_back(v);
        }
        QuotientSpace q(n, cycles, bounds);
        CHECK(q.dimension() + rank(std::span<const F2Vector>(bounds)) == rank(std::span<const F2Vector>(cycles)));
        for (const auto& z : cycles) {
            auto r = q.reduce(z);
            CHECK(q.reduce(r) == r);
            for (const auto& b : bounds) CHECK(q.reduce(z + b) == r);
            CHECK(q.representative(q.coordinates(z)) == r);
        }
    }
}
