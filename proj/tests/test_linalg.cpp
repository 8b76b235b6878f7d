#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "laxepi/error.hpp"
#include "laxepi/linalg.hpp"

using namespace laxepi;
using fixtures::mat;
using fixtures::vec;

TEST_CASE("rationals parse to canonical form") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rref") {
    auto r = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(r.rank() == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto p = rref(mat(2, 2, {0, 1, 1, 0}));
    CHECK(p.reduced == Matrix::identity(2));
    CHECK(p.pivots == std::vector<std::size_t>{0, 1});

    auto empty = rref(Matrix(0, 3));
    CHECK(empty.rank() == 0);
}

TEST_CASE("solve") {
    auto x = solve(Matrix::identity(2), vec({3, 5}));
    REQUIRE(x);
    CHECK(*x == vec({3, 5}));

    auto y = solve(mat(1, 2, {1, 1}), vec({2}));
    REQUIRE(y);
    CHECK(*y == vec({2, 0}));

    CHECK_FALSE(solve(mat(2, 1, {1, 1}), vec({0, 1})));
    CHECK_THROWS_AS(solve(Matrix::identity(2), vec({1})), Error);
}

TEST_CASE("subspaces") {
    Subspace k = kernel_basis(mat(1, 2, {1, 1}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec({1, -1})));

    Subspace x = Subspace::span({vec({1, 0})}, 2);
    Subspace y = Subspace::span({vec({0, 1})}, 2);
    CHECK(intersect(x, y).is_zero());
    CHECK(sum(x, y).is_full());
    CHECK_THROWS_AS(sum(x, Subspace(3)), Error);

    // Two spanning sets of one plane give identical values.
    Subspace a = Subspace::span({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
    Subspace b = Subspace::span({vec({1, 2, 1}), vec({1, 0, -1}), vec({2, 2, 0})}, 3);
    CHECK(a == b);

    CHECK(kronecker(Matrix::identity(2), mat(1, 1, {2})) == mat(2, 2, {2, 0, 0, 2}));
    CHECK(is_iso(Matrix::identity(2)));
    CHECK_FALSE(is_iso(mat(1, 2, {1, 0})));
    CHECK_FALSE(is_iso(mat(2, 2, {1, 2, 2, 4})));
}

TEST_CASE("quotients and preimages") {
    Subspace s = Subspace::span({vec({1, 1, 0})}, 3);
    Matrix q = s.quotient_map();
    CHECK(q.rows() == 2);
    CHECK(is_zero(q * vec({1, 1, 0})));
    CHECK(q * s.quotient_section() == Matrix::identity(2));
    CHECK(s.coordinates(vec({2, 2, 0})) == vec({2}));

    Matrix proj = mat(1, 2, {1, 0});
    Subspace pre = preimage(proj, Subspace(1));
    CHECK(pre == Subspace::span({vec({0, 1})}, 2));
    CHECK(image_of(proj, Subspace::full(2)).is_full());
}

TEST_CASE("empty operands") {
    Matrix z(0, 0);
    CHECK(rank(z) == 0);
    CHECK(is_iso(z));
    CHECK(kernel_basis(Matrix(0, 2)).is_full());
    CHECK(image_basis(Matrix(2, 0)).is_zero());
    auto x = solve(Matrix(0, 2), Vector{});
    REQUIRE(x);
    CHECK(x->size() == 2);
}

TEST_CASE("random matrices: rank-nullity, rref idempotence, exact solve") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dim(0, 8), entry(-4, 4), den(1, 3);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3) {
                    a(i, j) = Rational(entry(rng), den(rng));
                    a(i, j).canonicalize();
                }
        auto red = rref(a);
        CHECK(kernel_basis(a).dim() + image_basis(a.transpose()).dim() == c);
        CHECK(rref(red.reduced).reduced == red.reduced);
        Vector x(c);
        for (auto& q : x) q = entry(rng);
        Vector b = a * x;
        auto sol = solve(a, b);
        REQUIRE(sol);
        CHECK(a * *sol == b);
    }
}
