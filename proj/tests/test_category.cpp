#include "doctest.h"

#include "fixtures.hpp"
#include "laxepi/error.hpp"

using namespace laxepi;
using namespace fixtures;

TEST_CASE("field and a broken identity") {
    CHECK(validate_category(field()).ok());
    auto bad = from_algebra({"1"}, {vec({2})}, vec({1}));
    auto rep = validate_category(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().find("identity") != std::string::npos);
}

TEST_CASE("A2 path category") {
    auto q = a2();
    const auto& c = q.category;
    CHECK(validate_category(c).ok());
    CHECK(c.hom_dim(0, 0) == 1);
    CHECK(c.hom_dim(1, 1) == 1);
    CHECK(c.hom_dim(0, 1) == 1);
    CHECK(c.hom_dim(1, 0) == 0);
    CHECK(c.total_dim() == t2().total_dim());
    CHECK(c.labels(0, 1)[0] == "a");
}

TEST_CASE("composition") {
    auto c = t2();
    Morphism e11 = c.basis_morphism(0, 0, 0), e12 = c.basis_morphism(0, 0, 1);
    CHECK(compose(c, e11, e12).coords == vec({0, 1, 0}));
    CHECK(compose(c, c.identity_morphism(0), e12).coords == e12.coords);
    Morphism zero{0, 0, vec({0, 0, 0})};
    CHECK(is_zero(compose(c, zero, e12).coords));

    auto q = a2();
    Morphism a = q.category.basis_morphism(0, 1, 0);
    CHECK_THROWS_AS(compose(q.category, a, a), Error);
}

TEST_CASE("opposite") {
    auto q = a2();
    auto op = opposite(q.category);
    CHECK(validate_category(op).ok());
    CHECK(op.hom_dim(1, 0) == 1);
    CHECK(op.hom_dim(0, 1) == 0);
    CHECK(opposite(op) == q.category);
    auto t = t2();
    CHECK(validate_category(opposite(t)).ok());
    CHECK(opposite(opposite(t)) == t);
    // Commutative algebra: the opposite presentation is literally the same.
    CHECK(opposite(trunc3()) == trunc3());
}

TEST_CASE("quivers") {
    Quiver loop;
    loop.vertices = {"1"};
    loop.arrows = {{"x", 0, 0}};
    loop.nilpotency = 3;
    auto c = from_quiver(loop).category;
    CHECK(validate_category(c).ok());
    CHECK(c.hom_dim(0, 0) == 3);

    // Commutative square: relation b*a - d*c.
    Quiver sq;
    sq.vertices = {"1", "2", "3", "4"};
    sq.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    sq.nilpotency = 3;
    sq.relations = {{{{Rational(1), {0, 1}}, {Rational(-1), {2, 3}}}}};
    auto s = from_quiver(sq);
    CHECK(validate_category(s.category).ok());
    CHECK(s.category.hom_dim(0, 3) == 1);

    Quiver collapse = loop;
    collapse.relations = {{{{Rational(1), {0}}}}};
    auto x = from_quiver(collapse).category;
    CHECK(x.hom_dim(0, 0) == 1);

    Quiver bad;
    bad.vertices = {"1"};
    bad.arrows = {{"x", 0, 0}};
    bad.nilpotency = 0;
    CHECK_THROWS_AS(from_quiver(bad), Error);
}

TEST_CASE("matrix categories and discrete categories") {
    auto v = p_and_p2();
    CHECK(validate_category(v).ok());
    CHECK(v.hom_dim(0, 1) == 2);
    CHECK(v.hom_dim(1, 1) == 4);
    auto d = discrete_category({"a", "b", "c"});
    CHECK(validate_category(d).ok());
    CHECK(d.total_dim() == 3);
    CHECK_THROWS_AS(LinearCategory::from_structure({"a", "a"}, std::vector<std::vector<std::string>>(4),
                                                   std::vector<Matrix>(8), {Vector{}, Vector{}}),
                    Error);
}
