#pragma once
// Small hand-built categories shared by the unit tests.

#include "laxepi/category.hpp"
#include "laxepi/functor.hpp"
#include "laxepi/module.hpp"

namespace fixtures {

using namespace laxepi;

inline Vector vec(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

inline Matrix mat(std::size_t r, std::size_t c, std::initializer_list<int> xs) {
    std::vector<Rational> e;
    for (int x : xs) e.emplace_back(x);
    return Matrix(r, c, std::move(e));
}

inline LinearCategory field() { return from_algebra({"1"}, {vec({1})}, vec({1})); }

// Upper triangular 2x2 matrices, basis e11, e12, e22.
inline LinearCategory t2() {
    std::vector<Vector> p = {
        vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 0}),  // e11*
        vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 1, 0}),  // e12*
        vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 0, 1}),  // e22*
    };
    return from_algebra({"e11", "e12", "e22"}, p, vec({1, 0, 1}));
}

// Q x Q with basis e1, e2.
inline LinearCategory qxq() {
    std::vector<Vector> p = {vec({1, 0}), vec({0, 0}), vec({0, 0}), vec({0, 1})};
    return from_algebra({"e1", "e2"}, p, vec({1, 1}));
}

// Q[x]/x^3 with basis 1, x, x^2.
inline LinearCategory trunc3() {
    std::vector<Vector> p = {
        vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}),
        vec({0, 1, 0}), vec({0, 0, 1}), vec({0, 0, 0}),
        vec({0, 0, 1}), vec({0, 0, 0}), vec({0, 0, 0}),
    };
    return from_algebra({"1", "x", "x2"}, p, vec({1, 0, 0}));
}

inline QuiverCategory a2() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return from_quiver(q);
}

// {P, P+P} as matrices: Hom(m, n) = n x m matrices.
inline LinearCategory p_and_p2() {
    auto units = [](std::size_t r, std::size_t c) {
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Matrix m(r, c);
                m(i, j) = 1;
                out.push_back(m);
            }
        return out;
    };
    return from_matrix_spaces({"P", "P2"}, {1, 2},
                              {units(1, 1), units(2, 1), units(1, 2), units(2, 2)});
}

// Representation of A2 with given dims; `a` is the matrix X(a): X(2) -> X(1).
inline Module a2_rep(const LinearCategory& c, std::size_t d1, std::size_t d2, const Matrix& a) {
    std::vector<std::vector<Matrix>> action(4);
    action[0] = {Matrix::identity(d1)};
    action[1] = {a};
    action[3] = {Matrix::identity(d2)};
    return Module::from_action(c, {d1, d2}, std::move(action));
}

// Q -> Q x Q, 1 ↦ e1 + e2.
inline LinearFunctor diagonal() { return LinearFunctor(field(), qxq(), {0}, {mat(2, 1, {1, 1})}); }

// T2 -> Q x Q killing e12.
inline LinearFunctor t2_to_qxq() { return LinearFunctor(t2(), qxq(), {0}, {mat(2, 3, {1, 0, 0, 0, 0, 1})}); }

// {P} -> {P, P+P}.
inline LinearFunctor p_into_p2() { return LinearFunctor(field(), p_and_p2(), {0}, {mat(1, 1, {1})}); }

// Q -> T2 through the unit.
inline LinearFunctor unit_of_t2() { return LinearFunctor(field(), t2(), {0}, {mat(3, 1, {1, 0, 1})}); }

// Upper triangular 3x3 matrices as a one-object matrix category.
inline LinearCategory t3() {
    std::vector<Matrix> units;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            Matrix m(3, 3);
            m(i, j) = 1;
            units.push_back(m);
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return from_matrix_spaces({"*"}, {3}, {units}, {labels});
}

// End(Λ ⊕ Λ/rad) for Λ = Q[x]/x^2: p: L -> S, i: S -> L, p∘i = 0, i∘p = x.
inline QuiverCategory auslander() {
    Quiver q;
    q.vertices = {"L", "S"};
    q.arrows = {{"p", 0, 1}, {"i", 1, 0}};
    q.relations = {{{{Rational(1), Path{1, 0}}}}};
    q.nilpotency = 3;
    return from_quiver(q);
}

// T2 -> Q, e11 ↦ 1: the bimodule whose restriction is M ↦ M e11.
inline Bimodule corner_bimodule() {
    Module y = yoneda(field(), 0);
    ModuleMap one(y, y, {mat(1, 1, {1})});
    return Bimodule{t2(), field(), {y}, {{one, ModuleMap::zero(y, y), ModuleMap::zero(y, y)}}};
}

}  // namespace fixtures
