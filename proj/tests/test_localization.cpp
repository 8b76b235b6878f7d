#include <doctest.h>

#include "fixtures.hpp"
#include "laxepi/error.hpp"
#include "laxepi/localization.hpp"

using namespace fixtures;

namespace {

TorsionData t2_e11() { return ideal_closure(t2(), {{0, 0, vec({1, 0, 0})}}); }

}  // namespace

TEST_CASE("ideal closure") {
    TorsionData t = t2_e11();
    // <e11> = span{e11, e12}.
    CHECK(t.at(0, 0).dim() == 2);
    CHECK(t.at(0, 0).contains(vec({0, 1, 0})));
    CHECK_FALSE(t.degenerate());
    CHECK_FALSE(t.trivial());
    CHECK(whole_ideal(t2()).trivial());
    CHECK(zero_ideal(t2()).degenerate());
    CHECK(ideal_closure(t2(), {{0, 0, vec({1, 0, 1})}}).trivial());
}

TEST_CASE("non-idempotent ideals are rejected") {
    try {
        ideal_closure(trunc3(), {{0, 0, vec({0, 1, 0})}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IdealNotIdempotent);
    }
    // <e12> squares to zero.
    CHECK_THROWS_AS(ideal_closure(t2(), {{0, 0, vec({0, 1, 0})}}), Error);
    CHECK_THROWS_AS(ideal_from_subspaces(t2(), {Subspace::span({vec({0, 1, 0})}, 3)}), Error);
}

TEST_CASE("torsion in T2") {
    TorsionData t = t2_e11();
    Module y = yoneda(t2(), 0);
    Submodule tor = torsion_submodule(t, y);
    CHECK(tor.parts[0].dim() == 2);
    CHECK(tor.parts[0].contains(vec({0, 1, 0})));
    CHECK(tor.parts[0].contains(vec({0, 0, 1})));
    CHECK_FALSE(is_torsion(t, y));
    CHECK_FALSE(is_torsion_free(t, y));

    RadicalData rd = radical_and_simples(t2());
    std::size_t torsion_simples = 0;
    for (const auto& s : rd.simples) torsion_simples += is_torsion(t, s) ? 1 : 0;
    CHECK(torsion_simples == 1);
}

TEST_CASE("closed modules and localization in T2") {
    TorsionData t = t2_e11();
    Module y = yoneda(t2(), 0);
    ClosedTest ct = is_closed(t, y);
    CHECK_FALSE(ct.closed);

    Localization l = localize(t, y);
    CHECK(l.closed.module.total_dim() == 1);
    CHECK(is_closed(t, l.closed.module).closed);
    CHECK(is_torsion(t, kernel(l.unit).module));
    CHECK(is_torsion(t, cokernel(l.unit).module));
    CHECK(q_iso(t, l.unit));

    // e11 T2 = span{e11, e12} contains the torsion element e12.
    Submodule e11t2 = generated_submodule(y, {{0, vec({1, 0, 0})}});
    Module p = sub_to_module(e11t2).module;
    CHECK(p.total_dim() == 2);
    CHECK_FALSE(is_closed(t, p).closed);
    CHECK(filter_membership(t, e11t2));

    Localization again = localize(t, l.closed.module);
    CHECK(again.unit.is_iso());
}

TEST_CASE("localization is functorial") {
    TorsionData t = t2_e11();
    Module y = yoneda(t2(), 0);
    Localization ly = localize(t, y);
    CHECK(localize_map(ly, ly, ModuleMap::identity(y)).is_iso());
    Module s = radical_and_simples(t2()).simples.front();
    Localization ls = localize(t, s);
    HomSpace h(y, s);
    for (const auto& f : h.basis()) {
        ModuleMap g = localize_map(ly, ls, f);
        CHECK(g * ly.unit == ls.unit * f);
    }
    CHECK(quotient_hom(t, y, y).dim() == 1);
}

TEST_CASE("trivial and degenerate torsion") {
    for (const auto& x : {yoneda(t2(), 0), injective_module(t2(), 0)}) {
        Localization a = localize(whole_ideal(t2()), x);
        CHECK(a.unit.is_iso());
        Localization b = localize(zero_ideal(t2()), x);
        CHECK(b.closed.module.is_zero());
        CHECK(is_torsion(zero_ideal(t2()), x));
    }
}

TEST_CASE("vertex ideal on A2") {
    LinearCategory c = a2().category;
    TorsionData t = ideal_closure(c, {c.identity_morphism(0)});
    CHECK(t.at(0, 1).dim() == 1);
    CHECK(t.at(1, 1).dim() == 0);
    Module s2 = a2_rep(c, 0, 1, Matrix(0, 1));
    Module s1 = a2_rep(c, 1, 0, Matrix(1, 0));
    CHECK(is_torsion(t, s2));
    CHECK_FALSE(is_torsion(t, s1));
    // Closed means X(a) is invertible.
    CHECK_FALSE(is_closed(t, s1).closed);
    CHECK(is_closed(t, yoneda(c, 1)).closed);
    CHECK(localize(t, s1).closed.module.dims() == std::vector<std::size_t>{1, 1});
    CHECK(localize(t, s2).closed.module.is_zero());
}

TEST_CASE("filters and preimages") {
    TorsionData t = t2_e11();
    Module y = yoneda(t2(), 0);
    Submodule tor = torsion_submodule(t, y);
    CHECK_FALSE(filter_membership(t, tor));
    CHECK(filter_membership(t, Submodule::full(y)));
    // (tor : e11) = {f : e11 f in tor}.
    Submodule pre = preimage_submodule(tor, {0, 0, vec({1, 0, 0})});
    CHECK(contains(pre, tor));
    Submodule whole = preimage_submodule(tor, {0, 0, vec({0, 1, 0})});
    CHECK(whole == Submodule::full(y));
}
