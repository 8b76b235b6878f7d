#include <doctest.h>

#include "fixtures.hpp"
#include "laxepi/error.hpp"
#include "laxepi/functor.hpp"

using namespace fixtures;

namespace {

std::vector<Module> representables(const LinearCategory& c) {
    std::vector<Module> out;
    for (std::size_t u = 0; u < c.size(); ++u) out.push_back(yoneda(c, u));
    return out;
}

std::vector<Module> samples(const LinearCategory& c) {
    std::vector<Module> out = representables(c);
    for (std::size_t u = 0; u < c.size(); ++u) out.push_back(injective_module(c, u));
    for (const auto& s : radical_and_simples(c).simples) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("functor validation") {
    CHECK(validate_functor(diagonal()).ok());
    CHECK(validate_functor(t2_to_qxq()).ok());
    CHECK(validate_functor(p_into_p2()).ok());
    CHECK(validate_functor(unit_of_t2()).ok());
    CHECK_FALSE(validate_functor(LinearFunctor(field(), qxq(), {0}, {mat(2, 1, {1, 0})})).ok());
    // e12 ↦ e1 breaks e12 * e12 = 0 -> e1 * e1 = e1.
    CHECK_FALSE(validate_functor(LinearFunctor(t2(), qxq(), {0}, {mat(2, 3, {1, 1, 0, 0, 0, 1})})).ok());
    CHECK_THROWS_AS(LinearFunctor(field(), qxq(), {0}, {mat(3, 1, {1, 1, 0})}), Error);
    CHECK_THROWS_AS(LinearFunctor(field(), qxq(), {1}, {mat(2, 1, {1, 1})}), Error);
}

TEST_CASE("composition and identity") {
    LinearFunctor d = compose_functors(t2_to_qxq(), unit_of_t2());
    CHECK(d.hom_map(0, 0) == diagonal().hom_map(0, 0));
    LinearFunctor id = identity_functor(t2());
    CHECK(compose_functors(id, unit_of_t2()).hom_map(0, 0) == unit_of_t2().hom_map(0, 0));
    CHECK(id.bijective_on_objects());
    CHECK_THROWS_AS(compose_functors(unit_of_t2(), diagonal()), Error);
}

TEST_CASE("restriction") {
    Module y = yoneda(qxq(), 0);
    Module r = restrict(diagonal(), y);
    CHECK(r.total_dim() == 2);
    CHECK(restrict(t2_to_qxq(), y).total_dim() == 2);
    CHECK(restrict(p_into_p2(), yoneda(p_and_p2(), 1)).total_dim() == 2);
    ModuleMap id = ModuleMap::identity(y);
    CHECK(restrict_map(diagonal(), id) == ModuleMap::identity(r));
}

TEST_CASE("induction along the diagonal") {
    Induced ind = induce(diagonal(), yoneda(field(), 0));
    CHECK(ind.module.total_dim() == 2);
    CHECK(find_isomorphism(ind.module, yoneda(qxq(), 0)).has_value());
    CHECK(validate_map(ind.unit).ok());

    ModuleMap e = counit(diagonal(), yoneda(qxq(), 0));
    CHECK(e.source().total_dim() == 4);
    CHECK(e.target().total_dim() == 2);
    CHECK(e.is_epi());
    CHECK(kernel(e).module.total_dim() == 2);
}

TEST_CASE("coinduction") {
    Coinduced c = coinduce(diagonal(), yoneda(field(), 0));
    CHECK(c.module.total_dim() == 2);
    Coinduced d = coinduce(t2_to_qxq(), radical_and_simples(t2()).simples.front());
    CHECK(validate_module(d.module).ok());
}

TEST_CASE("tensor with the regular bimodule") {
    LinearFunctor id = identity_functor(t2());
    Bimodule b = regular_bimodule(id);
    CHECK(validate_bimodule(b).ok());
    CHECK(validate_bimodule(restriction_bimodule(t2_to_qxq())).ok());
    CHECK(validate_bimodule(regular_bimodule(p_into_p2())).ok());
    for (const auto& x : samples(t2())) {
        Module t = tensor_bimodule(x, b).module;
        CHECK(find_isomorphism(t, x).has_value());
        CHECK(tor1(x, b).is_zero());
    }
}

TEST_CASE("hom out of a bimodule") {
    for (const auto& s : {diagonal(), t2_to_qxq(), p_into_p2()}) {
        Bimodule b = regular_bimodule(s);
        for (const auto& a : samples(s.target()))
            CHECK(bimodule_hom(b, a).dims() == restrict(s, a).dims());
    }
}

TEST_CASE("tor1 detects the square-zero kernel") {
    Bimodule b = regular_bimodule(t2_to_qxq());
    std::size_t total = 0;
    for (const auto& s : radical_and_simples(t2()).simples) total += tor1(s, b).total_dim();
    CHECK(total == 1);
    CHECK(tor1(yoneda(t2(), 0), b).is_zero());
}

TEST_CASE("adjunctions") {
    for (const auto& s : {diagonal(), t2_to_qxq(), p_into_p2(), unit_of_t2()}) {
        AdjunctionReport r = adjunction_check(s, samples(s.source()), samples(s.target()));
        CHECK(r.samples > 0);
        for (const auto& f : r.failures) FAIL_CHECK(f);
    }
}

TEST_CASE("summand inclusion has invertible counits") {
    for (std::size_t v = 0; v < 2; ++v) CHECK(counit(p_into_p2(), yoneda(p_and_p2(), v)).is_iso());
    CHECK_FALSE(counit(unit_of_t2(), yoneda(t2(), 0)).is_iso());
}
