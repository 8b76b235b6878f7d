#include "doctest.h"

#include "fixtures.hpp"
#include "laxepi/error.hpp"

using namespace laxepi;
using namespace fixtures;

TEST_CASE("yoneda modules") {
    auto c = a2().category;
    Module y1 = yoneda(c, 0), y2 = yoneda(c, 1);
    CHECK(y1.dims() == std::vector<std::size_t>{1, 0});
    CHECK(y2.dims() == std::vector<std::size_t>{1, 1});
    CHECK(validate_module(y1).ok());
    CHECK(validate_module(y2).ok());
    CHECK(hom_modules(y1, y2).dim() == 1);
    CHECK(hom_modules(y2, y1).dim() == 0);

    auto t = t2();
    Module reg = yoneda(t, 0);
    CHECK(reg.dim(0) == 3);
    CHECK(validate_module(reg).ok());
}

TEST_CASE("yoneda lemma") {
    auto c = a2().category;
    Module s2 = a2_rep(c, 0, 1, Matrix(0, 1));
    Module x = a2_rep(c, 2, 1, mat(2, 1, {1, 3}));
    for (const Module& m : {s2, x, yoneda(c, 0), yoneda(c, 1)})
        for (std::size_t u = 0; u < 2; ++u) {
            HomSpace h = hom_modules(yoneda(c, u), m);
            CHECK(h.dim() == m.dim(u));
            for (std::size_t k = 0; k < m.dim(u); ++k) {
                Vector v = unit_vector(m.dim(u), k);
                ModuleMap f = yoneda_map(m, u, v);
                CHECK(validate_map(f).ok());
                CHECK(h.contains(f));
                CHECK(yoneda_element(f, u) == v);
            }
        }
    CHECK(hom_modules(x, x).contains(ModuleMap::identity(x)));
}

TEST_CASE("non-modules are reported") {
    auto t = t2();
    // e12 acting nontrivially on a one-dimensional space breaks e12*e12 = 0.
    Module bad = Module::from_action(t, {1}, {{mat(1, 1, {1}), mat(1, 1, {1}), mat(1, 1, {0})}});
    CHECK_FALSE(validate_module(bad).ok());
    CHECK_THROWS_AS(Module::from_action(t, {1}, {{mat(1, 1, {1})}}), Error);
}

TEST_CASE("kernels, cokernels, quotients") {
    auto t = t2();
    Module reg = yoneda(t, 0);
    ModuleMap id = ModuleMap::identity(reg);
    CHECK(kernel(id).module.is_zero());
    Module z = Module::zero(t);
    Cokernel ck = cokernel(ModuleMap::zero(z, reg));
    CHECK(ck.module.dims() == reg.dims());

    // Right ideal span{e12, e22}: v*e11 in it for e12,e22 (e12 e11 = 0, e22 e11 = 0).
    Submodule s = generated_submodule(reg, {{0, vec({0, 1, 0})}, {0, vec({0, 0, 1})}});
    CHECK(s.parts[0].dim() == 2);
    CHECK(is_stable(s));
    Cokernel q = quotient_by(s);
    CHECK(q.module.dim(0) == 1);
    CHECK(validate_module(q.module).ok());
    CHECK(validate_map(q.projection).ok());
    CHECK(image(sub_to_module(s).inclusion) == s);
    CHECK(kernel_submodule(q.projection) == s);
}

TEST_CASE("exactness of image and cokernel") {
    auto c = a2().category;
    Module y2 = yoneda(c, 1);
    Module x = a2_rep(c, 2, 1, mat(2, 1, {1, 0}));
    HomSpace h = hom_modules(y2, x);
    REQUIRE(h.dim() == 1);
    for (const auto& f : h.basis()) {
        Cokernel ck = cokernel(f);
        CHECK(image(f) == kernel_submodule(ck.projection));
        CHECK(validate_module(kernel(f).module).ok());
    }
}

TEST_CASE("direct sums and copairs") {
    auto c = a2().category;
    DirectSum d = direct_sum(c, {yoneda(c, 0), yoneda(c, 1)});
    CHECK(d.module.dims() == std::vector<std::size_t>{2, 1});
    CHECK(validate_module(d.module).ok());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(d.projections[i] * d.injections[i] == ModuleMap::identity(d.summands[i]));
        CHECK(validate_map(d.injections[i]).ok());
    }
    ModuleMap sum = copair(d, d.module, d.injections);
    CHECK(sum == ModuleMap::identity(d.module));
    CHECK(direct_sum(c, {}).module.is_zero());
}

TEST_CASE("free covers and ext1") {
    auto c = a2().category;
    Module s1 = yoneda(c, 0);
    Module s2 = a2_rep(c, 0, 1, Matrix(0, 1));
    FreeCover cov = free_cover(s2);
    CHECK(cov.objects == std::vector<std::size_t>{1});
    CHECK(cov.epi.is_epi());
    CHECK(kernel(cov.epi).module.dims() == std::vector<std::size_t>{1, 0});
    CHECK(free_cover(Module::zero(c)).objects.empty());
    CHECK(free_cover(yoneda(c, 1)).objects.size() == 2);

    CHECK(ext1(s2, s1) == 1);
    CHECK(ext1(s1, s2) == 0);
    CHECK(ext1(yoneda(c, 1), s1) == 0);
    CHECK(ext1(s2, s2) == 0);

    // Redundant cover gives the same answer.
    FreeCover padded = padded_cover(cov, 1, vec({1}));
    CHECK(padded.objects.size() == 2);
    CHECK(ext1_with_cover(padded.epi, s1) == 1);
}

TEST_CASE("projectivity") {
    auto c = a2().category;
    Module s1 = yoneda(c, 0);
    Module s2 = a2_rep(c, 0, 1, Matrix(0, 1));
    auto p = is_projective(yoneda(c, 1));
    CHECK(p.projective);
    REQUIRE(p.section);
    CHECK(is_projective(s1).projective);
    CHECK_FALSE(is_projective(s2).projective);
    CHECK(is_projective(Module::zero(c)).projective);

    // Over T2 the semisimple quotient Q x Q is not projective, but e11 T2 is.
    auto t = t2();
    Module reg = yoneda(t, 0);
    Submodule e12 = generated_submodule(reg, {{0, vec({0, 1, 0})}});
    CHECK_FALSE(is_projective(quotient_by(e12).module).projective);
    Submodule e11t = generated_submodule(reg, {{0, vec({1, 0, 0})}});
    CHECK(e11t.parts[0].dim() == 2);
    CHECK(is_projective(sub_to_module(e11t).module).projective);
}

TEST_CASE("trace spans") {
    auto v = p_and_p2();
    CHECK(trace_span(v, {0}, 1).is_full());
    CHECK(trace_span(v, {1}, 1).contains(v.identity(1)));
    CHECK(trace_span(v, {}, 1).is_zero());
    auto c = a2().category;
    CHECK(trace_span(c, {1}, 0).is_zero());
}

TEST_CASE("radicals and simples") {
    auto r = radical_and_simples(qxq());
    CHECK(r.radical[0].is_zero());
    CHECK(r.simples.size() == 2);

    auto t = radical_and_simples(t2());
    CHECK(t.radical[0] == Subspace::span({vec({0, 1, 0})}, 3));
    // The top of the regular module is semisimple of dimension 2.
    std::size_t total = 0;
    for (const auto& s : t.simples) total += s.total_dim();
    CHECK(total == 2);

    auto p = radical_and_simples(trunc3());
    CHECK(p.radical[0] == Subspace::span({vec({0, 1, 0}), vec({0, 0, 1})}, 3));
    CHECK(p.simples.size() == 1);
    CHECK(p.simples[0].total_dim() == 1);

    auto a = radical_and_simples(a2().category);
    CHECK(a.simples.size() == 2);
    CHECK(a.radical[1].dim() == 1);  // the arrow
}

TEST_CASE("isomorphism search") {
    auto c = a2().category;
    Module x = a2_rep(c, 1, 1, mat(1, 1, {5}));
    CHECK(find_isomorphism(x, yoneda(c, 1)));
    Module split = a2_rep(c, 1, 1, mat(1, 1, {0}));
    CHECK_FALSE(find_isomorphism(split, yoneda(c, 1)));
}
