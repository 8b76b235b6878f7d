#include <doctest.h>

#include <functional>

#include "corner_oracle.hpp"
#include "fixtures.hpp"
#include "laxepi/decide.hpp"
#include "laxepi/error.hpp"

using namespace fixtures;

namespace {

std::vector<Module> samples(const LinearCategory& c) {
    std::vector<Module> out;
    for (std::size_t u = 0; u < c.size(); ++u) {
        out.push_back(yoneda(c, u));
        out.push_back(injective_module(c, u));
    }
    for (const auto& s : radical_and_simples(c).simples) out.push_back(s);
    return out;
}

TorsionData t2_e11() { return ideal_closure(t2(), {{0, 0, vec({1, 0, 0})}}); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Invariant;
}

}  // namespace

TEST_CASE("full faithfulness of restriction") {
    CHECK(fully_faithful_restriction(identity_functor(t2())).verdict);
    CHECK(fully_faithful_restriction(p_into_p2()).verdict);
    RestrictionVerdict d = fully_faithful_restriction(diagonal());
    CHECK_FALSE(d.verdict);
    REQUIRE(d.witness.has_value());
    CHECK(d.counits[0].source_dim == 4);
    CHECK(d.counits[0].target_dim == 2);
    CHECK(d.counits[0].rank == 2);

    for (const auto& t : {identity_functor(t2()), p_into_p2(), diagonal(), unit_of_t2(), t2_to_qxq()})
        CHECK(restriction_hom_oracle(t, samples(t.target())).verdict == fully_faithful_restriction(t).verdict);
}

TEST_CASE("epimorphisms") {
    EpiVerdict id = is_epi(identity_functor(t2()));
    CHECK(id.verdict);
    CHECK(id.agrees);
    EpiVerdict s = is_epi(t2_to_qxq());
    CHECK(s.verdict);
    CHECK(s.agrees);
    EpiVerdict d = is_epi(diagonal());
    CHECK_FALSE(d.verdict);
    CHECK(d.agrees);
    // T2 ⊗_Q T2 has dimension 9.
    EpiVerdict u = is_epi(unit_of_t2());
    CHECK_FALSE(u.verdict);
    CHECK(u.multiplication.pairs[0].tensor_dim == 9);
    CHECK(code_of([] { is_epi(p_into_p2()); }) == ErrorCode::NotSurjectiveOnObjects);
}

TEST_CASE("lax epimorphisms") {
    LaxEpiVerdict p = is_lax_epi(p_into_p2());
    CHECK(p.verdict);
    CHECK(p.s_epi);
    CHECK(p.agrees);
    LaxEpiVerdict d = is_lax_epi(diagonal());
    CHECK_FALSE(d.verdict);
    CHECK_FALSE(d.s_epi);
    CHECK(d.agrees);
    CHECK(is_lax_epi(identity_functor(a2().category)).verdict);

    // The vertex inclusion Q -> A2 at 1 misses the summand at 2.
    LinearFunctor v(field(), a2().category, {0}, {mat(1, 1, {1})});
    LaxEpiVerdict lv = is_lax_epi(v);
    CHECK_FALSE(lv.verdict);
    CHECK(lv.agrees);
}

TEST_CASE("flatness and flat epimorphisms") {
    CHECK(is_flat(identity_functor(t2())).verdict);
    CHECK(is_flat(diagonal()).verdict);
    CHECK(is_flat(unit_of_t2()).verdict);
    CHECK_FALSE(is_flat(t2_to_qxq()).verdict);

    FlatEpiVerdict id = is_flat_epi(identity_functor(t2()));
    CHECK(id.verdict);
    CHECK(id.agrees);
    FlatEpiVerdict s = is_flat_epi(t2_to_qxq());
    CHECK(s.epi);
    CHECK_FALSE(s.flat);
    CHECK_FALSE(s.verdict);
    CHECK(s.agrees);
    FlatEpiVerdict d = is_flat_epi(diagonal());
    CHECK_FALSE(d.epi);
    CHECK(d.flat);
    CHECK_FALSE(d.verdict);
    CHECK(d.agrees);
    CHECK(code_of([] { is_flat_epi(p_into_p2()); }) == ErrorCode::InvalidArgument);

    CHECK(is_flat(unit_of_t2(), t2_e11()).verdict);
    CHECK_FALSE(is_flat(t2_to_qxq(), whole_ideal(qxq())).verdict);
}

TEST_CASE("conditioned epimorphisms with trivial torsion are epimorphisms") {
    for (const auto& s : {identity_functor(t2()), t2_to_qxq(), diagonal(), unit_of_t2()}) {
        TorsionData t = whole_ideal(s.target());
        CondEpiVerdict c = is_conditioned_epi(s, t);
        CHECK(c.verdict == is_epi(s).verdict);
        CHECK(conditioned_epi_oracle(s, t).verdict == c.verdict);
    }
}

TEST_CASE("conditioned epimorphisms on the Auslander category") {
    LinearCategory g = auslander().category;
    CHECK(validate_category(g).ok());
    CHECK(g.total_dim() == 5);
    TorsionData t = ideal_closure(g, {g.identity_morphism(0)});
    for (std::size_t v = 0; v < g.size(); ++v) CHECK(is_closed(t, yoneda(g, v)).closed);

    CondEpiVerdict id = is_conditioned_epi(identity_functor(g), t);
    CHECK(id.verdict);
    CHECK(conditioned_epi_oracle(identity_functor(g), t).verdict);

    // The discrete category on {L, S}.
    LinearCategory d = discrete_category({"L", "S"});
    std::vector<Matrix> maps(4);
    maps[0] = Matrix::column(g.identity(0));
    maps[3] = Matrix::column(g.identity(1));
    maps[1] = Matrix(g.hom_dim(0, 1), 0);
    maps[2] = Matrix(g.hom_dim(1, 0), 0);
    LinearFunctor s(d, g, {0, 1}, maps);
    CHECK(validate_functor(s).ok());
    CondEpiVerdict c = is_conditioned_epi(s, t);
    CHECK(conditioned_epi_oracle(s, t).verdict == c.verdict);
}

TEST_CASE("conditioned epimorphism preconditions") {
    CHECK(code_of([] { is_conditioned_epi(identity_functor(t2()), t2_e11()); }) == ErrorCode::RepresentableNotClosed);
    CHECK(code_of([] { is_conditioned_epi(p_into_p2(), whole_ideal(p_and_p2())); }) ==
          ErrorCode::NotBijectiveOnObjects);
}

TEST_CASE("corner localization") {
    TorsionData t = t2_e11();
    GlaxVerdict g = is_generalized_lax_epi(unit_of_t2(), t);
    CHECK(g.verdict);
    CHECK(g.generation);
    CHECK(g.conditioned);
    CHECK(g.factorization.mid.hom_dim(0, 0) == 1);
    OracleResult o = glax_oracle(unit_of_t2(), t, g);
    CHECK(o.verdict);
    CHECK(o.checked > 0);

    AbelianLocalizationVerdict a = is_abelian_localization(unit_of_t2(), t);
    CHECK(a.verdict);
    CHECK_FALSE(a.filter.empty());
    CHECK(condition_G(unit_of_t2(), t));

    KernelDescriptionReport k = check_kernel_description(unit_of_t2(), t, samples(field()));
    CHECK(k.checked > 0);
    CHECK(k.disagreements.empty());
}

TEST_CASE("quotient homs match the corner algebra") {
    // e11 in T2 and e11 + e33 in T3.
    struct Case {
        LinearCategory a;
        Vector e;
    };
    for (const auto& c : {Case{t2(), vec({1, 0, 0})}, Case{t3(), vec({1, 0, 0, 0, 0, 1})}}) {
        TorsionData t = ideal_closure(c.a, {{0, 0, c.e}});
        std::vector<Vector> eae = corner::corner_basis(c.a, c.e);
        std::vector<Module> xs = samples(c.a);
        for (const auto& x : xs)
            for (const auto& y : xs) {
                std::size_t oracle = corner::corner_hom_dim(corner::restrict_to_corner(x, eae, c.e),
                                                            corner::restrict_to_corner(y, eae, c.e));
                CHECK(quotient_hom(t, x, y).dim() == oracle);
            }
    }
}

TEST_CASE("glax negative controls") {
    GlaxVerdict d = is_generalized_lax_epi(diagonal(), whole_ideal(qxq()));
    CHECK_FALSE(d.verdict);
    CHECK(d.generation);
    CHECK_FALSE(d.conditioned);
    CHECK(is_generalized_lax_epi(identity_functor(t2()), whole_ideal(t2())).verdict);
    AbelianLocalizationVerdict id = is_abelian_localization(identity_functor(t2()), whole_ideal(t2()));
    CHECK(id.verdict);
    // No single basis element generates T2, so only the improper submodule would be a member.
    for (const auto& f : id.filter) CHECK_FALSE(f.member);
    AbelianLocalizationVerdict s = is_abelian_localization(t2_to_qxq(), whole_ideal(qxq()));
    CHECK_FALSE(s.verdict);
    CHECK_FALSE(s.flat.verdict);
}

TEST_CASE("condition F") {
    TorsionData t = t2_e11();
    Factorization f = canonical_factorization_localized(unit_of_t2(), t);
    const Module& tu = f.images[0].closed.module;
    ConditionFVerdict id = condition_F(unit_of_t2(), f, t, 0, 0, ModuleMap::identity(tu));
    CHECK(id.verdict);
    REQUIRE(id.k.size() == 1);
    CHECK(id.k[0].dim() == 1);
    ConditionFVerdict zero = condition_F(unit_of_t2(), f, t, 0, 0, ModuleMap::zero(tu, tu));
    CHECK(zero.verdict);
    Module other = yoneda(t2(), 0);
    CHECK(code_of([&] { condition_F(unit_of_t2(), f, t, 0, 0, ModuleMap::identity(other)); }) ==
          ErrorCode::InvalidQuotientHom);
}

TEST_CASE("Ulmer certificates") {
    LinearFunctor id = identity_functor(field());
    TorsionData t = whole_ideal(field());
    Factorization f = canonical_factorization_localized(id, t);
    UlmerCertificate one{0, {{0, 0, vec({1})}}, {}, {}};
    CHECK(ulmer_certificate_check(id, f, t, one).verdict);

    UlmerCertificate anti{0, {{0, 0, vec({1})}, {0, 0, vec({-1})}}, {0}, {{vec({1}), vec({1})}}};
    UlmerCheck a = ulmer_certificate_check(id, f, t, anti);
    CHECK(a.relations_vanish);
    CHECK(a.exact);

    UlmerCertificate missing{0, {{0, 0, vec({1})}, {0, 0, vec({-1})}}, {}, {}};
    UlmerCheck m = ulmer_certificate_check(id, f, t, missing);
    CHECK_FALSE(m.verdict);
    CHECK(m.homology_dim == 1);

    UlmerCertificate wrong{0, {{0, 0, vec({1})}, {0, 0, vec({1})}}, {0}, {{vec({1}), vec({1})}}};
    CHECK_FALSE(ulmer_certificate_check(id, f, t, wrong).relations_vanish);

    TorsionData te = t2_e11();
    Factorization fc = canonical_factorization_localized(unit_of_t2(), te);
    CHECK(ulmer_certificate_check(unit_of_t2(), fc, te, anti).verdict);
}

TEST_CASE("generalized closed functors") {
    TorsionData t = t2_e11();
    Bimodule c = corner_bimodule();
    CHECK(validate_bimodule(c).ok());
    GenClosedReport r = is_generalized_closed_functor(c, t, default_gencl_samples(c, t));
    CHECK(r.condition_i);
    CHECK(r.condition_ii);
    CHECK(r.condition_iii);

    Bimodule reg = regular_bimodule(identity_functor(t2()));
    GenClosedReport g = is_generalized_closed_functor(reg, t, default_gencl_samples(reg, t));
    CHECK_FALSE(g.condition_i);
    CHECK(g.coincide);

    GenClosedReport w = is_generalized_closed_functor(reg, whole_ideal(t2()), default_gencl_samples(reg, whole_ideal(t2())));
    CHECK(w.condition_i);
    CHECK(w.coincide);
}
