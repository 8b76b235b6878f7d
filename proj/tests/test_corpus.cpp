#include <doctest.h>

#include "laxepi/corpus.hpp"
#include "laxepi/report.hpp"

using namespace laxepi;

namespace {

std::string describe(const ExpectationOutcome& o) {
    std::string got = o.error ? code_name(*o.error) : (o.verdict ? (*o.verdict ? "true" : "false") : "?");
    return o.expected.kind + " " + o.expected.subject + " [" + o.expected.ideal + "] got " + got;
}

}  // namespace

TEST_CASE("builtins reproduce their expected tables") {
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        CHECK_FALSE(inst.expected.empty());
        CHECK(validate_report(inst)["witnesses"]["functors"].size() == inst.functors.size());
        for (const auto& o : evaluate_expectations(inst)) {
            INFO(name, ": ", describe(o));
            CHECK(o.ok);
        }
    }
    CHECK_THROWS_AS(builtin("nope"), Error);
}

TEST_CASE("builtin structures are valid") {
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        INFO(name);
        for (const auto& [id, c] : inst.categories) CHECK(validate_category(c).ok());
        for (const auto& [id, f] : inst.functors) CHECK(validate_functor(f.functor).ok());
        for (const auto& [id, m] : inst.modules) CHECK(validate_module(m.module).ok());
        for (const auto& [id, b] : inst.bimodules) CHECK(validate_bimodule(b.bimodule).ok());
    }
}

TEST_CASE("random instances are deterministic and valid") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        INFO("seed ", seed);
        Instance a = random_instance(seed);
        Instance b = random_instance(seed);
        CHECK(serialize_instance(a) == serialize_instance(b));
        const LinearFunctor& f = a.functor("f").functor;
        CHECK(validate_category(f.source()).ok());
        CHECK(validate_category(f.target()).ok());
        CHECK(validate_functor(f).ok());
        CHECK(validate_module(a.module("x").module).ok());
        CHECK_NOTHROW(a.torsion("t"));
        for (std::size_t v = 0; v < f.source().size(); ++v)
            for (std::size_t u = 0; u < f.source().size(); ++u) CHECK(f.source().hom_dim(v, u) <= 4);
    }
    CHECK(serialize_instance(random_instance(1)) != serialize_instance(random_instance(2)));
}

TEST_CASE("the smallest bounds give the field and its identity") {
    Bounds b;
    b.max_objects = 1;
    b.max_hom_dim = 1;
    b.max_module_dim = 1;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = random_instance(seed, b);
        const LinearFunctor& f = inst.functor("f").functor;
        CHECK(f.source().size() == 1);
        CHECK(f.source().total_dim() == 1);
        CHECK(f.hom_map(0, 0) == Matrix::identity(1));
    }
}

TEST_CASE("sampler shapes and quotients") {
    Sampler s(11);
    for (int i = 0; i < 20; ++i) {
        QuiverData src = s.category(2);
        QuiverData tgt = s.category();
        if (tgt.category.category.size() <= src.category.category.size()) {
            LinearFunctor f = s.functor(src, tgt.category.category, ObjectShape::Surjective);
            CHECK(f.surjective_on_objects());
            CHECK(validate_functor(f).ok());
        }
        LinearFunctor b = s.functor(src, src.category.category, ObjectShape::Bijective);
        CHECK(b.bijective_on_objects());
        auto [q, p] = s.quotient(src);
        CHECK(validate_category(q.category.category).ok());
        CHECK(validate_functor(p).ok());
        CHECK(q.category.category.total_dim() <= src.category.category.total_dim());
        CHECK(validate_module(s.module(src)).ok());
    }
    CHECK(s.stats().categories == 40);
    CHECK(s.stats().category_tries >= 40);
}

TEST_CASE("corpus run is deterministic") {
    CorpusRun a = corpus_run(7, 10);
    CorpusRun b = corpus_run(7, 10);
    CHECK(a.ok);
    CHECK(a.report.dump() == b.report.dump());
}
