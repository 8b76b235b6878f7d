#include "laxepi/corpus.hpp"

#include <algorithm>

#include "laxepi/factorization.hpp"

namespace laxepi {

namespace {

Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

LinearCategory rationals() { return from_algebra({"1"}, {v({1})}, v({1})); }

LinearCategory q_times_q() {
    return from_algebra({"e1", "e2"}, {v({1, 0}), v({0, 0}), v({0, 0}), v({0, 1})}, v({1, 1}));
}

LinearCategory upper_triangular() {
    std::vector<Vector> p = {
        v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 0}),
        v({0, 0, 0}), v({0, 0, 0}), v({0, 1, 0}),
        v({0, 0, 0}), v({0, 0, 0}), v({0, 0, 1}),
    };
    return from_algebra({"e11", "e12", "e22"}, p, v({1, 0, 1}));
}

LinearCategory point_and_square() {
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
    return from_matrix_spaces({"P", "P2"}, {1, 2}, {units(1, 1), units(2, 1), units(1, 2), units(2, 2)});
}

QuiverData quiver_data(Quiver q) {
    QuiverData d;
    d.category = from_quiver(q);
    d.quiver = std::move(q);
    return d;
}

QuiverData truncated_loop() {
    Quiver q;
    q.vertices = {"*"};
    q.arrows = {{"x", 0, 0}};
    q.nilpotency = 3;
    return quiver_data(q);
}

QuiverData a2_quiver() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return quiver_data(q);
}

// End(Λ ⊕ Λ/rad) for Λ = Q[x]/x^2.
QuiverData auslander_quiver() {
    Quiver q;
    q.vertices = {"L", "S"};
    q.arrows = {{"p", 0, 1}, {"i", 1, 0}};
    q.relations = {{{{Rational(1), Path{1, 0}}}}};
    q.nilpotency = 3;
    return quiver_data(q);
}

// The same objects with x = i∘p kept and i dropped.
QuiverData auslander_without_i() {
    Quiver q;
    q.vertices = {"L", "S"};
    q.arrows = {{"x", 0, 0}, {"p", 0, 1}};
    q.relations = {{{{Rational(1), Path{0, 0}}}}, {{{Rational(1), Path{0, 1}}}}};
    q.nilpotency = 3;
    return quiver_data(q);
}

// Coordinates of a basis path inside its hom space.
Vector basis_path(const QuiverData& q, std::size_t from, std::size_t to, const Path& p) {
    const std::size_t n = q.category.category.size();
    const auto& paths = q.category.basis_paths[from * n + to];
    for (std::size_t k = 0; k < paths.size(); ++k)
        if (paths[k] == p) return unit_vector(paths.size(), k);
    return Vector(paths.size());
}

Expectation expect(std::string kind, std::string subject, std::string ideal, bool verdict) {
    return {std::move(kind), std::move(subject), std::move(ideal), verdict, std::nullopt};
}

Expectation expect_error(std::string kind, std::string subject, std::string ideal, ErrorCode code) {
    return {std::move(kind), std::move(subject), std::move(ideal), std::nullopt, code};
}

void add_category(Instance& inst, const std::string& id, const LinearCategory& c) { inst.categories[id] = c; }

void add_quiver(Instance& inst, const std::string& id, const QuiverData& q) {
    inst.categories[id] = q.category.category;
    inst.quivers[id] = q;
}

void add_functor(Instance& inst, const std::string& id, const std::string& s, const std::string& t, LinearFunctor f) {
    inst.functors[id] = {s, t, std::move(f)};
}

NamedIdeal whole(const std::string& c) { return {c, NamedIdeal::Kind::Whole, {}}; }
NamedIdeal generated(const std::string& c, std::vector<Morphism> gens) {
    return {c, NamedIdeal::Kind::Generated, std::move(gens)};
}

Instance identity_ring() {
    Instance inst;
    inst.name = "identity_ring";
    LinearCategory t = upper_triangular();
    add_category(inst, "T2", t);
    add_functor(inst, "id", "T2", "T2", identity_functor(t));
    inst.ideals["trivial"] = whole("T2");
    inst.bimodules["regular"] = {"T2", "T2", regular_bimodule(identity_functor(t))};
    inst.modules["top"] = {"T2", radical_and_simples(t).simples.front()};
    for (const char* k : {"ff-restriction", "epi", "lax-epi", "flat", "flat-epi"})
        inst.expected.push_back(expect(k, "id", "", true));
    for (const char* k : {"cond-epi", "glax", "abelian-localization", "kernel-law"})
        inst.expected.push_back(expect(k, "id", "trivial", true));
    inst.expected.push_back(expect("generalized-closed", "regular", "trivial", true));
    return inst;
}

Instance diagonal_k_kk() {
    Instance inst;
    inst.name = "diagonal_k_kk";
    add_category(inst, "Q", rationals());
    add_category(inst, "QxQ", q_times_q());
    add_functor(inst, "d", "Q", "QxQ", LinearFunctor(rationals(), q_times_q(), {0}, {Matrix::column(v({1, 1}))}));
    inst.ideals["trivial"] = whole("QxQ");
    inst.modules["k"] = {"Q", yoneda(rationals(), 0)};
    for (const char* k : {"ff-restriction", "epi", "lax-epi", "flat-epi"}) inst.expected.push_back(expect(k, "d", "", false));
    inst.expected.push_back(expect("flat", "d", "", true));
    for (const char* k : {"cond-epi", "glax", "abelian-localization"})
        inst.expected.push_back(expect(k, "d", "trivial", false));
    inst.expected.push_back(expect("kernel-law", "d", "trivial", true));
    return inst;
}

Instance surjection_t2_semisimple() {
    Instance inst;
    inst.name = "surjection_T2_semisimple";
    LinearCategory t = upper_triangular();
    add_category(inst, "T2", t);
    add_category(inst, "QxQ", q_times_q());
    add_functor(inst, "s", "T2", "QxQ", LinearFunctor(t, q_times_q(), {0}, {Matrix(2, 3, {1, 0, 0, 0, 0, 1})}));
    inst.ideals["trivial"] = whole("QxQ");
    RadicalData rd = radical_and_simples(t);
    inst.modules["simple0"] = {"T2", rd.simples[0]};
    inst.modules["simple1"] = {"T2", rd.simples[1]};
    inst.modules["regular"] = {"T2", yoneda(t, 0)};
    for (const char* k : {"ff-restriction", "epi", "lax-epi"}) inst.expected.push_back(expect(k, "s", "", true));
    for (const char* k : {"flat", "flat-epi"}) inst.expected.push_back(expect(k, "s", "", false));
    for (const char* k : {"cond-epi", "glax", "kernel-law"}) inst.expected.push_back(expect(k, "s", "trivial", true));
    inst.expected.push_back(expect("abelian-localization", "s", "trivial", false));
    return inst;
}

Instance summand_inclusion() {
    Instance inst;
    inst.name = "summand_inclusion";
    LinearCategory pp = point_and_square();
    add_category(inst, "Q", rationals());
    add_category(inst, "PP2", pp);
    add_functor(inst, "i", "Q", "PP2", LinearFunctor(rationals(), pp, {0}, {Matrix::column(v({1}))}));
    inst.ideals["trivial"] = whole("PP2");
    inst.modules["k"] = {"Q", yoneda(rationals(), 0)};
    for (const char* k : {"ff-restriction", "lax-epi", "flat"}) inst.expected.push_back(expect(k, "i", "", true));
    inst.expected.push_back(expect_error("epi", "i", "", ErrorCode::NotSurjectiveOnObjects));
    inst.expected.push_back(expect_error("flat-epi", "i", "", ErrorCode::InvalidArgument));
    inst.expected.push_back(expect_error("cond-epi", "i", "trivial", ErrorCode::NotBijectiveOnObjects));
    for (const char* k : {"glax", "abelian-localization", "kernel-law"})
        inst.expected.push_back(expect(k, "i", "trivial", true));
    return inst;
}

Instance corner_t2() {
    Instance inst;
    inst.name = "corner_T2";
    LinearCategory t = upper_triangular();
    LinearCategory q = rationals();
    add_category(inst, "Q", q);
    add_category(inst, "T2", t);
    LinearFunctor p(q, t, {0}, {Matrix::column(v({1, 0, 1}))});
    add_functor(inst, "p", "Q", "T2", p);
    inst.ideals["e11"] = generated("T2", {{0, 0, v({1, 0, 0})}});
    inst.ideals["trivial"] = whole("T2");

    // The mid category of the localized factorization, for the conditioned
    // epimorphism Q -> End(localized T2).
    Factorization f = canonical_factorization_localized(p, ideal_closure(t, {{0, 0, v({1, 0, 0})}}));
    add_category(inst, "mid", f.mid);
    add_functor(inst, "s", "Q", "mid", f.s);
    inst.ideals["mid_trivial"] = whole("mid");

    Module one = yoneda(q, 0);
    ModuleMap id(one, one, {Matrix::identity(1)});
    inst.bimodules["corner"] = {"T2", "Q", Bimodule{t, q, {one}, {{id, ModuleMap::zero(one, one), ModuleMap::zero(one, one)}}}};
    inst.bimodules["regular"] = {"T2", "T2", regular_bimodule(identity_functor(t))};
    inst.modules["k"] = {"Q", one};
    inst.modules["regular"] = {"T2", yoneda(t, 0)};

    for (const char* k : {"glax", "abelian-localization", "kernel-law"}) inst.expected.push_back(expect(k, "p", "e11", true));
    inst.expected.push_back(expect("flat", "p", "", true));
    inst.expected.push_back(expect("lax-epi", "p", "", false));
    inst.expected.push_back(expect("ff-restriction", "p", "", false));
    inst.expected.push_back(expect_error("cond-epi", "p", "e11", ErrorCode::RepresentableNotClosed));
    inst.expected.push_back(expect("cond-epi", "s", "mid_trivial", true));
    inst.expected.push_back(expect("generalized-closed", "corner", "e11", true));
    inst.expected.push_back(expect("generalized-closed", "regular", "e11", false));
    inst.expected.push_back(expect("generalized-closed", "regular", "trivial", true));
    return inst;
}

Instance truncated_poly() {
    Instance inst;
    inst.name = "truncated_poly";
    QuiverData loop = truncated_loop();
    const LinearCategory& a = loop.category.category;
    add_quiver(inst, "A", loop);
    add_category(inst, "Q", rationals());
    add_functor(inst, "id", "A", "A", identity_functor(a));
    add_functor(inst, "u", "Q", "A", LinearFunctor(rationals(), a, {0}, {Matrix::column(a.identity(0))}));
    inst.ideals["x"] = generated("A", {{0, 0, basis_path(loop, 0, 0, Path{0})}});
    inst.ideals["unit"] = generated("A", {a.identity_morphism(0)});
    inst.modules["k"] = {"Q", yoneda(rationals(), 0)};
    inst.expected.push_back(expect_error("ideal", "x", "", ErrorCode::IdealNotIdempotent));
    inst.expected.push_back(expect("ideal", "unit", "", true));
    inst.expected.push_back(expect_error("glax", "id", "x", ErrorCode::IdealNotIdempotent));
    for (const char* k : {"epi", "lax-epi", "flat-epi"}) inst.expected.push_back(expect(k, "id", "", true));
    for (const char* k : {"epi", "lax-epi", "flat-epi", "ff-restriction"}) inst.expected.push_back(expect(k, "u", "", false));
    inst.expected.push_back(expect("flat", "u", "", true));
    inst.expected.push_back(expect("kernel-law", "u", "unit", true));
    return inst;
}

Instance a2_instance() {
    Instance inst;
    inst.name = "A2_quiver";
    QuiverData a2 = a2_quiver();
    const LinearCategory& c = a2.category.category;
    add_quiver(inst, "A2", a2);
    add_category(inst, "Q", rationals());
    add_functor(inst, "id", "A2", "A2", identity_functor(c));
    LinearFunctor j1(rationals(), c, {0}, {Matrix::column(c.identity(0))});
    LinearFunctor j2(rationals(), c, {1}, {Matrix::column(c.identity(1))});
    add_functor(inst, "j1", "Q", "A2", j1);
    add_functor(inst, "j2", "Q", "A2", j2);
    inst.ideals["v1"] = generated("A2", {c.identity_morphism(0)});
    inst.ideals["v2"] = generated("A2", {c.identity_morphism(1)});
    inst.bimodules["restrict1"] = {"A2", "Q", restriction_bimodule(j1)};
    inst.bimodules["regular"] = {"A2", "A2", regular_bimodule(identity_functor(c))};
    inst.modules["k"] = {"Q", yoneda(rationals(), 0)};
    inst.modules["s1"] = {"A2", module_from_arrows(a2, {1, 0}, {Matrix(1, 0)})};
    inst.modules["s2"] = {"A2", module_from_arrows(a2, {0, 1}, {Matrix(0, 1)})};
    inst.modules["p2"] = {"A2", yoneda(c, 1)};

    for (const char* k : {"ff-restriction", "lax-epi", "epi"}) inst.expected.push_back(expect(k, "id", "", true));
    for (const char* k : {"ff-restriction", "lax-epi"}) {
        inst.expected.push_back(expect(k, "j1", "", false));
        inst.expected.push_back(expect(k, "j2", "", false));
    }
    for (const char* k : {"glax", "abelian-localization", "kernel-law"}) {
        inst.expected.push_back(expect(k, "j1", "v1", true));
        inst.expected.push_back(expect(k, "j2", "v2", true));
    }
    inst.expected.push_back(expect_error("cond-epi", "id", "v1", ErrorCode::RepresentableNotClosed));
    inst.expected.push_back(expect("generalized-closed", "restrict1", "v1", true));
    inst.expected.push_back(expect("generalized-closed", "regular", "v1", false));
    return inst;
}

Instance auslander() {
    Instance inst;
    inst.name = "auslander";
    QuiverData g = auslander_quiver();
    QuiverData u = auslander_without_i();
    const LinearCategory& gc = g.category.category;
    add_quiver(inst, "G", g);
    add_quiver(inst, "U", u);
    add_category(inst, "D", discrete_category({"L", "S"}));
    add_functor(inst, "id", "G", "G", identity_functor(gc));
    // x ↦ i∘p, p ↦ p.
    add_functor(inst, "drop_i", "U", "G",
                functor_from_arrows(u, gc, {0, 1}, {basis_path(g, 0, 0, Path{0, 1}), basis_path(g, 0, 1, Path{0})}));
    std::vector<Matrix> maps = {Matrix::column(gc.identity(0)), Matrix(gc.hom_dim(0, 1), 0), Matrix(gc.hom_dim(1, 0), 0),
                                Matrix::column(gc.identity(1))};
    add_functor(inst, "discrete", "D", "G", LinearFunctor(discrete_category({"L", "S"}), gc, {0, 1}, maps));
    inst.ideals["L"] = generated("G", {gc.identity_morphism(0)});
    inst.expected.push_back(expect("cond-epi", "id", "L", true));
    inst.expected.push_back(expect("cond-epi", "drop_i", "L", true));
    inst.expected.push_back(expect("cond-epi", "discrete", "L", false));
    return inst;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"identity_ring", "diagonal_k_kk", "surjection_T2_semisimple", "summand_inclusion",
            "corner_T2",     "truncated_poly", "A2_quiver",               "auslander"};
}

Instance builtin(const std::string& name) {
    if (name == "identity_ring") return identity_ring();
    if (name == "diagonal_k_kk") return diagonal_k_kk();
    if (name == "surjection_T2_semisimple") return surjection_t2_semisimple();
    if (name == "summand_inclusion") return summand_inclusion();
    if (name == "corner_T2") return corner_t2();
    if (name == "truncated_poly") return truncated_poly();
    if (name == "A2_quiver") return a2_instance();
    if (name == "auslander") return auslander();
    fail(ErrorCode::InvalidArgument, "unknown builtin '" + name + "'");
}

// ---- random generation ----

Sampler::Sampler(std::uint64_t seed, Bounds bounds) : rng_(seed), bounds_(bounds) {}

std::size_t Sampler::pick(std::size_t lo, std::size_t hi) {
    // Modulo instead of a distribution object: reproducible across standard
    // libraries.
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Rational Sampler::coefficient() {
    static const int values[] = {-1, 0, 1, 1, 2, -2, 3};
    return Rational(values[pick(0, 6)]);
}

QuiverData Sampler::category(std::size_t min_objects) {
    const std::size_t lo = std::max<std::size_t>(1, min_objects);
    const std::size_t hi = std::max(lo, bounds_.max_objects);
    for (int attempt = 0; attempt < 256; ++attempt) {
        ++stats_.category_tries;
        Quiver q;
        const std::size_t n = pick(lo, hi);
        for (std::size_t i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
        const std::size_t arrows = pick(0, bounds_.max_arrows);
        for (std::size_t a = 0; a < arrows; ++a) q.arrows.push_back({"a" + std::to_string(a), pick(0, n - 1), pick(0, n - 1)});
        q.nilpotency = pick(2, std::max<std::size_t>(2, bounds_.max_nilpotency));
        if (!q.arrows.empty() && pick(0, 2) == 0) {
            std::vector<Path> pairs;
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                for (std::size_t b = 0; b < q.arrows.size(); ++b)
                    if (q.arrows[a].target == q.arrows[b].source) pairs.push_back({a, b});
            if (!pairs.empty()) q.relations.push_back({{{Rational(1), pairs[pick(0, pairs.size() - 1)]}}});
        }
        QuiverData d;
        try {
            d.category = from_quiver(q);
        } catch (const Error&) {
            continue;
        }
        const LinearCategory& c = d.category.category;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
            for (std::size_t u = 0; u < n && ok; ++u) ok = c.hom_dim(v, u) <= bounds_.max_hom_dim;
        if (!ok) continue;
        d.quiver = std::move(q);
        ++stats_.categories;
        return d;
    }
    ++stats_.category_fallbacks;
    Quiver q;
    for (std::size_t i = 0; i < lo; ++i) q.vertices.push_back("v" + std::to_string(i));
    ++stats_.categories;
    return quiver_data(q);
}

LinearFunctor Sampler::functor(const QuiverData& source, const LinearCategory& target, ObjectShape shape) {
    const std::size_t n = source.category.category.size();
    const std::size_t m = target.size();
    std::vector<std::size_t> objects(n);
    auto shuffled = [&](std::size_t k) {
        std::vector<std::size_t> p(k);
        for (std::size_t i = 0; i < k; ++i) p[i] = i;
        for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[pick(0, i - 1)]);
        return p;
    };
    switch (shape) {
        case ObjectShape::Any:
            for (auto& o : objects) o = pick(0, m - 1);
            break;
        case ObjectShape::Surjective: {
            if (n < m) fail(ErrorCode::InvalidArgument, "sampler: surjective functor needs at least as many source objects");
            std::vector<std::size_t> slots = shuffled(n);
            std::vector<std::size_t> perm = shuffled(m);
            for (std::size_t i = 0; i < n; ++i) objects[slots[i]] = i < m ? perm[i] : pick(0, m - 1);
            break;
        }
        case ObjectShape::Bijective:
            if (n != m) fail(ErrorCode::InvalidArgument, "sampler: bijective functor needs equal object counts");
            objects = shuffled(n);
            break;
    }
    const Quiver& q = source.quiver;
    for (int attempt = 0; attempt < 64; ++attempt) {
        ++stats_.functor_tries;
        std::vector<Vector> images;
        for (const auto& a : q.arrows) {
            const std::size_t len = target.hom_dim(objects[a.source], objects[a.target]);
            Vector img(len);
            const std::size_t mode = pick(0, 3);
            if (len > 0 && mode == 1) {
                img[pick(0, len - 1)] = 1;
            } else if (len > 0 && mode >= 2) {
                for (auto& x : img) x = coefficient();
            }
            images.push_back(std::move(img));
        }
        LinearFunctor f = functor_from_arrows(source, target, objects, images);
        if (validate_functor(f).ok()) {
            ++stats_.functors;
            return f;
        }
    }
    ++stats_.functor_fallbacks;
    ++stats_.functors;
    std::vector<Vector> zeros;
    for (const auto& a : q.arrows) zeros.emplace_back(target.hom_dim(objects[a.source], objects[a.target]));
    LinearFunctor f = functor_from_arrows(source, target, objects, zeros);
    ensure(validate_functor(f).ok(), "sampler: zero arrow images must give a functor");
    return f;
}

std::pair<QuiverData, LinearFunctor> Sampler::quotient(const QuiverData& src) {
    Quiver q = src.quiver;
    const LinearCategory& c = src.category.category;
    const std::size_t n = c.size();
    std::vector<Path> candidates;
    for (std::size_t k = 0; k < n * n; ++k)
        for (const auto& p : src.category.basis_paths[k])
            if (!p.empty()) candidates.push_back(p);
    if (q.nilpotency > 2 && (candidates.empty() || pick(0, 2) == 0))
        --q.nilpotency;
    else if (!candidates.empty())
        q.relations.push_back({{{Rational(1), candidates[pick(0, candidates.size() - 1)]}}});
    QuiverData out = quiver_data(q);
    std::vector<std::size_t> objects(n);
    for (std::size_t i = 0; i < n; ++i) objects[i] = i;
    std::vector<Vector> images;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        images.push_back(basis_path(out, q.arrows[a].source, q.arrows[a].target, Path{a}));
    LinearFunctor f = functor_from_arrows(src, out.category.category, objects, images);
    ensure(validate_functor(f).ok(), "sampler: quotient projection is not a functor");
    return {std::move(out), std::move(f)};
}

Module Sampler::module(const QuiverData& q) {
    ++stats_.module_tries;
    const std::size_t n = q.category.category.size();
    std::vector<std::size_t> dims(n);
    for (auto& d : dims) d = pick(0, bounds_.max_module_dim);
    std::vector<Matrix> mats;
    for (const auto& a : q.quiver.arrows) {
        Matrix m(dims[a.source], dims[a.target]);
        if (pick(0, 4) != 0)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = coefficient();
        mats.push_back(std::move(m));
    }
    for (;;) {
        Module x = module_from_arrows(q, dims, mats);
        if (validate_module(x).ok()) {
            ++stats_.modules;
            return x;
        }
        std::vector<std::size_t> nonzero;
        for (std::size_t a = 0; a < mats.size(); ++a)
            if (!mats[a].is_zero()) nonzero.push_back(a);
        ensure(!nonzero.empty(), "sampler: zero arrow matrices must give a module");
        std::size_t a = nonzero[pick(0, nonzero.size() - 1)];
        mats[a] = Matrix(mats[a].rows(), mats[a].cols());
        ++stats_.module_corrections;
    }
}

SampledIdeal Sampler::ideal(const QuiverData& q) {
    ++stats_.ideal_tries;
    const LinearCategory& c = q.category.category;
    const std::size_t n = c.size();
    SampledIdeal out;
    const std::size_t r = pick(0, 19);
    if (r == 0) {
        out.spec.kind = NamedIdeal::Kind::Zero;
        out.torsion = zero_ideal(c);
    } else if (r == 1) {
        out.spec.kind = NamedIdeal::Kind::Whole;
        out.torsion = whole_ideal(c);
    } else {
        std::vector<Morphism> gens;
        for (std::size_t u = 0; u < n; ++u)
            if (pick(0, 1)) gens.push_back(c.identity_morphism(u));
        if (gens.empty()) gens.push_back(c.identity_morphism(pick(0, n - 1)));
        if (!q.quiver.arrows.empty() && pick(0, 2) == 0) {
            std::size_t a = pick(0, q.quiver.arrows.size() - 1);
            const Arrow& arr = q.quiver.arrows[a];
            Vector coords = basis_path(q, arr.source, arr.target, Path{a});
            if (!is_zero(coords)) {
                std::vector<Morphism> with = gens;
                with.push_back({arr.source, arr.target, coords});
                try {
                    out.torsion = ideal_closure(c, with);
                    out.spec.generators = std::move(with);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::IdealNotIdempotent) throw;
                }
            }
        }
        if (out.spec.generators.empty()) {
            out.torsion = ideal_closure(c, gens);
            out.spec.generators = std::move(gens);
        }
    }
    ++stats_.ideals;
    return out;
}

Instance random_instance(std::uint64_t seed, Bounds bounds, SamplerStats* stats) {
    Sampler s(seed, bounds);
    Instance inst;
    inst.name = "random-" + std::to_string(seed);
    QuiverData src = s.category();
    QuiverData tgt = s.category();
    add_quiver(inst, "source", src);
    add_quiver(inst, "target", tgt);
    add_functor(inst, "f", "source", "target", s.functor(src, tgt.category.category, ObjectShape::Any));
    inst.modules["x"] = {"source", s.module(src)};
    SampledIdeal t = s.ideal(tgt);
    t.spec.category = "target";
    inst.ideals["t"] = t.spec;
    if (stats) *stats = s.stats();
    return inst;
}

}  // namespace laxepi
