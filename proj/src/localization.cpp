#include "laxepi/localization.hpp"

#include "laxepi/error.hpp"

namespace laxepi {

bool TorsionData::degenerate() const {
    for (const auto& s : ideal)
        if (!s.is_zero()) return false;
    return true;
}

bool TorsionData::trivial() const {
    for (std::size_t u = 0; u < cat.size(); ++u)
        if (!at(u, u).contains(cat.identity(u))) return false;
    return true;
}

namespace {

// span{a∘a'} per pair; equals the ideal exactly when it is idempotent.
std::vector<Subspace> square(const LinearCategory& c, const std::vector<Subspace>& ideal) {
    const std::size_t n = c.size();
    std::vector<Subspace> out;
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<Vector> gens;
            for (std::size_t v = 0; v < n; ++v) {
                const Subspace& left = ideal[v * n + u];
                const Subspace& right = ideal[w * n + v];
                for (std::size_t i = 0; i < left.dim(); ++i)
                    for (std::size_t j = 0; j < right.dim(); ++j)
                        gens.push_back(c.compose(w, v, u, left.basis_vector(i), right.basis_vector(j)));
            }
            out.push_back(Subspace::span(gens, c.hom_dim(w, u)));
        }
    return out;
}

std::vector<Subspace> two_sided_closure(const LinearCategory& c, const std::vector<Morphism>& gens) {
    const std::size_t n = c.size();
    std::vector<std::vector<Vector>> rows(n * n);
    for (const auto& a : gens) {
        if (a.source >= n || a.target >= n || a.coords.size() != c.hom_dim(a.source, a.target))
            fail(ErrorCode::InvalidArgument, "ideal generator is not a morphism of the category");
        // g∘a∘f over basis f: w -> source, g: target -> x.
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t f = 0; f < c.hom_dim(w, a.source); ++f) {
                Vector af = c.compose(w, a.source, a.target, a.coords, unit_vector(c.hom_dim(w, a.source), f));
                if (is_zero(af)) continue;
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t g = 0; g < c.hom_dim(a.target, x); ++g)
                        rows[w * n + x].push_back(
                            c.compose(w, a.target, x, unit_vector(c.hom_dim(a.target, x), g), af));
            }
    }
    std::vector<Subspace> out;
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t x = 0; x < n; ++x) out.push_back(Subspace::span(rows[w * n + x], c.hom_dim(w, x)));
    return out;
}

void require_idempotent(const LinearCategory& c, const std::vector<Subspace>& ideal) {
    const std::size_t n = c.size();
    auto sq = square(c, ideal);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u)
            if (!(sq[w * n + u] == ideal[w * n + u]))
                fail(ErrorCode::IdealNotIdempotent, "ideal is not idempotent at (" + c.object(w) + "," + c.object(u) +
                                                        "): products span dimension " +
                                                        std::to_string(sq[w * n + u].dim()) + " of " +
                                                        std::to_string(ideal[w * n + u].dim()));
}

}  // namespace

TorsionData ideal_closure(const LinearCategory& c, const std::vector<Morphism>& generators) {
    auto ideal = two_sided_closure(c, generators);
    require_idempotent(c, ideal);
    return {c, std::move(ideal)};
}

TorsionData ideal_from_subspaces(const LinearCategory& c, std::vector<Subspace> ideal) {
    const std::size_t n = c.size();
    if (ideal.size() != n * n) fail(ErrorCode::DimensionMismatch, "ideal: one subspace per hom pair");
    std::vector<Morphism> gens;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            const Subspace& s = ideal[v * n + u];
            if (s.ambient_dim() != c.hom_dim(v, u)) fail(ErrorCode::DimensionMismatch, "ideal: subspace ambient dimension");
            for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back({v, u, s.basis_vector(i)});
        }
    if (two_sided_closure(c, gens) != ideal) fail(ErrorCode::InvalidArgument, "ideal: subspaces are not a two-sided ideal");
    require_idempotent(c, ideal);
    return {c, std::move(ideal)};
}

TorsionData whole_ideal(const LinearCategory& c) {
    std::vector<Subspace> ideal;
    for (std::size_t v = 0; v < c.size(); ++v)
        for (std::size_t u = 0; u < c.size(); ++u) ideal.push_back(Subspace::full(c.hom_dim(v, u)));
    return {c, std::move(ideal)};
}

TorsionData zero_ideal(const LinearCategory& c) {
    std::vector<Subspace> ideal;
    for (std::size_t v = 0; v < c.size(); ++v)
        for (std::size_t u = 0; u < c.size(); ++u) ideal.emplace_back(c.hom_dim(v, u));
    return {c, std::move(ideal)};
}

Submodule torsion_submodule(const TorsionData& t, const Module& x) {
    const LinearCategory& c = t.cat;
    if (!(x.category() == c)) fail(ErrorCode::InvalidArgument, "torsion: module is over another category");
    const std::size_t n = c.size();
    Submodule s{x, {}};
    for (std::size_t u = 0; u < n; ++u) {
        Matrix stacked(0, x.dim(u));
        for (std::size_t v = 0; v < n; ++v) {
            const Subspace& a = t.at(v, u);
            for (std::size_t i = 0; i < a.dim(); ++i) stacked = vstack(stacked, x.act(v, u, a.basis_vector(i)));
        }
        s.parts.push_back(kernel_basis(stacked));
    }
    return s;
}

bool is_torsion(const TorsionData& t, const Module& x) { return torsion_submodule(t, x) == Submodule::full(x); }

bool is_torsion_free(const TorsionData& t, const Module& x) {
    for (const auto& p : torsion_submodule(t, x).parts)
        if (!p.is_zero()) return false;
    return true;
}

Submodule j_submodule(const TorsionData& t, std::size_t u) {
    Submodule s{yoneda(t.cat, u), {}};
    for (std::size_t v = 0; v < t.cat.size(); ++v) s.parts.push_back(t.at(v, u));
    return s;
}

namespace {

struct JData {
    std::vector<Kernel> j;  // J_U with its inclusion into yoneda(U)
    // For basis f: v -> u, the map J_v -> J_u induced by postcomposition.
    std::vector<std::vector<ModuleMap>> post;  // [v * n + u][k]
};

JData j_data(const TorsionData& t) {
    const LinearCategory& c = t.cat;
    const std::size_t n = c.size();
    JData d;
    for (std::size_t u = 0; u < n; ++u) d.j.push_back(sub_to_module(j_submodule(t, u)));
    d.post.resize(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                Vector f = unit_vector(c.hom_dim(v, u), k);
                std::vector<Matrix> comps;
                for (std::size_t w = 0; w < n; ++w) {
                    const Subspace& src = t.at(w, v);
                    const Subspace& dst = t.at(w, u);
                    Matrix img = c.post_compose(w, v, u, f) * src.basis_columns();
                    Matrix m(dst.dim(), src.dim());
                    for (std::size_t col = 0; col < src.dim(); ++col) {
                        Vector co = dst.coordinates(img.col(col));
                        for (std::size_t r = 0; r < co.size(); ++r) m(r, col) = co[r];
                    }
                    comps.push_back(std::move(m));
                }
                d.post[v * n + u].emplace_back(d.j[v].module, d.j[u].module, std::move(comps));
            }
    return d;
}

struct Step {
    Module module;
    ModuleMap unit;
};

// Y ↦ Hom(J_-, Y).
Step gabriel_step(const TorsionData& t, const JData& jd, const Module& y) {
    const LinearCategory& c = t.cat;
    const std::size_t n = c.size();
    std::vector<HomSpace> h;
    std::vector<std::size_t> dims;
    for (std::size_t u = 0; u < n; ++u) {
        h.emplace_back(jd.j[u].module, y);
        dims.push_back(h.back().dim());
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                std::vector<Vector> cols;
                for (const auto& phi : h[u].basis()) cols.push_back(h[v].coordinates(phi * jd.post[v * n + u][k]));
                action[v * n + u].push_back(Matrix::from_columns(cols, dims[v]));
            }
    Module m = Module::from_action(c, std::move(dims), std::move(action));
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<Vector> cols;
        for (std::size_t k = 0; k < y.dim(u); ++k)
            cols.push_back(h[u].coordinates(yoneda_map(y, u, unit_vector(y.dim(u), k)) * jd.j[u].inclusion));
        comps.push_back(Matrix::from_columns(cols, m.dim(u)));
    }
    return {m, ModuleMap(y, m, std::move(comps))};
}

ClosedTest closed_test(const TorsionData& t, const JData& jd, const Module& x) {
    ClosedTest out;
    out.torsion_free = is_torsion_free(t, x);
    bool bij = true;
    for (std::size_t u = 0; u < t.cat.size(); ++u) {
        HomSpace h(jd.j[u].module, x);
        std::vector<Vector> cols;
        for (std::size_t k = 0; k < x.dim(u); ++k)
            cols.push_back(h.coordinates(yoneda_map(x, u, unit_vector(x.dim(u), k)) * jd.j[u].inclusion));
        out.restriction.push_back(Matrix::from_columns(cols, h.dim()));
        if (bij && !is_iso(out.restriction.back())) {
            bij = false;
            out.failing_object = u;
        }
    }
    out.closed = out.torsion_free && bij;
    return out;
}

}  // namespace

ClosedTest is_closed(const TorsionData& t, const Module& x) { return closed_test(t, j_data(t), x); }

Localization localize(const TorsionData& t, const Module& x) {
    if (!(x.category() == t.cat)) fail(ErrorCode::InvalidArgument, "localize: module is over another category");
    JData jd = j_data(t);
    Cokernel q = quotient_by(torsion_submodule(t, x));
    Step s1 = gabriel_step(t, jd, q.module);
    Step s2 = gabriel_step(t, jd, s1.module);
    ClosedTest test = closed_test(t, jd, s2.module);
    ensure(test.closed, "localize: module is not closed after two Gabriel steps");
    Localization out{{s2.module, std::move(test.restriction)}, s2.unit * s1.unit * q.projection};
    return out;
}

ModuleMap localize_map(const Localization& lx, const Localization& ly, const ModuleMap& f) {
    const Module& a = lx.closed.module;
    const Module& b = ly.closed.module;
    HomSpace h(a, b);
    Vector rhs = (ly.unit * f).flatten();
    if (h.dim() == 0) {
        ensure(is_zero(rhs), "localize_map: no map between the localizations");
        return ModuleMap::zero(a, b);
    }
    std::vector<Vector> cols;
    for (const auto& g : h.basis()) cols.push_back((g * lx.unit).flatten());
    auto c = rhs.empty() ? std::optional<Vector>(Vector(h.dim())) : solve(Matrix::from_columns(cols, rhs.size()), rhs);
    ensure(c.has_value(), "localize_map: map does not factor through the unit");
    return h.element(*c);
}

HomSpace quotient_hom(const TorsionData& t, const Module& x, const Module& y) {
    return HomSpace(localize(t, x).closed.module, localize(t, y).closed.module);
}

bool q_iso(const TorsionData& t, const ModuleMap& f) {
    return is_torsion(t, kernel(f).module) && is_torsion(t, cokernel(f).module);
}

bool filter_membership(const TorsionData& t, const Submodule& sub) {
    return is_torsion(t, quotient_by(sub).module);
}

Submodule preimage_submodule(const Submodule& sub, const Morphism& u) {
    const LinearCategory& c = sub.of.category();
    Submodule out{yoneda(c, u.source), {}};
    for (std::size_t w = 0; w < c.size(); ++w)
        out.parts.push_back(preimage(c.post_compose(w, u.source, u.target, u.coords), sub.parts[w]));
    return out;
}

}  // namespace laxepi
