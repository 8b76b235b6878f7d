#include "laxepi/factorization.hpp"

#include "laxepi/error.hpp"

namespace laxepi {

Factorization canonical_factorization(const LinearFunctor& t) {
    const LinearCategory& c = t.source();
    const LinearCategory& d = t.target();
    const std::size_t n = c.size();
    std::vector<std::vector<std::string>> labels(n * n);
    std::vector<Matrix> comp(n * n * n);
    std::vector<Vector> ids;
    for (std::size_t w = 0; w < n; ++w) {
        ids.push_back(d.identity(t.object(w)));
        for (std::size_t v = 0; v < n; ++v) {
            labels[w * n + v] = d.labels(t.object(w), t.object(v));
            for (std::size_t u = 0; u < n; ++u)
                comp[(w * n + v) * n + u] = d.comp_tensor(t.object(w), t.object(v), t.object(u));
        }
    }
    Factorization f;
    f.mid = LinearCategory::from_structure(c.objects(), std::move(labels), std::move(comp), std::move(ids));
    std::vector<std::size_t> same(n);
    std::vector<Matrix> homs(n * n), eye(n * n);
    for (std::size_t v = 0; v < n; ++v) {
        same[v] = v;
        for (std::size_t u = 0; u < n; ++u) {
            homs[v * n + u] = t.hom_map(v, u);
            eye[v * n + u] = Matrix::identity(f.mid.hom_dim(v, u));
        }
    }
    f.s = LinearFunctor(c, f.mid, same, std::move(homs));
    f.i = LinearFunctor(f.mid, d, t.object_map(), std::move(eye));
    return f;
}

Factorization canonical_factorization_localized(const LinearFunctor& p, const TorsionData& tt) {
    if (!(tt.cat == p.target())) fail(ErrorCode::InvalidArgument, "factorization: torsion data is over another category");
    const LinearCategory& c = p.source();
    const LinearCategory& d = p.target();
    const std::size_t n = c.size();
    Factorization f;
    std::vector<Module> reps;
    for (std::size_t g = 0; g < d.size(); ++g) reps.push_back(yoneda(d, g));
    for (std::size_t u = 0; u < n; ++u) f.images.push_back(localize(tt, reps[p.object(u)]));
    const auto closed = [&](std::size_t u) -> const Module& { return f.images[u].closed.module; };

    std::vector<std::vector<std::string>> labels(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            f.quotient_homs.emplace_back(closed(v), closed(u));
            for (std::size_t k = 0; k < f.quotient_homs.back().dim(); ++k)
                labels[v * n + u].push_back("q" + std::to_string(k) + "_" + c.object(v) + "_" + c.object(u));
        }
    const auto& h = f.quotient_homs;
    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                const HomSpace& g = h[v * n + u];
                const HomSpace& fs = h[w * n + v];
                Matrix m(g.dim() * fs.dim(), h[w * n + u].dim());
                for (std::size_t a = 0; a < g.dim(); ++a)
                    for (std::size_t b = 0; b < fs.dim(); ++b) {
                        Vector co = h[w * n + u].coordinates(g.basis()[a] * fs.basis()[b]);
                        for (std::size_t k = 0; k < co.size(); ++k) m(a * fs.dim() + b, k) = co[k];
                    }
                comp[(w * n + v) * n + u] = std::move(m);
            }
    std::vector<Vector> ids;
    for (std::size_t u = 0; u < n; ++u) ids.push_back(h[u * n + u].coordinates(ModuleMap::identity(closed(u))));
    f.mid = LinearCategory::from_structure(c.objects(), labels, std::move(comp), std::move(ids));

    std::vector<std::size_t> same(n);
    std::vector<Matrix> homs(n * n);
    for (std::size_t v = 0; v < n; ++v) {
        same[v] = v;
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<Vector> cols;
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                Morphism pu = p.apply(c.basis_morphism(v, u, k));
                ModuleMap y = yoneda_morphism(reps[pu.source], reps[pu.target], pu);
                cols.push_back(h[v * n + u].coordinates(localize_map(f.images[v], f.images[u], y)));
            }
            homs[v * n + u] = Matrix::from_columns(cols, h[v * n + u].dim());
        }
    }
    f.s = LinearFunctor(c, f.mid, same, std::move(homs));

    Bimodule emb{f.mid, d, {}, std::vector<std::vector<ModuleMap>>(n * n)};
    for (std::size_t u = 0; u < n; ++u) emb.values.push_back(closed(u));
    for (std::size_t k = 0; k < n * n; ++k) emb.actions[k] = h[k].basis();
    f.embedding = std::move(emb);
    return f;
}

}  // namespace laxepi
