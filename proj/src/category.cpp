#include "laxepi/category.hpp"

#include <map>
#include <sstream>

#include "laxepi/error.hpp"

namespace laxepi {

struct LinearCategory::Data {
    std::vector<std::string> objects;
    std::vector<std::vector<std::string>> labels;  // [v * n + u]
    std::vector<Matrix> comp;                       // [(w * n + v) * n + u]
    std::vector<Vector> identities;
};

LinearCategory::LinearCategory() : d_(std::make_shared<Data>()) {}

LinearCategory LinearCategory::from_structure(std::vector<std::string> objects,
                                              std::vector<std::vector<std::string>> labels,
                                              std::vector<Matrix> comp,
                                              std::vector<Vector> identities) {
    const std::size_t n = objects.size();
    if (labels.size() != n * n) fail(ErrorCode::DimensionMismatch, "category: hom label table size");
    if (comp.size() != n * n * n)
        fail(ErrorCode::DimensionMismatch, "category: composition table size");
    if (identities.size() != n) fail(ErrorCode::DimensionMismatch, "category: identity count");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (objects[i] == objects[j])
                fail(ErrorCode::InvalidArgument, "category: duplicate object id '" + objects[i] + "'");
    auto dim = [&](std::size_t v, std::size_t u) { return labels[v * n + u].size(); };
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                const Matrix& m = comp[(w * n + v) * n + u];
                if (m.rows() != dim(v, u) * dim(w, v) || m.cols() != dim(w, u))
                    fail(ErrorCode::DimensionMismatch, "category: composition tensor shape for (" +
                                                           objects[w] + "," + objects[v] + "," +
                                                           objects[u] + ")");
            }
    for (std::size_t u = 0; u < n; ++u)
        if (identities[u].size() != dim(u, u))
            fail(ErrorCode::DimensionMismatch, "category: identity length for " + objects[u]);
    LinearCategory c;
    auto d = std::make_shared<Data>();
    d->objects = std::move(objects);
    d->labels = std::move(labels);
    d->comp = std::move(comp);
    d->identities = std::move(identities);
    c.d_ = std::move(d);
    return c;
}

std::size_t LinearCategory::size() const noexcept { return d_->objects.size(); }

const std::string& LinearCategory::object(std::size_t i) const { return d_->objects.at(i); }

const std::vector<std::string>& LinearCategory::objects() const noexcept { return d_->objects; }

std::optional<std::size_t> LinearCategory::find(const std::string& id) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (d_->objects[i] == id) return i;
    return std::nullopt;
}

std::size_t LinearCategory::index_of(const std::string& id) const {
    auto i = find(id);
    if (!i) fail(ErrorCode::InvalidArgument, "unknown object '" + id + "'");
    return *i;
}

std::size_t LinearCategory::pair(std::size_t v, std::size_t u) const {
    if (v >= size() || u >= size()) fail(ErrorCode::InvalidArgument, "object index out of range");
    return v * size() + u;
}

std::size_t LinearCategory::hom_dim(std::size_t v, std::size_t u) const {
    return d_->labels[pair(v, u)].size();
}

const std::vector<std::string>& LinearCategory::labels(std::size_t v, std::size_t u) const {
    return d_->labels[pair(v, u)];
}

std::size_t LinearCategory::total_dim() const {
    std::size_t t = 0;
    for (const auto& l : d_->labels) t += l.size();
    return t;
}

const Vector& LinearCategory::identity(std::size_t u) const { return d_->identities.at(u); }

Morphism LinearCategory::identity_morphism(std::size_t u) const { return {u, u, identity(u)}; }

Morphism LinearCategory::basis_morphism(std::size_t v, std::size_t u, std::size_t k) const {
    return {v, u, unit_vector(hom_dim(v, u), k)};
}

const Matrix& LinearCategory::comp_tensor(std::size_t w, std::size_t v, std::size_t u) const {
    return d_->comp[pair(w, v) * size() + u];
}

Vector LinearCategory::compose(std::size_t w, std::size_t v, std::size_t u, const Vector& g,
                               const Vector& f) const {
    const std::size_t dvu = hom_dim(v, u), dwv = hom_dim(w, v), dwu = hom_dim(w, u);
    if (g.size() != dvu || f.size() != dwv) fail(ErrorCode::DimensionMismatch, "compose: coordinate length");
    const Matrix& t = comp_tensor(w, v, u);
    Vector out(dwu);
    Rational c;
    for (std::size_t i = 0; i < dvu; ++i) {
        if (sgn(g[i]) == 0) continue;
        for (std::size_t j = 0; j < dwv; ++j) {
            if (sgn(f[j]) == 0) continue;
            c = g[i] * f[j];
            auto row = t.row(i * dwv + j);
            for (std::size_t k = 0; k < dwu; ++k)
                if (sgn(row[k]) != 0) out[k] += c * row[k];
        }
    }
    return out;
}

Vector LinearCategory::compose_basis(std::size_t w, std::size_t v, std::size_t u, std::size_t g,
                                     std::size_t f) const {
    auto row = comp_tensor(w, v, u).row(g * hom_dim(w, v) + f);
    return Vector(row.begin(), row.end());
}

Matrix LinearCategory::post_compose(std::size_t w, std::size_t v, std::size_t u,
                                    const Vector& g) const {
    const std::size_t dwv = hom_dim(w, v);
    Matrix m(hom_dim(w, u), dwv);
    for (std::size_t j = 0; j < dwv; ++j) {
        Vector col = compose(w, v, u, g, unit_vector(dwv, j));
        for (std::size_t k = 0; k < col.size(); ++k) m(k, j) = col[k];
    }
    return m;
}

Matrix LinearCategory::pre_compose(std::size_t w, std::size_t v, std::size_t u,
                                   const Vector& f) const {
    const std::size_t dvu = hom_dim(v, u);
    Matrix m(hom_dim(w, u), dvu);
    for (std::size_t i = 0; i < dvu; ++i) {
        Vector col = compose(w, v, u, unit_vector(dvu, i), f);
        for (std::size_t k = 0; k < col.size(); ++k) m(k, i) = col[k];
    }
    return m;
}

bool operator==(const LinearCategory& a, const LinearCategory& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->objects == b.d_->objects && a.d_->labels == b.d_->labels &&
           a.d_->comp == b.d_->comp && a.d_->identities == b.d_->identities;
}

ValidationReport validate_category(const LinearCategory& c) {
    ValidationReport rep;
    const std::size_t n = c.size();
    auto name = [&](std::size_t v, std::size_t u, std::size_t k) {
        return c.labels(v, u)[k] + ":" + c.object(v) + "->" + c.object(u);
    };
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                Vector f = unit_vector(c.hom_dim(v, u), k);
                if (c.compose(v, u, u, c.identity(u), f) != f)
                    rep.violations.push_back("left identity law fails for " + name(v, u, k));
                if (c.compose(v, v, u, f, c.identity(v)) != f)
                    rep.violations.push_back("right identity law fails for " + name(v, u, k));
            }
    // (h∘g)∘f = h∘(g∘f) for f: x->w, g: w->v, h: v->u.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t u = 0; u < n; ++u) {
                    const std::size_t dh = c.hom_dim(v, u), dg = c.hom_dim(w, v),
                                      df = c.hom_dim(x, w);
                    if (dh == 0 || dg == 0 || df == 0) continue;
                    for (std::size_t h = 0; h < dh; ++h)
                        for (std::size_t g = 0; g < dg; ++g) {
                            Vector hg = c.compose_basis(w, v, u, h, g);
                            for (std::size_t f = 0; f < df; ++f) {
                                Vector gf = c.compose_basis(x, w, v, g, f);
                                Vector lhs = c.compose(x, w, u, hg, unit_vector(df, f));
                                Vector rhs = c.compose(x, v, u, unit_vector(dh, h), gf);
                                if (lhs != rhs)
                                    rep.violations.push_back("associativity fails for (" +
                                                             name(v, u, h) + ", " + name(w, v, g) +
                                                             ", " + name(x, w, f) + ")");
                            }
                        }
                }
    return rep;
}

Morphism compose(const LinearCategory& c, const Morphism& g, const Morphism& f) {
    if (f.target != g.source)
        fail(ErrorCode::NotComposable, "compose: target of f is not the source of g");
    return {f.source, g.target, c.compose(f.source, g.source, g.target, g.coords, f.coords)};
}

LinearCategory opposite(const LinearCategory& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<std::string>> labels(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) labels[v * n + u] = c.labels(u, v);
    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                // g in Hom_op(V,U) = Hom(U,V), f in Hom_op(W,V) = Hom(V,W): g∘op f = f∘g.
                const std::size_t dg = c.hom_dim(u, v), df = c.hom_dim(v, w);
                const Matrix& src = c.comp_tensor(u, v, w);
                Matrix m(dg * df, c.hom_dim(u, w));
                for (std::size_t g = 0; g < dg; ++g)
                    for (std::size_t f = 0; f < df; ++f)
                        for (std::size_t k = 0; k < m.cols(); ++k)
                            m(g * df + f, k) = src(f * dg + g, k);
                comp[(w * n + v) * n + u] = std::move(m);
            }
    std::vector<Vector> ids;
    for (std::size_t u = 0; u < n; ++u) ids.push_back(c.identity(u));
    return LinearCategory::from_structure(c.objects(), std::move(labels), std::move(comp), std::move(ids));
}

LinearCategory from_algebra(std::vector<std::string> basis_labels,
                            const std::vector<Vector>& products, const Vector& unit,
                            std::string object_id) {
    const std::size_t d = basis_labels.size();
    if (products.size() != d * d) fail(ErrorCode::DimensionMismatch, "from_algebra: product table size");
    if (unit.size() != d) fail(ErrorCode::DimensionMismatch, "from_algebra: unit length");
    Matrix m(d * d, d);
    for (std::size_t i = 0; i < d * d; ++i) {
        if (products[i].size() != d) fail(ErrorCode::DimensionMismatch, "from_algebra: product length");
        for (std::size_t k = 0; k < d; ++k) m(i, k) = products[i][k];
    }
    return LinearCategory::from_structure({std::move(object_id)}, {std::move(basis_labels)}, {m}, {unit});
}

namespace {

std::string path_label(const Quiver& q, std::size_t vertex, const Path& p) {
    if (p.empty()) return "1_" + q.vertices[vertex];
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        s += q.arrows[p[i]].name;
        if (i) s += "*";
    }
    return s;
}

}  // namespace

QuiverCategory from_quiver(const Quiver& q) {
    const std::size_t n = q.vertices.size();
    const std::size_t bound = q.nilpotency;
    if (bound < 1) fail(ErrorCode::InvalidArgument, "from_quiver: nilpotency bound must be >= 1");
    for (const auto& a : q.arrows)
        if (a.source >= n || a.target >= n)
            fail(ErrorCode::InvalidArgument, "from_quiver: arrow '" + a.name + "' has an unknown endpoint");

    // Paths of length < bound, per (source, target); longest first so that
    // elimination prefers to discard long paths.
    std::vector<std::vector<Path>> paths(n * n);
    {
        std::vector<std::pair<std::size_t, Path>> frontier;  // (end vertex, path) per start
        for (std::size_t s = 0; s < n; ++s) {
            frontier = {{s, {}}};
            std::vector<std::pair<std::size_t, Path>> all = frontier;
            for (std::size_t len = 1; len < bound; ++len) {
                std::vector<std::pair<std::size_t, Path>> next;
                for (const auto& [end, p] : frontier)
                    for (std::size_t a = 0; a < q.arrows.size(); ++a)
                        if (q.arrows[a].source == end) {
                            Path np = p;
                            np.push_back(a);
                            next.emplace_back(q.arrows[a].target, std::move(np));
                        }
                if (next.size() > 4096) fail(ErrorCode::InvalidArgument, "from_quiver: path space too large");
                all.insert(all.end(), next.begin(), next.end());
                frontier = std::move(next);
            }
            for (auto it = all.rbegin(); it != all.rend(); ++it) paths[s * n + it->first].push_back(it->second);
        }
    }
    auto endpoint = [&](std::size_t s, const Path& p) {
        std::size_t v = s;
        for (auto a : p) {
            if (q.arrows[a].source != v) fail(ErrorCode::InvalidArgument, "from_quiver: path is not composable");
            v = q.arrows[a].target;
        }
        return v;
    };
    std::vector<std::map<Path, std::size_t>> index(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
        for (std::size_t i = 0; i < paths[k].size(); ++i) index[k][paths[k][i]] = i;

    // Ideal generated by the relations inside the truncated path spaces.
    std::vector<std::vector<Vector>> ideal_gens(n * n);
    for (const auto& rel : q.relations) {
        if (rel.terms.empty()) continue;
        std::size_t rs = q.arrows.at(rel.terms.front().second.at(0)).source;
        std::size_t rt = endpoint(rs, rel.terms.front().second);
        for (const auto& [coef, p] : rel.terms) {
            if (p.empty()) fail(ErrorCode::InvalidArgument, "from_quiver: relation term with empty path");
            if (q.arrows.at(p[0]).source != rs || endpoint(rs, p) != rt)
                fail(ErrorCode::InvalidArgument, "from_quiver: relation terms are not parallel");
        }
        // pre: every path i -> rs, post: every path rt -> j.
        for (std::size_t i = 0; i < n; ++i)
            for (const Path& pre : paths[i * n + rs])
                for (std::size_t j = 0; j < n; ++j)
                    for (const Path& post : paths[rt * n + j]) {
                        Vector v(paths[i * n + j].size());
                        for (const auto& [coef, p] : rel.terms) {
                            Path full = pre;
                            full.insert(full.end(), p.begin(), p.end());
                            full.insert(full.end(), post.begin(), post.end());
                            if (full.size() >= bound) continue;
                            v[index[i * n + j].at(full)] += coef;
                        }
                        if (!is_zero(v)) ideal_gens[i * n + j].push_back(std::move(v));
                    }
    }

    QuiverCategory out;
    out.basis_paths.resize(n * n);
    std::vector<Matrix> quotient(n * n);
    std::vector<std::vector<std::string>> labels(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t k = s * n + t;
            Subspace ideal = Subspace::span(ideal_gens[k], paths[k].size());
            if (s == t && ideal.contains(unit_vector(paths[k].size(), index[k].at(Path{}))))
                fail(ErrorCode::IdentityCollapsed, "from_quiver: relations collapse the identity of " + q.vertices[s]);
            quotient[k] = ideal.quotient_map();
            for (auto idx : ideal.complement_indices()) {
                out.basis_paths[k].push_back(paths[k][idx]);
                labels[k].push_back(path_label(q, s, paths[k][idx]));
            }
        }

    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                const auto& gs = out.basis_paths[v * n + u];
                const auto& fs = out.basis_paths[w * n + v];
                const std::size_t wu = w * n + u;
                Matrix m(gs.size() * fs.size(), labels[wu].size());
                for (std::size_t g = 0; g < gs.size(); ++g)
                    for (std::size_t f = 0; f < fs.size(); ++f) {
                        Path full = fs[f];
                        full.insert(full.end(), gs[g].begin(), gs[g].end());
                        if (full.size() >= bound) continue;
                        Vector coords = quotient[wu] * unit_vector(paths[wu].size(), index[wu].at(full));
                        for (std::size_t c = 0; c < coords.size(); ++c) m(g * fs.size() + f, c) = coords[c];
                    }
                comp[(w * n + v) * n + u] = std::move(m);
            }
    std::vector<Vector> ids;
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t k = s * n + s;
        ids.push_back(quotient[k] * unit_vector(paths[k].size(), index[k].at(Path{})));
    }
    out.category = LinearCategory::from_structure(q.vertices, std::move(labels), std::move(comp), std::move(ids));
    return out;
}

LinearCategory from_matrix_spaces(std::vector<std::string> objects,
                                  const std::vector<std::size_t>& sizes,
                                  const std::vector<std::vector<Matrix>>& homs,
                                  std::vector<std::vector<std::string>> labels) {
    const std::size_t n = objects.size();
    if (sizes.size() != n || homs.size() != n * n)
        fail(ErrorCode::DimensionMismatch, "from_matrix_spaces: table sizes");
    if (labels.empty()) {
        labels.resize(n * n);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t k = 0; k < homs[v * n + u].size(); ++k)
                    labels[v * n + u].push_back("m" + std::to_string(k) + "_" + objects[v] + "_" + objects[u]);
    }
    // Flattened bases as columns, for coordinate solves.
    std::vector<Matrix> flat(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            const auto& basis = homs[v * n + u];
            Matrix f(sizes[u] * sizes[v], basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].rows() != sizes[u] || basis[k].cols() != sizes[v])
                    fail(ErrorCode::DimensionMismatch, "from_matrix_spaces: basis matrix shape");
                for (std::size_t e = 0; e < basis[k].entries().size(); ++e) f(e, k) = basis[k].entries()[e];
            }
            if (rank(f) != basis.size())
                fail(ErrorCode::InvalidArgument, "from_matrix_spaces: dependent basis");
            flat[v * n + u] = std::move(f);
        }
    auto coords = [&](std::size_t v, std::size_t u, const Matrix& m) {
        auto x = solve(flat[v * n + u], m.entries());
        if (!x) fail(ErrorCode::InvalidArgument, "from_matrix_spaces: hom spaces not closed under composition");
        return *x;
    };
    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                const auto& gs = homs[v * n + u];
                const auto& fs = homs[w * n + v];
                Matrix m(gs.size() * fs.size(), homs[w * n + u].size());
                for (std::size_t g = 0; g < gs.size(); ++g)
                    for (std::size_t f = 0; f < fs.size(); ++f) {
                        Vector c = coords(w, u, gs[g] * fs[f]);
                        for (std::size_t k = 0; k < c.size(); ++k) m(g * fs.size() + f, k) = c[k];
                    }
                comp[(w * n + v) * n + u] = std::move(m);
            }
    std::vector<Vector> ids;
    for (std::size_t u = 0; u < n; ++u) {
        auto x = solve(flat[u * n + u], Matrix::identity(sizes[u]).entries());
        if (!x) fail(ErrorCode::InvalidArgument, "from_matrix_spaces: identity missing for " + objects[u]);
        ids.push_back(*x);
    }
    return LinearCategory::from_structure(std::move(objects), std::move(labels), std::move(comp), std::move(ids));
}

LinearCategory discrete_category(const std::vector<std::string>& objects) {
    const std::size_t n = objects.size();
    std::vector<std::vector<std::string>> labels(n * n);
    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                std::size_t d = (w == v && v == u) ? 1 : 0;
                comp[(w * n + v) * n + u] = Matrix(d, (w == u) ? 1 : 0);
                if (d) comp[(w * n + v) * n + u](0, 0) = 1;
            }
    std::vector<Vector> ids;
    for (std::size_t u = 0; u < n; ++u) {
        labels[u * n + u] = {"1_" + objects[u]};
        ids.push_back({Rational(1)});
    }
    return LinearCategory::from_structure(objects, std::move(labels), std::move(comp), std::move(ids));
}

}  // namespace laxepi
