#include "laxepi/module.hpp"

#include <random>
#include <string>

#include "laxepi/error.hpp"

namespace laxepi {

struct Module::Data {
    LinearCategory cat;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> action;  // [v * n + u][k]
};

Module::Module() : d_(std::make_shared<Data>()) {}

Module Module::from_action(LinearCategory c, std::vector<std::size_t> dims,
                           std::vector<std::vector<Matrix>> action) {
    const std::size_t n = c.size();
    if (dims.size() != n) fail(ErrorCode::DimensionMismatch, "module: one dimension per object required");
    if (action.size() != n * n) fail(ErrorCode::DimensionMismatch, "module: action table size");
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            const auto& mats = action[v * n + u];
            if (mats.size() != c.hom_dim(v, u))
                fail(ErrorCode::DimensionMismatch, "module: one action matrix per basis morphism " +
                                                       c.object(v) + "->" + c.object(u));
            for (const auto& m : mats)
                if (m.rows() != dims[v] || m.cols() != dims[u])
                    fail(ErrorCode::DimensionMismatch, "module: action matrix shape for " +
                                                           c.object(v) + "->" + c.object(u));
        }
    Module x;
    x.d_ = std::make_shared<Data>(Data{std::move(c), std::move(dims), std::move(action)});
    return x;
}

Module Module::zero(const LinearCategory& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) action[v * n + u].assign(c.hom_dim(v, u), Matrix(0, 0));
    return from_action(c, std::vector<std::size_t>(n, 0), std::move(action));
}

const LinearCategory& Module::category() const noexcept { return d_->cat; }
std::size_t Module::dim(std::size_t u) const { return d_->dims.at(u); }
const std::vector<std::size_t>& Module::dims() const noexcept { return d_->dims; }

std::size_t Module::total_dim() const {
    std::size_t t = 0;
    for (auto d : d_->dims) t += d;
    return t;
}

bool Module::is_zero() const { return total_dim() == 0; }

const Matrix& Module::act_basis(std::size_t v, std::size_t u, std::size_t k) const {
    return d_->action.at(v * d_->cat.size() + u).at(k);
}

const std::vector<Matrix>& Module::act_basis(std::size_t v, std::size_t u) const {
    return d_->action.at(v * d_->cat.size() + u);
}

Matrix Module::act(std::size_t v, std::size_t u, const Vector& f) const {
    const auto& mats = act_basis(v, u);
    if (f.size() != mats.size()) fail(ErrorCode::DimensionMismatch, "module action: coordinate length");
    Matrix m(dim(v), dim(u));
    for (std::size_t k = 0; k < mats.size(); ++k)
        if (sgn(f[k]) != 0) m += f[k] * mats[k];
    return m;
}

bool operator==(const Module& a, const Module& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->dims == b.d_->dims && a.d_->action == b.d_->action && a.d_->cat == b.d_->cat;
}

ValidationReport validate_module(const Module& x) {
    ValidationReport rep;
    const LinearCategory& c = x.category();
    const std::size_t n = c.size();
    for (std::size_t u = 0; u < n; ++u)
        if (x.act(u, u, c.identity(u)) != Matrix::identity(x.dim(u)))
            rep.violations.push_back("identity of " + c.object(u) + " does not act as the identity");
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t g = 0; g < c.hom_dim(v, u); ++g)
                    for (std::size_t f = 0; f < c.hom_dim(w, v); ++f) {
                        Matrix lhs = x.act(w, u, c.compose_basis(w, v, u, g, f));
                        Matrix rhs = x.act_basis(w, v, f) * x.act_basis(v, u, g);
                        if (lhs != rhs)
                            rep.violations.push_back("contravariance fails for " + c.labels(v, u)[g] +
                                                     " after " + c.labels(w, v)[f]);
                    }
    return rep;
}

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (!(source_.category() == target_.category()))
        fail(ErrorCode::InvalidArgument, "module map between modules over different categories");
    const std::size_t n = source_.category().size();
    if (components_.size() != n) fail(ErrorCode::DimensionMismatch, "module map: one component per object");
    for (std::size_t u = 0; u < n; ++u)
        if (components_[u].rows() != target_.dim(u) || components_[u].cols() != source_.dim(u))
            fail(ErrorCode::DimensionMismatch, "module map: component shape");
}

ModuleMap ModuleMap::identity(const Module& x) {
    std::vector<Matrix> comps;
    for (auto d : x.dims()) comps.push_back(Matrix::identity(d));
    return ModuleMap(x, x, std::move(comps));
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < source.dims().size(); ++u) comps.emplace_back(target.dim(u), source.dim(u));
    return ModuleMap(source, target, std::move(comps));
}

ModuleMap ModuleMap::from_flat(const Module& source, const Module& target, const Vector& flat) {
    std::vector<Matrix> comps;
    std::size_t off = 0;
    for (std::size_t u = 0; u < source.dims().size(); ++u) {
        const std::size_t r = target.dim(u), c = source.dim(u);
        if (off + r * c > flat.size()) fail(ErrorCode::DimensionMismatch, "from_flat: vector too short");
        comps.emplace_back(r, c, std::vector<Rational>(flat.begin() + off, flat.begin() + off + r * c));
        off += r * c;
    }
    if (off != flat.size()) fail(ErrorCode::DimensionMismatch, "from_flat: vector too long");
    return ModuleMap(source, target, std::move(comps));
}

bool ModuleMap::is_zero() const {
    for (const auto& m : components_)
        if (!m.is_zero()) return false;
    return true;
}

bool ModuleMap::is_iso() const {
    for (const auto& m : components_)
        if (!laxepi::is_iso(m)) return false;
    return true;
}

bool ModuleMap::is_mono() const {
    for (const auto& m : components_)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool ModuleMap::is_epi() const {
    for (const auto& m : components_)
        if (rank(m) != m.rows()) return false;
    return true;
}

Vector ModuleMap::flatten() const {
    Vector v;
    for (const auto& m : components_) v.insert(v.end(), m.entries().begin(), m.entries().end());
    return v;
}

ModuleMap operator*(const ModuleMap& g, const ModuleMap& f) {
    if (f.target().dims() != g.source().dims())
        fail(ErrorCode::NotComposable, "module map composition: target of f is not the source of g");
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < f.components().size(); ++u) comps.push_back(g.component(u) * f.component(u));
    return ModuleMap(f.source(), g.target(), std::move(comps));
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
    if (a.source().dims() != b.source().dims() || a.target().dims() != b.target().dims())
        fail(ErrorCode::DimensionMismatch, "module map sum: different shapes");
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < a.components().size(); ++u) comps.push_back(a.component(u) + b.component(u));
    return ModuleMap(a.source(), a.target(), std::move(comps));
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) { return a + Rational(-1) * b; }

ModuleMap operator*(const Rational& s, const ModuleMap& f) {
    std::vector<Matrix> comps;
    for (const auto& m : f.components()) comps.push_back(s * m);
    return ModuleMap(f.source(), f.target(), std::move(comps));
}

ModuleMap inverse(const ModuleMap& f) {
    std::vector<Matrix> comps;
    for (const auto& m : f.components()) comps.push_back(inverse(m));
    return ModuleMap(f.target(), f.source(), std::move(comps));
}

ValidationReport validate_map(const ModuleMap& f) {
    ValidationReport rep;
    const Module& x = f.source();
    const Module& y = f.target();
    const LinearCategory& c = x.category();
    for (std::size_t v = 0; v < c.size(); ++v)
        for (std::size_t u = 0; u < c.size(); ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
                if (y.act_basis(v, u, k) * f.component(u) != f.component(v) * x.act_basis(v, u, k))
                    rep.violations.push_back("naturality fails at " + c.labels(v, u)[k]);
    return rep;
}

Submodule Submodule::zero(const Module& x) {
    Submodule s{x, {}};
    for (auto d : x.dims()) s.parts.emplace_back(d);
    return s;
}

Submodule Submodule::full(const Module& x) {
    Submodule s{x, {}};
    for (auto d : x.dims()) s.parts.push_back(Subspace::full(d));
    return s;
}

bool is_stable(const Submodule& s) {
    const Module& x = s.of;
    const LinearCategory& c = x.category();
    for (std::size_t v = 0; v < c.size(); ++v)
        for (std::size_t u = 0; u < c.size(); ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
                if (!s.parts[v].contains(image_of(x.act_basis(v, u, k), s.parts[u]))) return false;
    return true;
}

Submodule generated_submodule(const Module& x,
                              const std::vector<std::pair<std::size_t, Vector>>& elements) {
    const LinearCategory& c = x.category();
    std::vector<std::vector<Vector>> gens(c.size());
    for (const auto& [u, v] : elements) {
        if (v.size() != x.dim(u)) fail(ErrorCode::DimensionMismatch, "generated_submodule: element length");
        // Hom(V, U) acting on v already spans a submodule.
        for (std::size_t w = 0; w < c.size(); ++w)
            for (const auto& m : x.act_basis(w, u)) gens[w].push_back(m * v);
    }
    Submodule s{x, {}};
    for (std::size_t w = 0; w < c.size(); ++w) s.parts.push_back(Subspace::span(gens[w], x.dim(w)));
    return s;
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    Submodule s{a.of, {}};
    for (std::size_t u = 0; u < a.parts.size(); ++u) s.parts.push_back(sum(a.parts[u], b.parts[u]));
    return s;
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
    Submodule s{a.of, {}};
    for (std::size_t u = 0; u < a.parts.size(); ++u) s.parts.push_back(intersect(a.parts[u], b.parts[u]));
    return s;
}

bool contains(const Submodule& bigger, const Submodule& smaller) {
    for (std::size_t u = 0; u < bigger.parts.size(); ++u)
        if (!bigger.parts[u].contains(smaller.parts[u])) return false;
    return true;
}

Submodule preimage(const ModuleMap& f, const Submodule& s) {
    Submodule out{f.source(), {}};
    for (std::size_t u = 0; u < f.components().size(); ++u)
        out.parts.push_back(preimage(f.component(u), s.parts[u]));
    return out;
}

Module yoneda(const LinearCategory& c, std::size_t u) {
    const std::size_t n = c.size();
    std::vector<std::size_t> dims(n);
    for (std::size_t v = 0; v < n; ++v) dims[v] = c.hom_dim(v, u);
    std::vector<std::vector<Matrix>> action(n * n);
    // f: W -> V acts by h ↦ h∘f, Hom(V,U) -> Hom(W,U).
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t k = 0; k < c.hom_dim(w, v); ++k)
                action[w * n + v].push_back(c.pre_compose(w, v, u, unit_vector(c.hom_dim(w, v), k)));
    return Module::from_action(c, std::move(dims), std::move(action));
}

Module injective_module(const LinearCategory& c, std::size_t u) {
    const std::size_t n = c.size();
    std::vector<std::size_t> dims(n);
    for (std::size_t v = 0; v < n; ++v) dims[v] = c.hom_dim(u, v);
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t k = 0; k < c.hom_dim(w, v); ++k)
                action[w * n + v].push_back(c.post_compose(u, w, v, unit_vector(c.hom_dim(w, v), k)).transpose());
    return Module::from_action(c, std::move(dims), std::move(action));
}

ModuleMap yoneda_map(const Module& x, std::size_t u, const Vector& v) {
    const LinearCategory& c = x.category();
    if (v.size() != x.dim(u)) fail(ErrorCode::DimensionMismatch, "yoneda_map: element length");
    Module y = yoneda(c, u);
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < c.size(); ++w) {
        std::vector<Vector> cols;
        for (const auto& m : x.act_basis(w, u)) cols.push_back(m * v);
        comps.push_back(Matrix::from_columns(cols, x.dim(w)));
    }
    return ModuleMap(y, x, std::move(comps));
}

ModuleMap yoneda_morphism(const Module& yoneda_source, const Module& yoneda_target,
                          const Morphism& m) {
    const LinearCategory& c = yoneda_source.category();
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < c.size(); ++w) comps.push_back(c.post_compose(w, m.source, m.target, m.coords));
    return ModuleMap(yoneda_source, yoneda_target, std::move(comps));
}

Vector yoneda_element(const ModuleMap& f, std::size_t u) {
    return f.component(u) * f.source().category().identity(u);
}

HomSpace::HomSpace(Module source, Module target) : source_(std::move(source)), target_(std::move(target)) {
    const LinearCategory& c = source_.category();
    if (!(c == target_.category())) fail(ErrorCode::InvalidArgument, "hom between modules over different categories");
    const std::size_t n = c.size();
    std::vector<std::size_t> off(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) off[u + 1] = off[u] + target_.dim(u) * source_.dim(u);
    const std::size_t unknowns = off[n];

    std::size_t rows = 0;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) rows += c.hom_dim(v, u) * target_.dim(v) * source_.dim(u);
    // For f: V -> U, Y(f) φ_U - φ_V X(f) = 0.
    Matrix sys(rows, unknowns);
    std::size_t r0 = 0;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                const Matrix& yf = target_.act_basis(v, u, k);
                const Matrix& xf = source_.act_basis(v, u, k);
                const std::size_t dyv = target_.dim(v), dxu = source_.dim(u);
                const std::size_t dyu = target_.dim(u), dxv = source_.dim(v);
                for (std::size_t i = 0; i < dyv; ++i)
                    for (std::size_t j = 0; j < dxu; ++j) {
                        const std::size_t row = r0 + i * dxu + j;
                        for (std::size_t r = 0; r < dyu; ++r)
                            if (sgn(yf(i, r)) != 0) sys(row, off[u] + r * dxu + j) += yf(i, r);
                        for (std::size_t q = 0; q < dxv; ++q)
                            if (sgn(xf(q, j)) != 0) sys(row, off[v] + i * dxv + q) -= xf(q, j);
                    }
                r0 += dyv * dxu;
            }
    space_ = kernel_basis(sys);
    for (std::size_t i = 0; i < space_.dim(); ++i)
        basis_.push_back(ModuleMap::from_flat(source_, target_, space_.basis_vector(i)));
}

ModuleMap HomSpace::element(const Vector& coeffs) const {
    if (coeffs.size() != dim()) fail(ErrorCode::DimensionMismatch, "hom element: coefficient count");
    Vector flat(space_.ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        auto row = space_.basis().row(i);
        for (std::size_t j = 0; j < flat.size(); ++j) flat[j] += coeffs[i] * row[j];
    }
    return ModuleMap::from_flat(source_, target_, flat);
}

bool HomSpace::contains(const ModuleMap& f) const { return space_.contains(f.flatten()); }

Vector HomSpace::coordinates(const ModuleMap& f) const {
    Vector flat = f.flatten();
    if (!space_.contains(flat)) fail(ErrorCode::InvalidArgument, "map is not in this hom space");
    return space_.coordinates(flat);
}

HomSpace hom_modules(const Module& x, const Module& y) { return HomSpace(x, y); }

ModuleMap Cokernel::descend(const ModuleMap& phi) const {
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < section.size(); ++u) comps.push_back(phi.component(u) * section[u]);
    ModuleMap out(module, phi.target(), std::move(comps));
    ensure(out * projection == phi, "descend: map does not vanish on the relations");
    return out;
}

Kernel sub_to_module(const Submodule& s) {
    const Module& x = s.of;
    const LinearCategory& c = x.category();
    const std::size_t n = c.size();
    std::vector<std::size_t> dims;
    std::vector<Matrix> incl;
    for (std::size_t u = 0; u < n; ++u) {
        dims.push_back(s.parts[u].dim());
        incl.push_back(s.parts[u].basis_columns());
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                Matrix img = x.act_basis(v, u, k) * incl[u];
                Matrix m(dims[v], dims[u]);
                for (std::size_t j = 0; j < dims[u]; ++j) {
                    Vector coords = s.parts[v].coordinates(img.col(j));
                    for (std::size_t i = 0; i < dims[v]; ++i) m(i, j) = coords[i];
                }
                action[v * n + u].push_back(std::move(m));
            }
    Module sub = Module::from_action(c, std::move(dims), std::move(action));
    return {sub, ModuleMap(sub, x, std::move(incl))};
}

Cokernel quotient_by(const Submodule& s) {
    const Module& x = s.of;
    const LinearCategory& c = x.category();
    const std::size_t n = c.size();
    std::vector<std::size_t> dims;
    std::vector<Matrix> proj, sec;
    for (std::size_t u = 0; u < n; ++u) {
        proj.push_back(s.parts[u].quotient_map());
        sec.push_back(s.parts[u].quotient_section());
        dims.push_back(proj.back().rows());
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
                action[v * n + u].push_back(proj[v] * x.act_basis(v, u, k) * sec[u]);
    Module q = Module::from_action(c, std::move(dims), std::move(action));
    return {q, ModuleMap(x, q, std::move(proj)), std::move(sec)};
}

Submodule image(const ModuleMap& f) {
    Submodule s{f.target(), {}};
    for (const auto& m : f.components()) s.parts.push_back(image_basis(m));
    return s;
}

Submodule kernel_submodule(const ModuleMap& f) {
    Submodule s{f.source(), {}};
    for (const auto& m : f.components()) s.parts.push_back(kernel_basis(m));
    return s;
}

Kernel kernel(const ModuleMap& f) { return sub_to_module(kernel_submodule(f)); }

Cokernel cokernel(const ModuleMap& f) { return quotient_by(image(f)); }

DirectSum direct_sum(const LinearCategory& c, const std::vector<Module>& xs) {
    const std::size_t n = c.size();
    DirectSum out;
    out.summands = xs;
    if (xs.size() == 1) {
        out.module = xs[0];
        out.injections = {ModuleMap::identity(xs[0])};
        out.projections = {ModuleMap::identity(xs[0])};
        out.offsets = {std::vector<std::size_t>(n, 0)};
        return out;
    }
    std::vector<std::size_t> dims(n, 0);
    out.offsets.assign(xs.size(), std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i].category() == c)) fail(ErrorCode::InvalidArgument, "direct_sum: mixed categories");
        for (std::size_t u = 0; u < n; ++u) {
            out.offsets[i][u] = dims[u];
            dims[u] += xs[i].dim(u);
        }
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                Matrix m(dims[v], dims[u]);
                for (std::size_t i = 0; i < xs.size(); ++i)
                    m.set_block(out.offsets[i][v], out.offsets[i][u], xs[i].act_basis(v, u, k));
                action[v * n + u].push_back(std::move(m));
            }
    out.module = Module::from_action(c, dims, std::move(action));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Matrix> inj, pr;
        for (std::size_t u = 0; u < n; ++u) {
            Matrix a(dims[u], xs[i].dim(u));
            a.set_block(out.offsets[i][u], 0, Matrix::identity(xs[i].dim(u)));
            pr.push_back(a.transpose());
            inj.push_back(std::move(a));
        }
        out.injections.emplace_back(xs[i], out.module, std::move(inj));
        out.projections.emplace_back(out.module, xs[i], std::move(pr));
    }
    return out;
}

ModuleMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<Block>& blocks) {
    const std::size_t n = source.module.category().size();
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < n; ++u) comps.emplace_back(target.module.dim(u), source.module.dim(u));
    for (const auto& b : blocks)
        for (std::size_t u = 0; u < n; ++u) {
            const Matrix& m = b.map.component(u);
            if (m.rows() != target.summands.at(b.target_summand).dim(u) ||
                m.cols() != source.summands.at(b.source_summand).dim(u))
                fail(ErrorCode::DimensionMismatch, "block_map: block shape");
            const std::size_t r = target.offsets[b.target_summand][u], c = source.offsets[b.source_summand][u];
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (sgn(m(i, j)) != 0) comps[u](r + i, c + j) += m(i, j);
        }
    return ModuleMap(source.module, target.module, std::move(comps));
}

ModuleMap copair(const DirectSum& source, const Module& target, const std::vector<ModuleMap>& maps) {
    if (maps.size() != source.summands.size()) fail(ErrorCode::DimensionMismatch, "copair: one map per summand");
    const std::size_t n = target.category().size();
    std::vector<Matrix> comps;
    for (std::size_t u = 0; u < n; ++u) comps.emplace_back(target.dim(u), source.module.dim(u));
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t u = 0; u < n; ++u) comps[u].set_block(0, source.offsets[i][u], maps[i].component(u));
    return ModuleMap(source.module, target, std::move(comps));
}

DirectSum free_module(const LinearCategory& c, const std::vector<std::size_t>& objects) {
    std::vector<Module> reps(c.size());
    std::vector<bool> have(c.size(), false);
    std::vector<Module> xs;
    for (auto u : objects) {
        if (!have.at(u)) {
            reps[u] = yoneda(c, u);
            have[u] = true;
        }
        xs.push_back(reps[u]);
    }
    return direct_sum(c, xs);
}

namespace {

FreeCover cover_from(const Module& x, std::vector<std::size_t> objects,
                     const std::vector<Vector>& elements) {
    const LinearCategory& c = x.category();
    FreeCover cov;
    cov.free = free_module(c, objects);
    cov.objects = std::move(objects);
    std::vector<ModuleMap> maps;
    for (std::size_t i = 0; i < cov.objects.size(); ++i) {
        ModuleMap m = yoneda_map(x, cov.objects[i], elements[i]);
        maps.emplace_back(cov.free.summands[i], x, m.components());
    }
    cov.epi = copair(cov.free, x, maps);
    return cov;
}

}  // namespace

FreeCover free_cover(const Module& x) {
    std::vector<std::size_t> objects;
    std::vector<Vector> elements;
    for (std::size_t u = 0; u < x.dims().size(); ++u)
        for (std::size_t k = 0; k < x.dim(u); ++k) {
            objects.push_back(u);
            elements.push_back(unit_vector(x.dim(u), k));
        }
    return cover_from(x, std::move(objects), elements);
}

FreeCover padded_cover(const FreeCover& cover, std::size_t u, const Vector& v) {
    const Module& x = cover.epi.target();
    std::vector<std::size_t> objects = cover.objects;
    std::vector<Vector> elements;
    for (std::size_t i = 0; i < objects.size(); ++i)
        elements.push_back(yoneda_element(cover.epi * cover.free.injections[i], objects[i]));
    objects.push_back(u);
    elements.push_back(v);
    return cover_from(x, std::move(objects), elements);
}

std::size_t ext1_with_cover(const ModuleMap& cover, const Module& x) {
    Kernel omega = kernel(cover);
    HomSpace from_p = hom_modules(cover.source(), x);
    HomSpace from_omega = hom_modules(omega.module, x);
    std::vector<Vector> restricted;
    for (const auto& phi : from_p.basis()) restricted.push_back((phi * omega.inclusion).flatten());
    std::size_t ambient = 0;
    for (std::size_t u = 0; u < x.dims().size(); ++u) ambient += x.dim(u) * omega.module.dim(u);
    std::size_t r = restricted.empty() ? 0 : rank(Matrix::from_columns(restricted, ambient));
    return from_omega.dim() - r;
}

std::size_t ext1(const Module& l, const Module& x) { return ext1_with_cover(free_cover(l).epi, x); }

ProjectivityTest is_projective(const Module& x) {
    FreeCover cov = free_cover(x);
    HomSpace back = hom_modules(x, cov.free.module);
    std::vector<Vector> cols;
    for (const auto& s : back.basis()) cols.push_back((cov.epi * s).flatten());
    Vector rhs = ModuleMap::identity(x).flatten();
    ProjectivityTest out;
    if (rhs.empty()) {
        out.projective = true;
        out.section = ModuleMap::zero(x, cov.free.module);
        return out;
    }
    auto coeffs = solve(Matrix::from_columns(cols, rhs.size()), rhs);
    if (!coeffs) return out;
    out.projective = true;
    out.section = back.element(*coeffs);
    ensure(cov.epi * *out.section == ModuleMap::identity(x), "is_projective: section check failed");
    return out;
}

Subspace trace_span(const LinearCategory& c, const std::vector<std::size_t>& through, std::size_t v) {
    std::vector<Vector> gens;
    for (auto g : through)
        for (std::size_t b = 0; b < c.hom_dim(g, v); ++b)
            for (std::size_t a = 0; a < c.hom_dim(v, g); ++a) gens.push_back(c.compose_basis(v, g, v, b, a));
    return Subspace::span(gens, c.hom_dim(v, v));
}

namespace {

// tr of z ↦ (w ↦ z∘w) on the whole category algebra, for z in End(u).
Rational left_trace(const LinearCategory& c, std::size_t u, const Vector& z) {
    Rational t = 0;
    for (std::size_t w = 0; w < c.size(); ++w) {
        Matrix m = c.post_compose(w, u, u, z);
        for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    }
    return t;
}

// A semisimple module splits along the kernel of any endomorphism that
// is neither zero nor invertible. Pieces with no such basis endomorphism
// are kept whole.
void split_semisimple(const Module& x, std::vector<Module>& out) {
    if (x.is_zero()) return;
    HomSpace end = hom_modules(x, x);
    for (const auto& b : end.basis()) {
        for (const ModuleMap& phi : {b, b - ModuleMap::identity(x)}) {
            if (phi.is_zero() || phi.is_iso()) continue;
            split_semisimple(sub_to_module(kernel_submodule(phi)).module, out);
            split_semisimple(sub_to_module(image(phi)).module, out);
            return;
        }
    }
    out.push_back(x);
}

}  // namespace

RadicalData radical_and_simples(const LinearCategory& c) {
    const std::size_t n = c.size();
    RadicalData out;
    out.radical.resize(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            // x in Hom(v,u) pairs only with y in Hom(u,v), through tr L_{x∘y}.
            const std::size_t dx = c.hom_dim(v, u), dy = c.hom_dim(u, v);
            Matrix form(dy, dx);
            for (std::size_t y = 0; y < dy; ++y)
                for (std::size_t x = 0; x < dx; ++x) form(y, x) = left_trace(c, u, c.compose_basis(u, v, u, x, y));
            out.radical[v * n + u] = kernel_basis(form);
        }
    for (std::size_t u = 0; u < n; ++u) {
        Module y = yoneda(c, u);
        Submodule rad{y, {}};
        for (std::size_t v = 0; v < n; ++v) rad.parts.push_back(out.radical[v * n + u]);
        ensure(is_stable(rad), "radical is not a submodule of the representable");
        std::vector<Module> pieces;
        split_semisimple(quotient_by(rad).module, pieces);
        for (auto& piece : pieces) {
            bool seen = false;
            for (const auto& s : out.simples)
                if (find_isomorphism(s, piece)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                out.simples.push_back(std::move(piece));
                out.top_objects.push_back(u);
            }
        }
    }
    return out;
}

std::optional<ModuleMap> find_isomorphism(const Module& x, const Module& y) {
    if (x.dims() != y.dims()) return std::nullopt;
    if (x.is_zero()) return ModuleMap::zero(x, y);
    HomSpace h = hom_modules(x, y);
    for (const auto& f : h.basis())
        if (f.is_iso()) return f;
    if (h.dim() < 2) return std::nullopt;
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 24; ++trial) {
        Vector c(h.dim());
        for (auto& q : c) q = coef(rng);
        ModuleMap f = h.element(c);
        if (f.is_iso()) return f;
    }
    return std::nullopt;
}

}  // namespace laxepi
