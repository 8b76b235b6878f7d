#include "laxepi/decide.hpp"

#include <algorithm>

#include "laxepi/error.hpp"

namespace laxepi {

namespace {

std::size_t total_rank(const ModuleMap& f) {
    std::size_t r = 0;
    for (const auto& m : f.components()) r += rank(m);
    return r;
}

// Matrix of Hom(x, y) -> Hom(res x, res y) in the two Hom bases.
Matrix restricted_hom_matrix(const LinearFunctor& s, const HomSpace& h, const HomSpace& hr) {
    std::vector<Vector> cols;
    for (const auto& b : h.basis()) {
        std::vector<Matrix> comps;
        for (std::size_t u = 0; u < s.source().size(); ++u) comps.push_back(b.component(s.object(u)));
        cols.push_back(hr.coordinates(ModuleMap(hr.source(), hr.target(), std::move(comps))));
    }
    return Matrix::from_columns(cols, hr.dim());
}

std::string dims_text(const Module& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.dims().size(); ++i) s += (i ? "," : "") + std::to_string(x.dim(i));
    return s + ")";
}

// Closed image of a source morphism under the localized factorization.
ModuleMap localized_morphism(const Factorization& f, std::size_t v, std::size_t u, const Vector& coords) {
    const std::size_t n = f.mid.size();
    return f.quotient_homs[v * n + u].element(f.s.hom_map(v, u) * coords);
}

}  // namespace

RestrictionVerdict fully_faithful_restriction(const LinearFunctor& t) {
    RestrictionVerdict out;
    out.verdict = true;
    for (std::size_t v = 0; v < t.target().size(); ++v) {
        ModuleMap e = counit(t, yoneda(t.target(), v));
        CounitWitness w{v, e.source().total_dim(), e.target().total_dim(), total_rank(e), e.is_iso()};
        if (!w.iso && out.verdict) {
            out.verdict = false;
            out.witness = v;
        }
        out.counits.push_back(w);
    }
    return out;
}

OracleResult restriction_hom_oracle(const LinearFunctor& t, const std::vector<Module>& extra) {
    const LinearCategory& d = t.target();
    OracleResult out;
    std::vector<Module> ys = extra;
    for (std::size_t v = 0; v < d.size(); ++v) ys.push_back(injective_module(d, v));
    std::vector<Module> rys;
    for (const auto& y : ys) rys.push_back(restrict(t, y));
    for (std::size_t v = 0; v < d.size(); ++v) {
        Module x = yoneda(d, v);
        Module rx = restrict(t, x);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            HomSpace h(x, ys[j]);
            HomSpace hr(rx, rys[j]);
            std::size_t r = h.dim() ? rank(restricted_hom_matrix(t, h, hr)) : 0;
            ++out.checked;
            if (r != h.dim() || r != hr.dim()) {
                out.verdict = false;
                out.failures.push_back("Hom(yoneda " + d.object(v) + ", sample " + std::to_string(j) + "): " +
                                       std::to_string(h.dim()) + " -> " + std::to_string(hr.dim()) + " rank " +
                                       std::to_string(r));
            }
        }
    }
    return out;
}

MultiplicationVerdict multiplication_map_iso(const LinearFunctor& s) {
    const LinearCategory& c = s.source();
    const LinearCategory& g = s.target();
    const std::size_t n = c.size();
    MultiplicationVerdict out;
    out.verdict = true;
    for (std::size_t from = 0; from < g.size(); ++from)
        for (std::size_t to = 0; to < g.size(); ++to) {
            // Index of b ⊗ a with b in G(SU, to), a in G(from, SU).
            std::vector<std::size_t> off(n + 1, 0);
            for (std::size_t u = 0; u < n; ++u)
                off[u + 1] = off[u] + g.hom_dim(s.object(u), to) * g.hom_dim(from, s.object(u));
            const std::size_t dim_t = off[n];
            auto at = [&](std::size_t u, std::size_t b, std::size_t a) {
                return off[u] + b * g.hom_dim(from, s.object(u)) + a;
            };
            std::vector<Vector> rel;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t k = 0; k < c.hom_dim(v, u); ++k) {
                        const std::size_t sv = s.object(v), su = s.object(u);
                        Vector image = s.hom_map(v, u).col(k);
                        for (std::size_t b = 0; b < g.hom_dim(su, to); ++b)
                            for (std::size_t a = 0; a < g.hom_dim(from, sv); ++a) {
                                Vector r(dim_t);
                                Vector bs = g.compose(sv, su, to, unit_vector(g.hom_dim(su, to), b), image);
                                for (std::size_t i = 0; i < bs.size(); ++i) r[at(v, i, a)] += bs[i];
                                Vector sa = g.compose(from, sv, su, image, unit_vector(g.hom_dim(from, sv), a));
                                for (std::size_t i = 0; i < sa.size(); ++i) r[at(u, b, i)] -= sa[i];
                                rel.push_back(std::move(r));
                            }
                    }
            Matrix mult(g.hom_dim(from, to), dim_t);
            for (std::size_t u = 0; u < n; ++u) {
                const std::size_t su = s.object(u);
                for (std::size_t b = 0; b < g.hom_dim(su, to); ++b)
                    for (std::size_t a = 0; a < g.hom_dim(from, su); ++a) {
                        Vector ba = g.compose_basis(from, su, to, b, a);
                        for (std::size_t i = 0; i < ba.size(); ++i) mult(i, at(u, b, a)) = ba[i];
                    }
            }
            MultiplicationWitness w;
            w.from = from;
            w.to = to;
            w.tensor_dim = dim_t - Subspace::span(rel, dim_t).dim();
            w.hom_dim = g.hom_dim(from, to);
            w.rank = rank(mult);
            w.iso = w.tensor_dim == w.hom_dim && w.rank == w.hom_dim;
            out.verdict = out.verdict && w.iso;
            out.pairs.push_back(w);
        }
    return out;
}

EpiVerdict is_epi(const LinearFunctor& s) {
    if (!s.surjective_on_objects())
        fail(ErrorCode::NotSurjectiveOnObjects, "is_epi: the functor is not surjective on objects");
    EpiVerdict out;
    out.restriction = fully_faithful_restriction(s);
    out.multiplication = multiplication_map_iso(s);
    out.verdict = out.restriction.verdict;
    out.agrees = out.restriction.verdict == out.multiplication.verdict;
    return out;
}

LaxEpiVerdict is_lax_epi(const LinearFunctor& t) {
    LaxEpiVerdict out;
    Factorization f = canonical_factorization(t);
    out.s_epi = is_epi(f.s).verdict;
    std::vector<std::size_t> images = t.object_map();
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    bool traces = true;
    for (std::size_t v = 0; v < t.target().size(); ++v) {
        bool ok = trace_span(t.target(), images, v).contains(t.target().identity(v));
        out.trace_has_identity.push_back(ok);
        if (!ok && traces) {
            traces = false;
            out.trace_witness = v;
        }
    }
    out.verdict = out.s_epi && traces;
    out.restriction_verdict = fully_faithful_restriction(t).verdict;
    out.agrees = out.verdict == out.restriction_verdict;
    return out;
}

FlatVerdict is_flat(const LinearFunctor& t) {
    const LinearCategory& c = t.source();
    const LinearCategory& d = t.target();
    const std::size_t n = c.size();
    LinearCategory op = opposite(c);
    FlatVerdict out;
    out.verdict = true;
    for (std::size_t v = 0; v < d.size(); ++v) {
        // Hom(V, T-) as a right module over the opposite: an op-morphism
        // u -> w is f: w -> u, acting h ↦ Tf∘h.
        std::vector<std::size_t> dims(n);
        for (std::size_t u = 0; u < n; ++u) dims[u] = d.hom_dim(v, t.object(u));
        std::vector<std::vector<Matrix>> action(n * n);
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t k = 0; k < op.hom_dim(w, u); ++k)
                    action[w * n + u].push_back(d.post_compose(v, t.object(u), t.object(w), t.hom_map(u, w).col(k)));
        Module m = Module::from_action(op, dims, std::move(action));
        out.module_dims.push_back(m.total_dim());
        if (out.verdict && !is_projective(m).projective) {
            out.verdict = false;
            out.witness = v;
        }
    }
    return out;
}

FlatVerdict is_flat(const LinearFunctor& p, const TorsionData& tt) {
    if (!(tt.cat == p.target())) fail(ErrorCode::InvalidArgument, "is_flat: torsion data is over another category");
    RadicalData rd = radical_and_simples(p.source());
    Bimodule b = regular_bimodule(p);
    FlatVerdict out;
    out.verdict = true;
    for (std::size_t i = 0; i < rd.simples.size(); ++i) {
        Module tor = tor1(rd.simples[i], b);
        out.module_dims.push_back(tor.total_dim());
        if (out.verdict && !is_torsion(tt, tor)) {
            out.verdict = false;
            out.witness = i;
        }
    }
    return out;
}

FlatEpiVerdict is_flat_epi(const LinearFunctor& phi) {
    if (phi.source().size() != 1 || phi.target().size() != 1)
        fail(ErrorCode::InvalidArgument, "is_flat_epi: expects a map between one-object categories");
    FlatEpiVerdict out;
    out.epi = is_epi(phi).verdict;
    out.flat = is_flat(phi).verdict;
    Bimodule b = regular_bimodule(phi);
    out.tor_vanishes = true;
    for (const auto& s : radical_and_simples(phi.source()).simples)
        if (!tor1(s, b).is_zero()) out.tor_vanishes = false;
    out.agrees = out.flat == out.tor_vanishes;
    out.verdict = out.epi && out.flat;
    return out;
}

CondEpiVerdict is_conditioned_epi(const LinearFunctor& s, const TorsionData& t) {
    if (!s.bijective_on_objects())
        fail(ErrorCode::NotBijectiveOnObjects, "is_conditioned_epi: the functor is not bijective on objects");
    if (!(t.cat == s.target())) fail(ErrorCode::InvalidArgument, "is_conditioned_epi: torsion data is over another category");
    const LinearCategory& g = s.target();
    std::vector<Module> reps;
    for (std::size_t v = 0; v < g.size(); ++v) {
        reps.push_back(yoneda(g, v));
        if (!is_closed(t, reps.back()).closed)
            fail(ErrorCode::RepresentableNotClosed,
                 "hypothesis violated: representable of " + g.object(v) + " is not closed");
    }
    CondEpiVerdict out;
    out.verdict = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
        Module k = kernel(counit(s, reps[v])).module;
        KernelWitness w{v, k.total_dim(), is_torsion(t, k)};
        if (!w.torsion && out.verdict) {
            out.verdict = false;
            out.witness = v;
        }
        out.kernels.push_back(w);
    }
    return out;
}

std::vector<Module> localized_quotient_family(const TorsionData& t, std::size_t max_generators) {
    const LinearCategory& c = t.cat;
    std::vector<Module> out;
    auto add = [&](const Module& m) {
        for (const auto& e : out)
            if (e == m) return;
        out.push_back(m);
    };
    for (std::size_t g = 0; g < c.size(); ++g) {
        Module y = yoneda(c, g);
        std::vector<std::pair<std::size_t, Vector>> basis;
        for (std::size_t v = 0; v < c.size(); ++v)
            for (std::size_t k = 0; k < y.dim(v); ++k) basis.emplace_back(v, unit_vector(y.dim(v), k));
        std::vector<Submodule> seen;
        std::vector<std::size_t> pick;
        // Subsets of size <= max_generators in lexicographic order.
        auto visit = [&](auto&& self, std::size_t start) -> void {
            std::vector<std::pair<std::size_t, Vector>> gens;
            for (auto i : pick) gens.push_back(basis[i]);
            Submodule sub = generated_submodule(y, gens);
            if (std::find(seen.begin(), seen.end(), sub) == seen.end()) {
                seen.push_back(sub);
                add(localize(t, quotient_by(sub).module).closed.module);
            }
            if (pick.size() == max_generators) return;
            for (std::size_t i = start; i < basis.size(); ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        visit(visit, 0);
    }
    return out;
}

OracleResult conditioned_epi_oracle(const LinearFunctor& s, const TorsionData& t, std::size_t max_generators) {
    std::vector<Module> family = localized_quotient_family(t, max_generators);
    for (std::size_t g = 0; g < s.target().size(); ++g) {
        Module m = localize(t, induce(s, restrict(s, yoneda(s.target(), g))).module).closed.module;
        if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
    }
    std::vector<Module> res;
    for (const auto& x : family) res.push_back(restrict(s, x));
    OracleResult out;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            HomSpace h(family[i], family[j]);
            HomSpace hr(res[i], res[j]);
            std::size_t r = h.dim() ? rank(restricted_hom_matrix(s, h, hr)) : 0;
            ++out.checked;
            if (r != hr.dim()) {
                out.verdict = false;
                out.failures.push_back("not full on " + dims_text(family[i]) + " -> " + dims_text(family[j]) + ": rank " +
                                       std::to_string(r) + " of " + std::to_string(hr.dim()));
            }
        }
    return out;
}

namespace {

std::vector<GenerationWitness> generation_check(const LinearFunctor& p, const TorsionData& tt, const Factorization& f) {
    const LinearCategory& d = p.target();
    std::vector<GenerationWitness> out;
    for (std::size_t v = 0; v < d.size(); ++v) {
        Module ly = localize(tt, yoneda(d, v)).closed.module;
        Submodule trace = Submodule::zero(ly);
        for (const auto& img : f.images) {
            HomSpace h(img.closed.module, ly);
            for (const auto& b : h.basis()) trace = submodule_sum(trace, image(b));
        }
        std::size_t tdim = 0;
        for (const auto& part : trace.parts) tdim += part.dim();
        out.push_back({v, ly.total_dim(), tdim, is_torsion(tt, quotient_by(trace).module)});
    }
    return out;
}

}  // namespace

GlaxVerdict is_generalized_lax_epi(const LinearFunctor& p, const TorsionData& tt) {
    GlaxVerdict out;
    out.factorization = canonical_factorization_localized(p, tt);
    const Factorization& f = out.factorization;
    out.generation_witnesses = generation_check(p, tt, f);
    out.generation = std::all_of(out.generation_witnesses.begin(), out.generation_witnesses.end(),
                                 [](const GenerationWitness& w) { return w.torsion_cokernel; });
    out.conditioned = true;
    for (std::size_t g = 0; g < f.mid.size(); ++g) {
        Module k = kernel(counit(f.s, yoneda(f.mid, g))).module;
        Module ik = tensor_bimodule(k, *f.embedding).module;
        KernelWitness w{g, k.total_dim(), is_torsion(tt, ik)};
        out.conditioned = out.conditioned && w.torsion;
        out.kernels.push_back(w);
    }
    out.verdict = out.generation && out.conditioned;
    return out;
}

Module restrict_to_source(const Factorization& f, const Module& closed) {
    return restrict(f.s, bimodule_hom(*f.embedding, closed));
}

OracleResult glax_oracle(const LinearFunctor& p, const TorsionData& tt, const GlaxVerdict& v) {
    const Factorization& f = v.factorization;
    const LinearCategory& d = p.target();
    const std::size_t n = p.source().size();
    std::vector<Module> family;
    for (std::size_t g = 0; g < d.size(); ++g) {
        family.push_back(localize(tt, yoneda(d, g)).closed.module);
        family.push_back(localize(tt, injective_module(d, g)).closed.module);
    }
    std::vector<Module> star;
    std::vector<std::vector<HomSpace>> from_images(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        star.push_back(restrict_to_source(f, family[i]));
        for (std::size_t u = 0; u < n; ++u) from_images[i].emplace_back(f.images[u].closed.module, family[i]);
    }
    OracleResult out;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            HomSpace h(family[i], family[j]);
            HomSpace hs(star[i], star[j]);
            std::vector<Vector> cols;
            for (const auto& b : h.basis()) {
                std::vector<Matrix> comps;
                for (std::size_t u = 0; u < n; ++u) {
                    std::vector<Vector> c;
                    for (const auto& phi : from_images[i][u].basis()) c.push_back(from_images[j][u].coordinates(b * phi));
                    comps.push_back(Matrix::from_columns(c, from_images[j][u].dim()));
                }
                cols.push_back(hs.coordinates(ModuleMap(star[i], star[j], std::move(comps))));
            }
            std::size_t r = cols.empty() ? 0 : rank(Matrix::from_columns(cols, hs.dim()));
            ++out.checked;
            if (r != h.dim() || r != hs.dim()) {
                out.verdict = false;
                out.failures.push_back("restriction not bijective on sample pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + "): " + std::to_string(h.dim()) + " -> " +
                                       std::to_string(hs.dim()) + " rank " + std::to_string(r));
            }
        }
    return out;
}

bool in_induced_filter(const LinearFunctor& p, const TorsionData& tt, const Submodule& sub) {
    Kernel k = sub_to_module(sub);
    Induced a = induce(p, k.module);
    Induced b = induce(p, sub.of);
    return q_iso(tt, induce_map(a, b, k.inclusion));
}

AbelianLocalizationVerdict is_abelian_localization(const LinearFunctor& p, const TorsionData& tt) {
    AbelianLocalizationVerdict out;
    out.glax = is_generalized_lax_epi(p, tt);
    out.flat = is_flat(p, tt);
    out.verdict = out.glax.verdict && out.flat.verdict;
    if (!out.verdict) return out;
    const LinearCategory& c = p.source();
    for (std::size_t u = 0; u < c.size(); ++u) {
        Module y = yoneda(c, u);
        std::size_t idx = 0;
        for (std::size_t v = 0; v < c.size(); ++v)
            for (std::size_t k = 0; k < y.dim(v); ++k, ++idx) {
                Submodule sub = generated_submodule(y, {{v, unit_vector(y.dim(v), k)}});
                out.filter.push_back({u, idx, in_induced_filter(p, tt, sub)});
            }
    }
    return out;
}

KernelDescriptionReport check_kernel_description(const LinearFunctor& p, const TorsionData& tt,
                                                 const std::vector<Module>& samples) {
    KernelDescriptionReport out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Module ind = induce(p, samples[i]).module;
        bool killed = localize(tt, ind).closed.module.is_zero();
        bool torsion = is_torsion(tt, ind);
        ++out.checked;
        if (killed != torsion)
            out.disagreements.push_back("sample " + std::to_string(i) + " " + dims_text(samples[i]) +
                                        ": localization zero = " + (killed ? "true" : "false") +
                                        ", induced torsion = " + (torsion ? "true" : "false"));
    }
    return out;
}

bool condition_G(const LinearFunctor& p, const TorsionData& tt) {
    Factorization f = canonical_factorization_localized(p, tt);
    for (const auto& w : generation_check(p, tt, f))
        if (!w.torsion_cokernel) return false;
    return true;
}

ConditionFVerdict condition_F(const LinearFunctor& p, const Factorization& f, const TorsionData& tt, std::size_t u,
                              std::size_t u2, const ModuleMap& gamma) {
    const LinearCategory& c = p.source();
    const std::size_t n = c.size();
    if (u >= n || u2 >= n) fail(ErrorCode::InvalidArgument, "condition_F: object out of range");
    const Module& tu = f.images[u].closed.module;
    const Module& tu2 = f.images[u2].closed.module;
    if (!(gamma.source().category() == tt.cat) || gamma.source().dims() != tu.dims() ||
        gamma.target().dims() != tu2.dims() || !validate_map(gamma).ok())
        fail(ErrorCode::InvalidQuotientHom, "condition_F: gamma is not a map between the localized images");
    ConditionFVerdict out;
    Submodule joint = Submodule::zero(tu);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Vector> t_cols, g_cols;
        for (std::size_t k = 0; k < c.hom_dim(v, u2); ++k)
            t_cols.push_back(localized_morphism(f, v, u2, unit_vector(c.hom_dim(v, u2), k)).flatten());
        for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
            g_cols.push_back((gamma * localized_morphism(f, v, u, unit_vector(c.hom_dim(v, u), k))).flatten());
        std::size_t rows = 0;
        const Module& tv = f.images[v].closed.module;
        for (std::size_t w = 0; w < tv.dims().size(); ++w) rows += tv.dim(w) * tu2.dim(w);
        Matrix tm = Matrix::from_columns(t_cols, rows);
        Matrix gm = Matrix::from_columns(g_cols, rows);
        Subspace kv = preimage(gm, image_basis(tm));
        std::vector<Vector> sols;
        for (std::size_t j = 0; j < kv.dim(); ++j) {
            Vector uj = kv.basis_vector(j);
            auto sol = solve(tm, gm * uj);
            ensure(sol.has_value(), "condition_F: preimage element without a solution");
            sols.push_back(*sol);
            joint = submodule_sum(joint, image(localized_morphism(f, v, u, uj)));
        }
        out.k.push_back(std::move(kv));
        out.solutions.push_back(std::move(sols));
    }
    out.verdict = is_torsion(tt, quotient_by(joint).module);
    return out;
}

UlmerCheck ulmer_certificate_check(const LinearFunctor& p, const Factorization& f, const TorsionData& tt,
                                   const UlmerCertificate& cert) {
    const LinearCategory& c = p.source();
    const LinearCategory& d = p.target();
    UlmerCheck out;
    out.relations_vanish = true;
    for (std::size_t j = 0; j < cert.v.size(); ++j) {
        if (cert.uij.size() != cert.v.size() || cert.uij[j].size() != cert.u.size())
            fail(ErrorCode::DimensionMismatch, "ulmer certificate: u_ij table shape");
        Vector sum(c.hom_dim(cert.v[j], cert.target));
        for (std::size_t i = 0; i < cert.u.size(); ++i) {
            const Morphism& ui = cert.u[i];
            if (ui.target != cert.target) fail(ErrorCode::NotComposable, "ulmer certificate: u_i does not end at U");
            Vector term = c.compose(cert.v[j], ui.source, cert.target, ui.coords, cert.uij[j][i]);
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += term[k];
        }
        if (!is_zero(sum)) out.relations_vanish = false;
    }
    std::vector<Module> ui_mods, vj_mods;
    for (const auto& ui : cert.u) ui_mods.push_back(f.images[ui.source].closed.module);
    for (auto vj : cert.v) vj_mods.push_back(f.images[vj].closed.module);
    DirectSum su = direct_sum(d, ui_mods);
    DirectSum sv = direct_sum(d, vj_mods);
    std::vector<ModuleMap> gs;
    for (const auto& ui : cert.u) gs.push_back(localized_morphism(f, ui.source, ui.target, ui.coords));
    ModuleMap g = copair(su, f.images[cert.target].closed.module, gs);
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < cert.v.size(); ++j)
        for (std::size_t i = 0; i < cert.u.size(); ++i)
            blocks.push_back({i, j, localized_morphism(f, cert.v[j], cert.u[i].source, cert.uij[j][i])});
    ModuleMap fm = block_map(sv, su, blocks);
    Kernel k = sub_to_module(kernel_submodule(g));
    Submodule im = preimage(k.inclusion, image(fm));
    Module homology = quotient_by(im).module;
    out.homology_dim = homology.total_dim();
    out.exact = is_torsion(tt, homology);
    out.verdict = out.relations_vanish && out.exact;
    return out;
}

GenClosedSamples default_gencl_samples(const Bimodule& f, const TorsionData& t) {
    const LinearCategory& g = t.cat;
    GenClosedSamples s;
    for (std::size_t v = 0; v < g.size(); ++v) {
        Module y = yoneda(g, v);
        Module inj = injective_module(g, v);
        Kernel j = sub_to_module(j_submodule(t, v));
        s.torsion.push_back(quotient_by(j_submodule(t, v)).module);
        s.torsion.push_back(sub_to_module(torsion_submodule(t, y)).module);
        s.torsion.push_back(sub_to_module(torsion_submodule(t, inj)).module);
        s.torsion_cokernel_monos.push_back(j.inclusion);
        s.q_isos.push_back(j.inclusion);
        s.q_isos.push_back(localize(t, y).unit);
        s.q_isos.push_back(localize(t, inj).unit);
        s.q_isos.push_back(quotient_by(torsion_submodule(t, y)).projection);
    }
    const LinearCategory& h = f.right;
    for (std::size_t v = 0; v < h.size(); ++v) {
        s.targets.push_back(yoneda(h, v));
        s.targets.push_back(injective_module(h, v));
    }
    for (const auto& m : radical_and_simples(h).simples) s.targets.push_back(m);
    return s;
}

GenClosedReport is_generalized_closed_functor(const Bimodule& f, const TorsionData& t, const GenClosedSamples& s) {
    if (!(f.left == t.cat)) fail(ErrorCode::InvalidArgument, "generalized closed functor: torsion data is not over the left category");
    GenClosedReport out;
    auto tensor_iso = [&](const ModuleMap& m) {
        Tensored a = tensor_bimodule(m.source(), f);
        Tensored b = tensor_bimodule(m.target(), f);
        return tensor_map(a, b, m).is_iso();
    };
    out.condition_i = true;
    for (const auto& l : s.torsion) {
        out.condition_i = out.condition_i && tensor_bimodule(l, f).module.is_zero();
        ++out.checks;
    }
    for (const auto& m : s.torsion_cokernel_monos) {
        out.condition_i = out.condition_i && tensor_iso(m);
        ++out.checks;
    }
    out.condition_ii = true;
    for (const auto& a : s.targets) {
        out.condition_ii = out.condition_ii && is_closed(t, bimodule_hom(f, a)).closed;
        ++out.checks;
    }
    out.condition_iii = true;
    for (const auto& m : s.q_isos) {
        out.condition_iii = out.condition_iii && tensor_iso(m);
        ++out.checks;
    }
    out.coincide = out.condition_i == out.condition_ii && out.condition_ii == out.condition_iii;
    return out;
}

}  // namespace laxepi
