#include "laxepi/report.hpp"

#include <algorithm>

#include "laxepi/decide.hpp"
#include "laxepi/factorization.hpp"

namespace laxepi {

namespace {

Json matrix_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

Json hom_dims(const LinearCategory& c) {
    Json a = Json::array();
    for (std::size_t v = 0; v < c.size(); ++v) {
        Json row = Json::array();
        for (std::size_t u = 0; u < c.size(); ++u) row.push_back(c.hom_dim(v, u));
        a.push_back(std::move(row));
    }
    return a;
}

Json dims_json(const Module& x) {
    Json o = Json::object();
    const LinearCategory& c = x.category();
    for (std::size_t u = 0; u < c.size(); ++u) o[c.object(u)] = x.dim(u);
    return o;
}

Json header(const Instance& inst, const char* command) {
    Json r = Json::object();
    r["command"] = command;
    r["instance"] = inst.name;
    r["instance_hash"] = instance_hash(inst);
    return r;
}

Json counits_json(const LinearCategory& target, const std::vector<CounitWitness>& ws) {
    Json a = Json::array();
    for (const auto& w : ws)
        a.push_back({{"object", target.object(w.object)},
                     {"source_dim", w.source_dim},
                     {"target_dim", w.target_dim},
                     {"rank", w.rank},
                     {"iso", w.iso}});
    return a;
}

Json kernels_json(const LinearCategory& c, const std::vector<KernelWitness>& ws) {
    Json a = Json::array();
    for (const auto& w : ws)
        a.push_back({{"object", c.object(w.object)}, {"kernel_dim", w.kernel_dim}, {"torsion", w.torsion}});
    return a;
}

Json torsion_json(const TorsionData& t) {
    Json o = Json::object();
    std::size_t total = 0;
    for (const auto& s : t.ideal) total += s.dim();
    o["ideal_dim"] = total;
    o["trivial"] = t.trivial();
    o["degenerate"] = t.degenerate();
    return o;
}

const NamedFunctor& functor_for(const Instance& inst, const std::string& id) { return inst.functor(id); }

TorsionData torsion_on(const Instance& inst, const std::string& category, const std::optional<std::string>& ideal) {
    if (!ideal) return whole_ideal(inst.category(category));
    const NamedIdeal& i = inst.ideal(*ideal);
    if (i.category != category)
        fail(ErrorCode::InvalidArgument,
             "ideal '" + *ideal + "' lives on '" + i.category + "', expected '" + category + "'");
    return inst.torsion(*ideal);
}

std::vector<Module> source_samples(const Instance& inst, const std::string& category) {
    const LinearCategory& c = inst.category(category);
    std::vector<Module> out;
    for (const auto& [id, m] : inst.modules)
        if (m.category == category) out.push_back(m.module);
    for (std::size_t u = 0; u < c.size(); ++u) {
        out.push_back(yoneda(c, u));
        out.push_back(injective_module(c, u));
    }
    for (const auto& s : radical_and_simples(c).simples) out.push_back(s);
    return out;
}

Json glax_json(const LinearFunctor& p, const GlaxVerdict& g) {
    Json w = Json::object();
    Json gen = Json::array();
    for (const auto& x : g.generation_witnesses)
        gen.push_back({{"object", p.target().object(x.object)},
                       {"localized_dim", x.localized_dim},
                       {"trace_dim", x.trace_dim},
                       {"torsion_cokernel", x.torsion_cokernel}});
    w["generation"] = std::move(gen);
    w["kernels"] = kernels_json(g.factorization.mid, g.kernels);
    w["mid_hom_dims"] = hom_dims(g.factorization.mid);
    return w;
}

Json check_functor(const Instance& inst, const std::string& subject, const std::string& kind,
                   const std::optional<std::string>& ideal, Json& r) {
    const NamedFunctor& nf = functor_for(inst, subject);
    const LinearFunctor& f = nf.functor;
    const LinearCategory& tgt = f.target();
    Json w = Json::object();

    if (kind == "ff-restriction") {
        RestrictionVerdict v = fully_faithful_restriction(f);
        r["verdict"] = v.verdict;
        w["counits"] = counits_json(tgt, v.counits);
        if (v.witness) w["failing_object"] = tgt.object(*v.witness);
    } else if (kind == "epi") {
        EpiVerdict v = is_epi(f);
        r["verdict"] = v.verdict;
        w["counits"] = counits_json(tgt, v.restriction.counits);
        Json pairs = Json::array();
        for (const auto& m : v.multiplication.pairs)
            pairs.push_back({{"from", tgt.object(m.from)},
                             {"to", tgt.object(m.to)},
                             {"tensor_dim", m.tensor_dim},
                             {"hom_dim", m.hom_dim},
                             {"rank", m.rank},
                             {"iso", m.iso}});
        w["multiplication"] = std::move(pairs);
        r["agrees"] = v.agrees;
    } else if (kind == "lax-epi") {
        LaxEpiVerdict v = is_lax_epi(f);
        r["verdict"] = v.verdict;
        w["s_epi"] = v.s_epi;
        Json tr = Json::object();
        for (std::size_t u = 0; u < v.trace_has_identity.size(); ++u) tr[tgt.object(u)] = bool(v.trace_has_identity[u]);
        w["trace_has_identity"] = std::move(tr);
        if (v.trace_witness) w["failing_object"] = tgt.object(*v.trace_witness);
        r["agrees"] = v.agrees;
    } else if (kind == "flat") {
        FlatVerdict v = ideal ? is_flat(f, torsion_on(inst, nf.target, ideal)) : is_flat(f);
        r["verdict"] = v.verdict;
        w["module_dims"] = v.module_dims;
        if (v.witness) w["witness"] = *v.witness;
    } else if (kind == "flat-epi") {
        FlatEpiVerdict v = is_flat_epi(f);
        r["verdict"] = v.verdict;
        w["epi"] = v.epi;
        w["flat"] = v.flat;
        w["tor_vanishes"] = v.tor_vanishes;
        r["agrees"] = v.agrees;
    } else if (kind == "cond-epi") {
        TorsionData t = torsion_on(inst, nf.target, ideal);
        r["torsion"] = torsion_json(t);
        CondEpiVerdict v = is_conditioned_epi(f, t);
        r["verdict"] = v.verdict;
        w["kernels"] = kernels_json(tgt, v.kernels);
        if (v.witness) w["failing_object"] = tgt.object(*v.witness);
    } else if (kind == "glax") {
        TorsionData t = torsion_on(inst, nf.target, ideal);
        r["torsion"] = torsion_json(t);
        GlaxVerdict v = is_generalized_lax_epi(f, t);
        r["verdict"] = v.verdict;
        w = glax_json(f, v);
        w["generation_holds"] = v.generation;
        w["conditioned"] = v.conditioned;
    } else if (kind == "abelian-localization") {
        TorsionData t = torsion_on(inst, nf.target, ideal);
        r["torsion"] = torsion_json(t);
        AbelianLocalizationVerdict v = is_abelian_localization(f, t);
        r["verdict"] = v.verdict;
        w["glax"] = v.glax.verdict;
        w["flat"] = v.flat.verdict;
        std::size_t members = std::count_if(v.filter.begin(), v.filter.end(), [](const FilterCheck& c) { return c.member; });
        w["filter_checked"] = v.filter.size();
        w["filter_members"] = members;
    } else if (kind == "kernel-law") {
        TorsionData t = torsion_on(inst, nf.target, ideal);
        r["torsion"] = torsion_json(t);
        KernelDescriptionReport k = check_kernel_description(f, t, source_samples(inst, nf.source));
        r["verdict"] = k.disagreements.empty();
        w["checked"] = k.checked;
        w["disagreements"] = k.disagreements;
    } else {
        fail(ErrorCode::InvalidArgument, "unknown check kind '" + kind + "'");
    }
    return w;
}

}  // namespace

const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> kinds = {
        "ff-restriction", "epi",        "lax-epi", "flat", "flat-epi", "cond-epi", "glax", "abelian-localization",
        "kernel-law",     "generalized-closed",      "ideal",
    };
    return kinds;
}

Json validate_report(const Instance& inst) {
    Json r = header(inst, "validate");
    Json w = Json::object();
    bool ok = true;
    auto section = [&](const char* name, auto&& each) {
        Json s = Json::object();
        each(s);
        w[name] = std::move(s);
    };
    auto entry = [&](Json& s, const std::string& id, const ValidationReport& v) {
        s[id] = {{"ok", v.ok()}, {"violations", v.violations}};
        ok = ok && v.ok();
    };
    section("categories", [&](Json& s) {
        for (const auto& [id, c] : inst.categories) entry(s, id, validate_category(c));
    });
    section("functors", [&](Json& s) {
        for (const auto& [id, f] : inst.functors) entry(s, id, validate_functor(f.functor));
    });
    section("modules", [&](Json& s) {
        for (const auto& [id, m] : inst.modules) entry(s, id, validate_module(m.module));
    });
    section("bimodules", [&](Json& s) {
        for (const auto& [id, b] : inst.bimodules) entry(s, id, validate_bimodule(b.bimodule));
    });
    // A non-idempotent ideal is reported, not fatal.
    section("ideals", [&](Json& s) {
        for (const auto& [id, i] : inst.ideals) {
            try {
                Json t = torsion_json(inst.torsion(id));
                t["ok"] = true;
                s[id] = std::move(t);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::IdealNotIdempotent) throw;
                s[id] = {{"ok", false}, {"error", code_name(e.code())}, {"message", e.what()}};
                ok = false;
            }
        }
    });
    r["verdict"] = ok;
    r["witnesses"] = std::move(w);
    return r;
}

Json factor_report(const Instance& inst, const std::string& functor, const std::optional<std::string>& ideal) {
    Json r = header(inst, "factor");
    const NamedFunctor& nf = inst.functor(functor);
    Factorization f;
    std::optional<TorsionData> t;
    if (ideal) {
        t = torsion_on(inst, nf.target, ideal);
        r["torsion"] = torsion_json(*t);
        f = canonical_factorization_localized(nf.functor, *t);
    } else {
        f = canonical_factorization(nf.functor);
    }
    Json w = Json::object();
    w["mid_hom_dims"] = hom_dims(f.mid);
    w["mid_total_dim"] = f.mid.total_dim();
    Json obj = Json::object();
    for (std::size_t u = 0; u < f.mid.size(); ++u) obj[f.mid.object(u)] = nf.functor.target().object(nf.functor.object(u));
    w["objects"] = std::move(obj);
    if (t) {
        Json images = Json::object();
        for (std::size_t u = 0; u < f.images.size(); ++u) images[f.mid.object(u)] = dims_json(f.images[u].closed.module);
        w["closed_images"] = std::move(images);
    }
    r["verdict"] = true;
    r["witnesses"] = std::move(w);

    // Round-trippable: source, mid and S: source -> mid.
    Instance out;
    out.name = inst.name + "/" + functor;
    out.categories[nf.source] = inst.category(nf.source);
    if (auto it = inst.quivers.find(nf.source); it != inst.quivers.end()) out.quivers[nf.source] = it->second;
    std::string mid = nf.source == "mid" ? "mid'" : "mid";
    out.categories[mid] = f.mid;
    out.functors["s"] = {nf.source, mid, f.s};
    if (f.i) {
        out.categories[nf.target] = inst.category(nf.target);
        out.functors["i"] = {mid, nf.target, *f.i};
    }
    r["factorization"] = Json::parse(serialize_instance(out, -1));
    return r;
}

Json check_report(const Instance& inst, const std::string& subject, const std::string& kind,
                  const std::optional<std::string>& ideal) {
    Json r = header(inst, "check");
    r["kind"] = kind;
    r["subject"] = subject;
    r["ideal"] = ideal ? Json(*ideal) : Json(nullptr);
    if (kind == "generalized-closed") {
        const NamedBimodule& b = inst.bimodule(subject);
        TorsionData t = torsion_on(inst, b.left, ideal);
        r["torsion"] = torsion_json(t);
        GenClosedReport g = is_generalized_closed_functor(b.bimodule, t, default_gencl_samples(b.bimodule, t));
        r["verdict"] = g.condition_i && g.coincide;
        r["witnesses"] = {{"condition_i", g.condition_i},
                          {"condition_ii", g.condition_ii},
                          {"condition_iii", g.condition_iii},
                          {"checks", g.checks}};
        r["agrees"] = g.coincide;
    } else if (kind == "ideal") {
        const NamedIdeal& i = inst.ideal(subject);
        TorsionData t = inst.torsion(subject);
        r["verdict"] = true;
        Json w = torsion_json(t);
        w["category"] = i.category;
        w["ideal_dims"] = Json::array();
        for (std::size_t v = 0; v < t.cat.size(); ++v) {
            Json row = Json::array();
            for (std::size_t u = 0; u < t.cat.size(); ++u) row.push_back(t.at(v, u).dim());
            w["ideal_dims"].push_back(std::move(row));
        }
        r["witnesses"] = std::move(w);
    } else {
        Json w = check_functor(inst, subject, kind, ideal, r);
        r["witnesses"] = std::move(w);
    }
    return r;
}

Json localize_report(const Instance& inst, const std::string& module, const std::string& ideal) {
    Json r = header(inst, "localize");
    const NamedModule& m = inst.module(module);
    TorsionData t = torsion_on(inst, m.category, ideal);
    r["torsion"] = torsion_json(t);
    Localization l = localize(t, m.module);
    ClosedTest ct = is_closed(t, l.closed.module);
    Kernel k = kernel(l.unit);
    Cokernel c = cokernel(l.unit);
    Json w = Json::object();
    w["input_dims"] = dims_json(m.module);
    w["closed_dims"] = dims_json(l.closed.module);
    w["unit_kernel_dims"] = dims_json(k.module);
    w["unit_cokernel_dims"] = dims_json(c.module);
    Json ranks = Json::object();
    Json unit = Json::object();
    const LinearCategory& cat = m.module.category();
    for (std::size_t u = 0; u < cat.size(); ++u) {
        ranks[cat.object(u)] = rank(l.unit.component(u));
        unit[cat.object(u)] = matrix_json(l.unit.component(u));
    }
    w["unit_ranks"] = std::move(ranks);
    w["input_closed"] = is_closed(t, m.module).closed;
    r["verdict"] = ct.closed;
    r["witnesses"] = std::move(w);
    r["unit"] = std::move(unit);

    Instance out;
    out.name = inst.name + "/" + module + "/" + ideal;
    out.categories[m.category] = inst.category(m.category);
    if (auto it = inst.quivers.find(m.category); it != inst.quivers.end()) out.quivers[m.category] = it->second;
    out.modules["closed"] = {m.category, l.closed.module};
    r["closed"] = Json::parse(serialize_instance(out, -1));
    return r;
}

Json hom_report(const Instance& inst, const std::string& from, const std::string& to,
                const std::optional<std::string>& ideal) {
    Json r = header(inst, "hom");
    const NamedModule& x = inst.module(from);
    const NamedModule& y = inst.module(to);
    if (x.category != y.category)
        fail(ErrorCode::InvalidArgument, "modules '" + from + "' and '" + to + "' live over different categories");
    Json w = Json::object();
    w["hom_dim"] = hom_modules(x.module, y.module).dim();
    if (ideal) {
        TorsionData t = torsion_on(inst, x.category, ideal);
        r["torsion"] = torsion_json(t);
        w["quotient_hom_dim"] = quotient_hom(t, x.module, y.module).dim();
    }
    w["source_dims"] = dims_json(x.module);
    w["target_dims"] = dims_json(y.module);
    r["verdict"] = true;
    r["witnesses"] = std::move(w);
    return r;
}

std::vector<ExpectationOutcome> evaluate_expectations(const Instance& inst) {
    std::vector<ExpectationOutcome> out;
    for (const auto& e : inst.expected) {
        ExpectationOutcome o;
        o.expected = e;
        try {
            std::optional<std::string> ideal;
            if (!e.ideal.empty()) ideal = e.ideal;
            Json r = check_report(inst, e.subject, e.kind, ideal);
            o.verdict = r["verdict"].get<bool>();
        } catch (const Error& err) {
            if (err.code() == ErrorCode::Invariant) throw;
            o.error = err.code();
        }
        o.ok = e.error ? o.error == e.error : (o.verdict && e.verdict && *o.verdict == *e.verdict);
        out.push_back(std::move(o));
    }
    return out;
}

void PropertyTally::record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
}

bool localization_laws_hold(const TorsionData& t, const Module& x, std::string* why) {
    auto no = [&](const char* what) {
        if (why) *why = what;
        return false;
    };
    Localization l = localize(t, x);
    if (!is_closed(t, l.closed.module).closed) return no("localization is not closed");
    if (!q_iso(t, l.unit)) return no("unit kernel or cokernel is not torsion");
    if (!localize(t, l.closed.module).unit.is_iso()) return no("localize is not idempotent");
    return true;
}

CorpusRun corpus_run(std::uint64_t seed, std::size_t count, Bounds bounds) {
    CorpusRun run;
    Json r = Json::object();
    r["command"] = "corpus run";
    r["seed"] = seed;
    r["count"] = count;
    bool ok = true;

    Json builtins = Json::array();
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        std::size_t passed = 0;
        Json failed = Json::array();
        for (const auto& o : evaluate_expectations(inst)) {
            if (o.ok) {
                ++passed;
                continue;
            }
            Json f = {{"kind", o.expected.kind}, {"subject", o.expected.subject}, {"ideal", o.expected.ideal}};
            f["got"] = o.error ? Json(code_name(*o.error)) : Json(*o.verdict);
            failed.push_back(std::move(f));
        }
        ok = ok && failed.empty();
        builtins.push_back({{"name", name},
                            {"instance_hash", instance_hash(inst)},
                            {"expectations", inst.expected.size()},
                            {"passed", passed},
                            {"failed", std::move(failed)}});
    }
    r["builtins"] = std::move(builtins);

    PropertyTally valid, lax_ff, small, laws, kernel_law, adjunction;
    SamplerStats total;
    std::string hashes;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = seed + i;
        const std::string tag = "seed " + std::to_string(s);
        SamplerStats stats;
        Instance inst = random_instance(s, bounds, &stats);
        total.category_tries += stats.category_tries;
        total.categories += stats.categories;
        total.category_fallbacks += stats.category_fallbacks;
        total.functor_tries += stats.functor_tries;
        total.functors += stats.functors;
        total.functor_fallbacks += stats.functor_fallbacks;
        total.module_tries += stats.module_tries;
        total.modules += stats.modules;
        total.module_corrections += stats.module_corrections;
        total.ideal_tries += stats.ideal_tries;
        total.ideals += stats.ideals;
        hashes += instance_hash(inst);

        const LinearFunctor& f = inst.functor("f").functor;
        const Module& x = inst.module("x").module;
        try {
            TorsionData t = inst.torsion("t");
            valid.record(validate_category(f.source()).ok() && validate_category(f.target()).ok() &&
                             validate_functor(f).ok() && validate_module(x).ok(),
                         tag);
            lax_ff.record(is_lax_epi(f).verdict == fully_faithful_restriction(f).verdict, tag);
            if (f.surjective_on_objects())
                small.record(is_epi(f).agrees, tag);
            else
                ++small.skipped;
            std::string why;
            Module fx = induce(f, x).module;
            laws.record(localization_laws_hold(t, fx, &why), tag + ": " + why);
            kernel_law.record(check_kernel_description(f, t, {x}).disagreements.empty(), tag);
            std::vector<Module> targets;
            for (std::size_t u = 0; u < f.target().size(); ++u) targets.push_back(yoneda(f.target(), u));
            AdjunctionReport a = adjunction_check(f, {x}, targets);
            adjunction.record(a.ok(), tag + (a.ok() ? "" : ": " + a.failures.front()));
        } catch (const Error& e) {
            valid.record(false, tag + ": " + code_name(e.code()) + " " + e.what());
        }
    }
    Json props = Json::object();
    auto put = [&](const char* name, const PropertyTally& p) {
        props[name] = {{"checked", p.checked}, {"skipped", p.skipped}, {"failures", p.failures}};
        ok = ok && p.failures.empty();
    };
    put("validators", valid);
    put("lax-epi = ff-restriction", lax_ff);
    put("counit = multiplication", small);
    put("localization laws", laws);
    put("kernel law", kernel_law);
    put("adjunction", adjunction);
    r["properties"] = std::move(props);
    r["sampler"] = {{"category_tries", total.category_tries},     {"categories", total.categories},
                    {"category_fallbacks", total.category_fallbacks}, {"functor_tries", total.functor_tries},
                    {"functors", total.functors},                 {"functor_fallbacks", total.functor_fallbacks},
                    {"module_tries", total.module_tries},         {"module_corrections", total.module_corrections},
                    {"ideal_tries", total.ideal_tries}};
    r["instance_hash"] = fnv1a_hex(hashes);
    r["verdict"] = ok;
    run.report = std::move(r);
    run.ok = ok;
    return run;
}

}  // namespace laxepi
