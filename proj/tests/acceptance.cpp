// Acceptance gate: one PASS/FAIL line per criterion. Sample counts and
// tolerances are fixed here; exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "corner_oracle.hpp"
#include "laxepi/corpus.hpp"
#include "laxepi/decide.hpp"
#include "laxepi/report.hpp"

using namespace laxepi;

namespace {

constexpr std::size_t kRandomFunctors = 200;
constexpr std::size_t kQuotientFunctors = 100;
constexpr std::size_t kSurjectiveFunctors = 200;
constexpr std::size_t kLocalizationPairs = 500;
constexpr std::size_t kAdjunctionInstances = 500;
constexpr std::size_t kKernelLawModules = 100;
constexpr std::size_t kMatrices = 10000;
constexpr std::size_t kMaxMatrixDim = 8;
constexpr double kCriterion1Seconds = 60.0;
// Generators per quotient in the conditioned-epi oracle family; every
// representable in the builtins has dimension at most this.
constexpr std::size_t kOracleGenerators = 5;

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string first(const std::vector<std::string>& fails) { return fails.empty() ? "" : "; first: " + fails.front(); }

std::vector<Module> samples(const LinearCategory& c) {
    std::vector<Module> out;
    for (std::size_t u = 0; u < c.size(); ++u) {
        out.push_back(yoneda(c, u));
        out.push_back(injective_module(c, u));
    }
    for (const auto& s : radical_and_simples(c).simples) out.push_back(s);
    return out;
}

// Ideals of an instance on the given category, plus the whole ideal.
std::vector<std::pair<std::string, TorsionData>> ideals_on(const Instance& inst, const std::string& category) {
    std::vector<std::pair<std::string, TorsionData>> out;
    out.emplace_back("(whole)", whole_ideal(inst.category(category)));
    for (const auto& [id, i] : inst.ideals) {
        if (i.category != category) continue;
        try {
            out.emplace_back(id, inst.torsion(id));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IdealNotIdempotent) throw;
        }
    }
    return out;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::size_t builtin_checked = 0, random_checked = 0, lax_true = 0;
    std::vector<std::string> fails;
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        for (const auto& [id, f] : inst.functors) {
            bool lax = is_lax_epi(f.functor).verdict;
            lax_true += lax;
            if (lax != fully_faithful_restriction(f.functor).verdict) fails.push_back(name + "/" + id);
            ++builtin_checked;
        }
    }
    for (std::size_t i = 0; i < kRandomFunctors; ++i) {
        Instance inst = random_instance(1000 + i);
        const LinearFunctor& f = inst.functor("f").functor;
        bool lax = is_lax_epi(f).verdict;
        lax_true += lax;
        if (lax != fully_faithful_restriction(f).verdict) fails.push_back("seed " + std::to_string(1000 + i));
        ++random_checked;
    }
    // Quotient projections, mostly lax epimorphisms.
    Sampler s(1500);
    for (std::size_t i = 0; i < kQuotientFunctors; ++i) {
        LinearFunctor f = s.quotient(s.category()).second;
        bool lax = is_lax_epi(f).verdict;
        lax_true += lax;
        if (lax != fully_faithful_restriction(f).verdict) fails.push_back("quotient " + std::to_string(i));
        ++random_checked;
    }
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "lax-epi = ff-restriction on %zu builtin + %zu random functors (%zu true), %zu disagreements, %.1fs < %.0fs",
                  builtin_checked, random_checked, lax_true, fails.size(), d.count(), kCriterion1Seconds);
    line(1, fails.empty() && random_checked >= kRandomFunctors + kQuotientFunctors && builtin_checked > 0 && d.count() < kCriterion1Seconds,
         buf + first(fails));
}

void criterion2() {
    Sampler s(2000);
    std::size_t checked = 0, epi_count = 0;
    std::vector<std::string> fails;
    while (checked < kSurjectiveFunctors) {
        QuiverData tgt = s.category();
        QuiverData src = s.category(tgt.category.category.size());
        LinearFunctor f;
        // Half quotient projections, which are often epimorphisms.
        if (checked % 2 == 0) {
            f = s.quotient(src).second;
        } else {
            f = s.functor(src, tgt.category.category, ObjectShape::Surjective);
        }
        EpiVerdict v = is_epi(f);
        epi_count += v.verdict;
        if (v.restriction.verdict != v.multiplication.verdict) fails.push_back("sample " + std::to_string(checked));
        ++checked;
    }
    line(2, fails.empty(),
         "counit-on-representables = multiplication iso on " + std::to_string(checked) + " surjective functors (" +
             std::to_string(epi_count) + " epi), " + std::to_string(fails.size()) + " disagreements" + first(fails));
}

void criterion3() {
    std::size_t checked = 0, skipped = 0, family = 0;
    std::vector<std::string> fails;
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        for (const auto& [id, f] : inst.functors) {
            if (!f.functor.bijective_on_objects()) continue;
            for (const auto& [ideal, t] : ideals_on(inst, f.target)) {
                CondEpiVerdict v;
                try {
                    v = is_conditioned_epi(f.functor, t);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::RepresentableNotClosed) throw;
                    ++skipped;
                    continue;
                }
                OracleResult o = conditioned_epi_oracle(f.functor, t, kOracleGenerators);
                family += o.checked;
                if (o.verdict != v.verdict) fails.push_back(name + "/" + id + "/" + ideal);
                ++checked;
            }
        }
    }
    line(3, fails.empty() && checked > 0,
         "conditioned-epi decision = S_*R fullness oracle on " + std::to_string(checked) + " builtin (functor, ideal) pairs (" +
             std::to_string(family) + " oracle checks, " + std::to_string(skipped) +
             " skipped with non-closed representables), " + std::to_string(fails.size()) + " disagreements" + first(fails));
}

void criterion4() {
    Instance inst = builtin("corner_T2");
    const LinearFunctor& p = inst.functor("p").functor;
    TorsionData t = inst.torsion("e11");
    bool glax = is_generalized_lax_epi(p, t).verdict;
    bool abelian = is_abelian_localization(p, t).verdict;
    const LinearCategory& a = inst.category("T2");
    Vector e = {Rational(1), Rational(0), Rational(0)};
    std::vector<Vector> eae = corner::corner_basis(a, e);
    std::vector<Module> xs = samples(a);
    for (const auto& [id, m] : inst.modules)
        if (m.category == "T2") xs.push_back(m.module);
    std::size_t pairs = 0, mismatches = 0;
    for (const auto& x : xs)
        for (const auto& y : xs) {
            std::size_t oracle =
                corner::corner_hom_dim(corner::restrict_to_corner(x, eae, e), corner::restrict_to_corner(y, eae, e));
            mismatches += quotient_hom(t, x, y).dim() != oracle;
            ++pairs;
        }
    line(4, glax && abelian && mismatches == 0 && pairs > 0,
         std::string("corner_T2: glax ") + (glax ? "true" : "false") + ", abelian localization " + (abelian ? "true" : "false") +
             ", quotient Hom = eAe Hom on " + std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
             " mismatches (exact)");
}

void criterion5() {
    LinearFunctor d = builtin("diagonal_k_kk").functor("d").functor;
    LinearFunctor s = builtin("surjection_T2_semisimple").functor("s").functor;
    bool ok = !is_epi(d).verdict && is_flat(d).verdict && !is_flat_epi(d).verdict && is_epi(s).verdict &&
              !is_flat(s).verdict && !is_flat_epi(s).verdict;
    line(5, ok,
         "diagonal_k_kk: epi false, flat true, flat-epi false; surjection_T2_semisimple: epi true, flat false, flat-epi false");
}

void criterion6() {
    Sampler s(6000);
    std::size_t checked = 0, degenerate = 0, trivial = 0, nonzero = 0;
    std::vector<std::string> fails;
    while (checked < kLocalizationPairs) {
        QuiverData q = s.category();
        Module x = s.module(q);
        SampledIdeal t = s.ideal(q);
        degenerate += t.torsion.degenerate();
        trivial += t.torsion.trivial();
        std::string why;
        if (!localization_laws_hold(t.torsion, x, &why)) fails.push_back("pair " + std::to_string(checked) + ": " + why);
        nonzero += !localize(t.torsion, x).closed.module.is_zero();
        ++checked;
    }
    line(6, fails.empty(),
         "localization laws on " + std::to_string(checked) + " (module, ideal) pairs (" + std::to_string(nonzero) +
             " nonzero localizations, " + std::to_string(trivial) + " trivial, " + std::to_string(degenerate) +
             " degenerate ideals), " + std::to_string(fails.size()) + " failures" + first(fails));
}

void criterion7() {
    std::size_t checked = 0;
    std::vector<std::string> fails;
    for (std::size_t i = 0; i < kAdjunctionInstances; ++i) {
        Instance inst = random_instance(7000 + i);
        const LinearFunctor& f = inst.functor("f").functor;
        std::vector<Module> targets;
        for (std::size_t u = 0; u < f.target().size(); ++u) targets.push_back(yoneda(f.target(), u));
        targets.push_back(injective_module(f.target(), 0));
        AdjunctionReport r = adjunction_check(f, {inst.module("x").module}, targets);
        if (!r.ok()) fails.push_back("seed " + std::to_string(7000 + i) + ": " + r.failures.front());
        ++checked;
    }
    line(7, fails.empty(),
         "triangle identities and Hom adjointness for induce -| restrict -| coinduce on " + std::to_string(checked) +
             " instances, " + std::to_string(fails.size()) + " failures" + first(fails));
}

void criterion8() {
    std::size_t checked = 0, true_count = 0;
    std::vector<std::string> fails;
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        for (const auto& [id, b] : inst.bimodules)
            for (const auto& [ideal, t] : ideals_on(inst, b.left)) {
                GenClosedReport r = is_generalized_closed_functor(b.bimodule, t, default_gencl_samples(b.bimodule, t));
                bool same = r.condition_i == r.condition_ii && r.condition_ii == r.condition_iii;
                if (!same || !r.coincide) fails.push_back(name + "/" + id + "/" + ideal);
                true_count += r.condition_i;
                ++checked;
            }
    }
    line(8, fails.empty() && checked > 0,
         "generalized closed functor conditions (i), (ii), (iii) coincide on " + std::to_string(checked) + " builtin (bimodule, ideal) pairs (" +
             std::to_string(true_count) + " true), " + std::to_string(fails.size()) + " disagreements" + first(fails));
}

void criterion9() {
    std::size_t pairs = 0, modules = 0;
    std::vector<std::string> fails;
    for (const auto& name : builtin_names()) {
        Instance inst = builtin(name);
        for (const auto& [id, f] : inst.functors) {
            std::vector<Module> xs = samples(f.functor.source());
            for (const auto& [mid, m] : inst.modules)
                if (m.category == f.source) xs.push_back(m.module);
            for (const auto& [ideal, t] : ideals_on(inst, f.target)) {
                KernelDescriptionReport r = check_kernel_description(f.functor, t, xs);
                for (const auto& d : r.disagreements) fails.push_back(name + "/" + id + "/" + ideal + ": " + d);
                modules += r.checked;
                ++pairs;
            }
        }
    }
    std::size_t random_checked = 0;
    for (std::size_t i = 0; i < kKernelLawModules; ++i) {
        Instance inst = random_instance(9000 + i);
        KernelDescriptionReport r =
            check_kernel_description(inst.functor("f").functor, inst.torsion("t"), {inst.module("x").module});
        for (const auto& d : r.disagreements) fails.push_back("seed " + std::to_string(9000 + i) + ": " + d);
        random_checked += r.checked;
    }
    line(9, fails.empty() && random_checked >= kKernelLawModules,
         "kernel law on " + std::to_string(pairs) + " builtin (functor, ideal) pairs with " + std::to_string(modules) +
             " modules + " + std::to_string(random_checked) + " random modules, " + std::to_string(fails.size()) +
             " disagreements" + first(fails));
}

void criterion10() {
    std::mt19937_64 rng(10);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (pick(0, 2)) m(i, j) = Rational(pick(-5, 5), pick(1, 4));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
        return m;
    };
    std::size_t checked = 0, fails = 0, consistent = 0;
    for (std::size_t n = 0; n < kMatrices; ++n) {
        std::size_t r = pick(1, kMaxMatrixDim), c = pick(1, kMaxMatrixDim);
        Matrix m = random_matrix(r, c);
        // Every third matrix is a product through a narrow middle, so low ranks show up.
        if (n % 3 == 0) {
            std::size_t k = pick(1, std::min(r, c));
            m = random_matrix(r, k) * random_matrix(k, c);
        }
        bool ok = true;
        Rref e = rref(m);
        Subspace ker = kernel_basis(m);
        ok = ok && e.rank() + ker.dim() == c;
        ok = ok && e.rank() == image_basis(m).dim();
        Rref again = rref(e.reduced);
        ok = ok && again.reduced == e.reduced && again.pivots == e.pivots;
        for (std::size_t i = 0; i < ker.dim(); ++i) ok = ok && is_zero(m * ker.basis_vector(i));

        Vector x(c);
        for (auto& v : x) v = Rational(pick(-3, 3));
        Vector b = m * x;
        auto y = solve(m, b);
        ok = ok && y && m * *y == b;
        Vector b2(r);
        for (auto& v : b2) v = Rational(pick(-3, 3));
        auto y2 = solve(m, b2);
        bool in_image = rank(hstack(m, Matrix::column(b2))) == e.rank();
        ok = ok && y2.has_value() == in_image && (!y2 || m * *y2 == b2);
        consistent += in_image;
        fails += !ok;
        ++checked;
    }
    line(10, fails == 0,
         "rank-nullity, rref idempotence and exact solve on " + std::to_string(checked) + " random matrices (dims <= " +
             std::to_string(kMaxMatrixDim) + ", " + std::to_string(consistent) + " consistent random systems), " +
             std::to_string(fails) + " failures");
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9, criterion10};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            line(static_cast<int>(i + 1), false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
