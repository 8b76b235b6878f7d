#pragma once
// Decision procedures for the epimorphism notions, each with an independent
// brute-force check that is only ever used to detect bugs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "laxepi/factorization.hpp"
#include "laxepi/functor.hpp"
#include "laxepi/localization.hpp"

namespace laxepi {

struct CounitWitness {
    std::size_t object = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool iso = false;
};

struct RestrictionVerdict {
    bool verdict = false;
    std::vector<CounitWitness> counits;  // one per target object
    std::optional<std::size_t> witness;  // first object with a non-iso counit
};

/// Restriction along t is fully faithful iff the counit is an iso on every
/// representable.
RestrictionVerdict fully_faithful_restriction(const LinearFunctor& t);

struct OracleResult {
    bool verdict = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

/// Bijectivity of Hom(x, y) -> Hom(restrict x, restrict y) with x running
/// over representables and y over the injectives D Hom(v, -) and `extra`.
OracleResult restriction_hom_oracle(const LinearFunctor& t, const std::vector<Module>& extra = {});

struct MultiplicationWitness {
    std::size_t from = 0;  // G'
    std::size_t to = 0;    // G
    std::size_t tensor_dim = 0;
    std::size_t hom_dim = 0;
    std::size_t rank = 0;
    bool iso = false;
};

struct MultiplicationVerdict {
    bool verdict = false;
    std::vector<MultiplicationWitness> pairs;
};

/// G ⊗_U G -> G, g ⊗ h ↦ g∘h, per hom pair, from raw structure constants.
MultiplicationVerdict multiplication_map_iso(const LinearFunctor& s);

struct EpiVerdict {
    bool verdict = false;
    RestrictionVerdict restriction;
    MultiplicationVerdict multiplication;
    bool agrees = false;
};

/// Requires s surjective on objects (Error NotSurjectiveOnObjects).
EpiVerdict is_epi(const LinearFunctor& s);

struct LaxEpiVerdict {
    bool verdict = false;
    bool s_epi = false;
    std::vector<bool> trace_has_identity;  // per target object
    std::optional<std::size_t> trace_witness;
    bool restriction_verdict = false;
    bool agrees = false;
};

LaxEpiVerdict is_lax_epi(const LinearFunctor& t);

struct FlatVerdict {
    bool verdict = false;
    std::optional<std::size_t> witness;  // target object, or simple index
    std::vector<std::size_t> module_dims;
};

/// Each left module Hom(V, T-) is projective over the opposite category.
FlatVerdict is_flat(const LinearFunctor& t);
/// Tor1(σ, yoneda(P-)) is torsion for every simple σ.
FlatVerdict is_flat(const LinearFunctor& p, const TorsionData& target_torsion);

struct FlatEpiVerdict {
    bool verdict = false;
    bool epi = false;
    bool flat = false;
    /// Tor1 of every simple against the regular bimodule vanishes.
    bool tor_vanishes = false;
    bool agrees = false;
};

/// For functors between one-object categories (ring maps).
FlatEpiVerdict is_flat_epi(const LinearFunctor& phi);

struct KernelWitness {
    std::size_t object = 0;
    std::size_t kernel_dim = 0;
    bool torsion = false;
};

struct CondEpiVerdict {
    bool verdict = false;
    std::vector<KernelWitness> kernels;
    std::optional<std::size_t> witness;
};

/// Requires s bijective on objects and closed representables.
CondEpiVerdict is_conditioned_epi(const LinearFunctor& s, const TorsionData& t);

/// Localized representables modulo submodules generated by at most
/// `max_generators` basis vectors, deduplicated by equality.
std::vector<Module> localized_quotient_family(const TorsionData& t, std::size_t max_generators);

/// Fullness of restrict∘R on the localized quotient family plus the
/// localizations of induce(restrict(yoneda G)).
OracleResult conditioned_epi_oracle(const LinearFunctor& s, const TorsionData& t,
                                    std::size_t max_generators = 2);

struct GenerationWitness {
    std::size_t object = 0;
    std::size_t localized_dim = 0;
    std::size_t trace_dim = 0;
    bool torsion_cokernel = false;
};

struct GlaxVerdict {
    bool verdict = false;
    bool generation = false;
    bool conditioned = false;
    Factorization factorization;
    std::vector<GenerationWitness> generation_witnesses;
    std::vector<KernelWitness> kernels;  // per mid object, torsion = in Ker I^*
};

GlaxVerdict is_generalized_lax_epi(const LinearFunctor& p, const TorsionData& target_torsion);

/// Falsification: when the verdict is true, Hom_C(x, y) -> Hom_U(T_* x, T_* y)
/// must be bijective on localized representables and injectives.
OracleResult glax_oracle(const LinearFunctor& p, const TorsionData& target_torsion, const GlaxVerdict& v);

/// T_* C = Hom_C(T-, C) for a closed module C over the target.
Module restrict_to_source(const Factorization& f, const Module& closed);

struct FilterCheck {
    std::size_t object = 0;
    std::size_t generator = 0;  // basis index inside Hom(V, U) flattened
    bool member = false;
};

struct AbelianLocalizationVerdict {
    bool verdict = false;
    GlaxVerdict glax;
    FlatVerdict flat;
    std::vector<FilterCheck> filter;  // only filled when verdict is true
};

AbelianLocalizationVerdict is_abelian_localization(const LinearFunctor& p, const TorsionData& target_torsion);
/// sub <= yoneda(U) over the source: T^*(sub ↪ yoneda U) is an iso in C.
bool in_induced_filter(const LinearFunctor& p, const TorsionData& target_torsion, const Submodule& sub);

struct KernelDescriptionReport {
    std::size_t checked = 0;
    std::vector<std::string> disagreements;
};

KernelDescriptionReport check_kernel_description(const LinearFunctor& p, const TorsionData& target_torsion,
                                                 const std::vector<Module>& samples);

bool condition_G(const LinearFunctor& p, const TorsionData& target_torsion);

struct ConditionFVerdict {
    bool verdict = false;
    std::vector<Subspace> k;  // K_V inside Hom(V, U), per source object V
    /// For each V and basis vector u_j of K_V, a solution u'_j in Hom(V, U').
    std::vector<std::vector<Vector>> solutions;
};

/// gamma: images[u] -> images[u2] of the localized factorization. Throws
/// Error(InvalidQuotientHom) if gamma is not such a map.
ConditionFVerdict condition_F(const LinearFunctor& p, const Factorization& f, const TorsionData& target_torsion,
                              std::size_t u, std::size_t u2, const ModuleMap& gamma);

struct UlmerCertificate {
    std::size_t target = 0;               // U
    std::vector<Morphism> u;              // u_i: U_i -> U
    std::vector<std::size_t> v;           // V_j
    std::vector<std::vector<Vector>> uij; // [j][i] in Hom(V_j, U_i)
};

struct UlmerCheck {
    bool verdict = false;
    bool relations_vanish = false;
    bool exact = false;
    std::size_t homology_dim = 0;
};

UlmerCheck ulmer_certificate_check(const LinearFunctor& p, const Factorization& f, const TorsionData& target_torsion,
                                   const UlmerCertificate& cert);

struct GenClosedSamples {
    std::vector<Module> torsion;
    std::vector<ModuleMap> torsion_cokernel_monos;  // M ↪ N with N/M torsion
    std::vector<Module> targets;                    // modules over the right category
    std::vector<ModuleMap> q_isos;
};

GenClosedSamples default_gencl_samples(const Bimodule& f, const TorsionData& t);

struct GenClosedReport {
    bool condition_i = false;
    bool condition_ii = false;
    bool condition_iii = false;
    bool coincide = false;
    std::size_t checks = 0;
};

GenClosedReport is_generalized_closed_functor(const Bimodule& f, const TorsionData& t, const GenClosedSamples& samples);

}  // namespace laxepi
