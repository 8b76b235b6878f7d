#pragma once
// Hereditary torsion theories given by idempotent two-sided ideals: a module
// is torsion when the ideal annihilates it. Localization is the composite
// R∘Q with the quotient category realized as the closed modules.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "laxepi/module.hpp"

namespace laxepi {

struct TorsionData {
    LinearCategory cat;
    std::vector<Subspace> ideal;  // [v * n + u] inside Hom(v, u)

    const Subspace& at(std::size_t v, std::size_t u) const { return ideal[v * cat.size() + u]; }
    /// Zero ideal: every module is torsion and the quotient category is 0.
    bool degenerate() const;
    /// The ideal contains every identity: only the zero module is torsion.
    bool trivial() const;
};

/// Smallest two-sided ideal containing the generators. Throws
/// Error(IdealNotIdempotent) naming the first pair where a∘a != a.
TorsionData ideal_closure(const LinearCategory& c, const std::vector<Morphism>& generators);
/// Checks that the subspaces form an idempotent two-sided ideal.
TorsionData ideal_from_subspaces(const LinearCategory& c, std::vector<Subspace> ideal);
TorsionData whole_ideal(const LinearCategory& c);
TorsionData zero_ideal(const LinearCategory& c);

/// At U: {v : X(a) v = 0 for every a in the ideal ending at U}.
Submodule torsion_submodule(const TorsionData& t, const Module& x);
bool is_torsion(const TorsionData& t, const Module& x);
bool is_torsion_free(const TorsionData& t, const Module& x);

/// J_U <= yoneda(U) with J_U(V) = ideal(V, U).
Submodule j_submodule(const TorsionData& t, std::size_t u);

struct ClosedTest {
    bool closed = false;
    bool torsion_free = false;
    /// First object where X(U) -> Hom(J_U, X) is not bijective.
    std::optional<std::size_t> failing_object;
    /// Per object, the matrix X(U) -> Hom(J_U, X) in the Hom basis.
    std::vector<Matrix> restriction;
};

ClosedTest is_closed(const TorsionData& t, const Module& x);

struct ClosedModule {
    Module module;
    std::vector<Matrix> certificate;  // invertible restriction matrices
};

struct Localization {
    ClosedModule closed;
    ModuleMap unit;  // x -> closed.module
};

Localization localize(const TorsionData& t, const Module& x);
/// The unique map between localizations with g∘unit_x = unit_y∘f.
ModuleMap localize_map(const Localization& lx, const Localization& ly, const ModuleMap& f);
/// Hom in the quotient category, realized on closed modules.
HomSpace quotient_hom(const TorsionData& t, const Module& x, const Module& y);
/// Kernel and cokernel are torsion.
bool q_iso(const TorsionData& t, const ModuleMap& f);

/// sub is a submodule of yoneda(U); member iff yoneda(U)/sub is torsion.
bool filter_membership(const TorsionData& t, const Submodule& sub);
/// (X : u) <= yoneda(V) for X <= yoneda(U) and u: V -> U.
Submodule preimage_submodule(const Submodule& sub, const Morphism& u);

}  // namespace laxepi
