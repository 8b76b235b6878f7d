#pragma once
// T = I∘S with S bijective on objects and I fully faithful.

#include <optional>
#include <vector>

#include "laxepi/functor.hpp"
#include "laxepi/localization.hpp"

namespace laxepi {

struct Factorization {
    LinearCategory mid;
    LinearFunctor s;
    /// Plain target: the fully faithful corestriction mid -> target.
    std::optional<LinearFunctor> i;
    /// Quotient target: mid -> Md(target), each object sent to its closed
    /// image, acting by the quotient homs.
    std::optional<Bimodule> embedding;
    /// Quotient target: localize(yoneda(PU)) for each source object U.
    std::vector<Localization> images;
    /// Quotient target: the mid hom spaces as spaces of module maps,
    /// [v * n + u].
    std::vector<HomSpace> quotient_homs;
};

Factorization canonical_factorization(const LinearFunctor& t);
Factorization canonical_factorization_localized(const LinearFunctor& p, const TorsionData& target_torsion);

}  // namespace laxepi
