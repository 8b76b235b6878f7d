#pragma once
// Linear functors between finite categories and the adjoint triple
// induce ⊣ restrict ⊣ coinduce on module categories.

#include <cstddef>
#include <string>
#include <vector>

#include "laxepi/module.hpp"

namespace laxepi {

class LinearFunctor {
public:
    LinearFunctor() = default;
    /// hom_maps[v * n + u] maps Hom_src(v, u) to Hom_tgt(Sv, Su). Shapes are
    /// checked, functoriality is not (see validate_functor).
    LinearFunctor(LinearCategory source, LinearCategory target, std::vector<std::size_t> object_map,
                  std::vector<Matrix> hom_maps);

    const LinearCategory& source() const noexcept { return source_; }
    const LinearCategory& target() const noexcept { return target_; }
    std::size_t object(std::size_t u) const { return object_map_.at(u); }
    const std::vector<std::size_t>& object_map() const noexcept { return object_map_; }
    const Matrix& hom_map(std::size_t v, std::size_t u) const;
    Vector apply(std::size_t v, std::size_t u, const Vector& f) const;
    Morphism apply(const Morphism& f) const;

    bool surjective_on_objects() const;
    bool bijective_on_objects() const;

private:
    LinearCategory source_;
    LinearCategory target_;
    std::vector<std::size_t> object_map_;
    std::vector<Matrix> hom_maps_;
};

ValidationReport validate_functor(const LinearFunctor& f);
LinearFunctor identity_functor(const LinearCategory& c);
/// g∘f.
LinearFunctor compose_functors(const LinearFunctor& g, const LinearFunctor& f);

/// x∘S.
Module restrict(const LinearFunctor& s, const Module& x);
ModuleMap restrict_map(const LinearFunctor& s, const ModuleMap& f);

/// A linear functor G -> Md(H): one H-module per object of G and, for each
/// basis morphism g: G -> G', a map value(G) -> value(G').
struct Bimodule {
    LinearCategory left;
    LinearCategory right;
    std::vector<Module> values;
    std::vector<std::vector<ModuleMap>> actions;  // [g * n + g'][k]

    const ModuleMap& act(std::size_t g, std::size_t g2, std::size_t k) const {
        return actions[g * left.size() + g2][k];
    }
    ModuleMap act(std::size_t g, std::size_t g2, const Vector& coords) const;
};

/// x ⊗ b presented as a quotient of the direct sum with one copy of b(G)
/// per basis vector of x(G).
struct Tensored {
    Module module;
    DirectSum generators;
    std::vector<std::vector<std::size_t>> generator_index;  // [G][k] -> summand
    Cokernel presentation;
};

struct Induced {
    Module module;
    ModuleMap unit;  // x -> restrict(s, module)
    Tensored tensor;  // over the regular bimodule of s
};

Induced induce(const LinearFunctor& s, const Module& x);
/// induce(f) between two precomputed inductions.
ModuleMap induce_map(const Induced& from, const Induced& to, const ModuleMap& f);
/// induce(restrict y) -> y.
ModuleMap counit(const LinearFunctor& s, const Module& y);
ModuleMap counit(const LinearFunctor& s, const Module& y, const Induced& induced_restriction);

struct Coinduced {
    Module module;
    /// homs[G] = Hom(restrict(yoneda G), x); module.dim(G) = homs[G].dim().
    std::vector<HomSpace> homs;
};

Coinduced coinduce(const LinearFunctor& s, const Module& x);
/// y -> coinduce(restrict y).
ModuleMap coinduce_unit(const LinearFunctor& s, const Module& y, const Coinduced& of_restriction);
/// restrict(coinduce x) -> x.
ModuleMap coinduce_counit(const LinearFunctor& s, const Coinduced& c, const Module& x);
ModuleMap coinduce_map(const Coinduced& from, const Coinduced& to, const ModuleMap& f);

ValidationReport validate_bimodule(const Bimodule& b);
/// U ↦ yoneda(SU) with postcomposition by S.
Bimodule regular_bimodule(const LinearFunctor& s);
/// yoneda(S-, G): G ↦ restrict(yoneda G), as a functor G -> Md(U) out of
/// the target category.
Bimodule restriction_bimodule(const LinearFunctor& s);

/// x ⊗_G b, the coend of x(G) ⊗ b(G).
Tensored tensor_bimodule(const Module& x, const Bimodule& b);
ModuleMap tensor_map(const Tensored& from, const Tensored& to, const ModuleMap& f);
/// G ↦ Hom_H(b(G), a), the right adjoint of x ↦ x ⊗ b.
Module bimodule_hom(const Bimodule& b, const Module& a);
/// ker(Ω ⊗ b -> P ⊗ b) for the free cover P -> x with kernel Ω.
Module tor1(const Module& x, const Bimodule& b);

struct AdjunctionReport {
    std::size_t samples = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// Triangle identities of induce ⊣ restrict ⊣ coinduce and Hom-dimension
/// adjointness on the given samples.
AdjunctionReport adjunction_check(const LinearFunctor& s, const std::vector<Module>& source_samples,
                                  const std::vector<Module>& target_samples);

}  // namespace laxepi
