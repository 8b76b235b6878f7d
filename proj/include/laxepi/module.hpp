#pragma once
// Finite-dimensional right modules over a LinearCategory, i.e. contravariant
// linear functors into vector spaces, and the maps between them.

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "laxepi/category.hpp"

namespace laxepi {

/// X(U) has dimension dims[U]; for each basis morphism f: V -> U the action
/// X(f): X(U) -> X(V) is a dims[V] x dims[U] matrix. Contravariance:
/// X(g∘f) = X(f) X(g).
class Module {
public:
    Module();

    /// action[v * n + u][k] is the matrix of the k-th basis morphism v -> u.
    static Module from_action(LinearCategory c, std::vector<std::size_t> dims,
                              std::vector<std::vector<Matrix>> action);
    static Module zero(const LinearCategory& c);

    const LinearCategory& category() const noexcept;
    std::size_t dim(std::size_t u) const;
    const std::vector<std::size_t>& dims() const noexcept;
    std::size_t total_dim() const;
    bool is_zero() const;

    const Matrix& act_basis(std::size_t v, std::size_t u, std::size_t k) const;
    const std::vector<Matrix>& act_basis(std::size_t v, std::size_t u) const;
    /// X(f) for an arbitrary f in Hom(V,U).
    Matrix act(std::size_t v, std::size_t u, const Vector& f) const;

    friend bool operator==(const Module& a, const Module& b);

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

ValidationReport validate_module(const Module& x);

class ModuleMap {
public:
    ModuleMap() = default;
    /// components[u] is a target.dim(u) x source.dim(u) matrix.
    ModuleMap(Module source, Module target, std::vector<Matrix> components);

    static ModuleMap identity(const Module& x);
    static ModuleMap zero(const Module& source, const Module& target);
    /// Inverse of the flatten() layout.
    static ModuleMap from_flat(const Module& source, const Module& target, const Vector& flat);

    const Module& source() const noexcept { return source_; }
    const Module& target() const noexcept { return target_; }
    const Matrix& component(std::size_t u) const { return components_.at(u); }
    const std::vector<Matrix>& components() const noexcept { return components_; }

    bool is_zero() const;
    bool is_iso() const;
    bool is_mono() const;
    bool is_epi() const;

    /// Row-major concatenation of the components, object by object.
    Vector flatten() const;

    friend bool operator==(const ModuleMap& a, const ModuleMap& b) {
        return a.components_ == b.components_;
    }

private:
    Module source_;
    Module target_;
    std::vector<Matrix> components_;
};

/// g∘f. Throws Error(NotComposable) on a dimension mismatch.
ModuleMap operator*(const ModuleMap& g, const ModuleMap& f);
ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator*(const Rational& s, const ModuleMap& f);
ModuleMap inverse(const ModuleMap& f);

/// Naturality violations, one entry per failing basis morphism.
ValidationReport validate_map(const ModuleMap& f);

struct Submodule {
    Module of;
    std::vector<Subspace> parts;

    static Submodule zero(const Module& x);
    static Submodule full(const Module& x);
    friend bool operator==(const Submodule& a, const Submodule& b) { return a.parts == b.parts; }
};

bool is_stable(const Submodule& s);
/// Smallest submodule containing the given elements (object, vector).
Submodule generated_submodule(const Module& x,
                              const std::vector<std::pair<std::size_t, Vector>>& elements);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
bool contains(const Submodule& bigger, const Submodule& smaller);
/// f^{-1}(s) for a submodule s of the target of f.
Submodule preimage(const ModuleMap& f, const Submodule& s);

Module yoneda(const LinearCategory& c, std::size_t u);
/// Yoneda correspondence: v in X(U) gives yoneda(U) -> X, h ↦ X(h) v.
ModuleMap yoneda_map(const Module& x, std::size_t u, const Vector& v);
/// Postcomposition by m: yoneda(m.source) -> yoneda(m.target). The modules
/// are passed in so that callers can share them.
ModuleMap yoneda_morphism(const Module& yoneda_source, const Module& yoneda_target,
                          const Morphism& m);
/// D Hom(u, -): V ↦ Hom(u, V)^*, the injective envelope family. Together
/// these cogenerate the module category.
Module injective_module(const LinearCategory& c, std::size_t u);
/// The element of X(U) corresponding to a map yoneda(U) -> X.
Vector yoneda_element(const ModuleMap& f, std::size_t u);

/// Hom_C(X, Y) as an explicit linear space of module maps.
class HomSpace {
public:
    HomSpace(Module source, Module target);

    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<ModuleMap>& basis() const noexcept { return basis_; }
    const Module& source() const noexcept { return source_; }
    const Module& target() const noexcept { return target_; }

    ModuleMap element(const Vector& coeffs) const;
    bool contains(const ModuleMap& f) const;
    /// Throws Error(InvalidArgument) if f is not natural.
    Vector coordinates(const ModuleMap& f) const;

private:
    Module source_;
    Module target_;
    Subspace space_;
    std::vector<ModuleMap> basis_;
};

HomSpace hom_modules(const Module& x, const Module& y);

struct Kernel {
    Module module;
    ModuleMap inclusion;
};

struct Cokernel {
    Module module;
    ModuleMap projection;
    /// Right inverse of the projection, objectwise (not a module map).
    std::vector<Matrix> section;

    /// The map out of the cokernel induced by phi, which must vanish on the
    /// image being divided out.
    ModuleMap descend(const ModuleMap& phi) const;
};

Kernel kernel(const ModuleMap& f);
Cokernel cokernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
Submodule kernel_submodule(const ModuleMap& f);
Kernel sub_to_module(const Submodule& s);
Cokernel quotient_by(const Submodule& s);

struct DirectSum {
    Module module;
    std::vector<Module> summands;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
    /// offsets[i][u]: where summand i starts inside module.dim(u).
    std::vector<std::vector<std::size_t>> offsets;
};

/// The category argument is only used for the empty sum.
DirectSum direct_sum(const LinearCategory& c, const std::vector<Module>& xs);

struct Block {
    std::size_t target_summand;
    std::size_t source_summand;
    ModuleMap map;
};

/// Map between direct sums assembled from summand-to-summand blocks.
ModuleMap block_map(const DirectSum& source, const DirectSum& target,
                    const std::vector<Block>& blocks);
/// [f_1 ... f_m]: (+)X_i -> Z.
ModuleMap copair(const DirectSum& source, const Module& target,
                 const std::vector<ModuleMap>& maps);

struct FreeCover {
    DirectSum free;
    std::vector<std::size_t> objects;  // object of each yoneda summand
    ModuleMap epi;
};

/// One yoneda(U) summand per basis vector of X(U).
FreeCover free_cover(const Module& x);
/// direct_sum of yoneda(objects[i]).
DirectSum free_module(const LinearCategory& c, const std::vector<std::size_t>& objects);
/// The cover with one more summand yoneda(u), mapped in by v in X(u).
FreeCover padded_cover(const FreeCover& cover, std::size_t u, const Vector& v);

std::size_t ext1(const Module& l, const Module& x);
/// Ext^1 computed from an arbitrary epimorphism from a projective module.
std::size_t ext1_with_cover(const ModuleMap& cover, const Module& x);

struct ProjectivityTest {
    bool projective = false;
    std::optional<ModuleMap> section;  // x -> free cover, splitting the cover
};

ProjectivityTest is_projective(const Module& x);

/// Span in Hom(v, v) of all b∘a with a: v -> g, b: g -> v, g in `through`.
Subspace trace_span(const LinearCategory& c, const std::vector<std::size_t>& through,
                    std::size_t v);

struct RadicalData {
    /// radical[v * n + u] inside Hom(v, u).
    std::vector<Subspace> radical;
    /// Pairwise non-isomorphic summands of the tops yoneda(U)/rad(-,U),
    /// split along singular endomorphisms. Each entry is semisimple and
    /// usually simple; every simple module is a summand of some entry.
    std::vector<Module> simples;
    std::vector<std::size_t> top_objects;
};

/// Requires characteristic zero (trace-form criterion).
RadicalData radical_and_simples(const LinearCategory& c);

/// Searches Hom(x, y) for an invertible map: basis elements first, then
/// seeded random combinations. Deterministic.
std::optional<ModuleMap> find_isomorphism(const Module& x, const Module& y);

}  // namespace laxepi
