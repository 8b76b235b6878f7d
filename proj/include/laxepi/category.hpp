#pragma once
// Finite k-linear categories ("rings with several objects") presented by
// hom-space bases and composition structure constants.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laxepi/linalg.hpp"

namespace laxepi {

/// Objects are addressed by index; string ids are only for I/O.
struct Morphism {
    std::size_t source = 0;
    std::size_t target = 0;
    Vector coords;
};

/// Immutable category value. Copies share the underlying data.
///
/// For objects W, V, U the composition tensor comp(W, V, U) is a matrix with
/// one row per basis pair (g in Hom(V,U), f in Hom(W,V)), row index
/// g * dim Hom(W,V) + f, holding the coordinates of g∘f in Hom(W,U).
class LinearCategory {
public:
    LinearCategory();

    /// Builds a category from raw structure constants. Shapes are checked;
    /// the axioms are not (see validate_category).
    static LinearCategory from_structure(std::vector<std::string> objects,
                                         std::vector<std::vector<std::string>> labels,
                                         std::vector<Matrix> comp,
                                         std::vector<Vector> identities);

    std::size_t size() const noexcept;
    const std::string& object(std::size_t i) const;
    const std::vector<std::string>& objects() const noexcept;
    std::optional<std::size_t> find(const std::string& id) const;
    /// Throws Error(InvalidArgument) for an unknown id.
    std::size_t index_of(const std::string& id) const;

    std::size_t hom_dim(std::size_t v, std::size_t u) const;
    const std::vector<std::string>& labels(std::size_t v, std::size_t u) const;
    std::size_t total_dim() const;

    const Vector& identity(std::size_t u) const;
    Morphism identity_morphism(std::size_t u) const;
    Morphism basis_morphism(std::size_t v, std::size_t u, std::size_t k) const;

    const Matrix& comp_tensor(std::size_t w, std::size_t v, std::size_t u) const;
    /// Coordinates of g∘f for g in Hom(V,U), f in Hom(W,V).
    Vector compose(std::size_t w, std::size_t v, std::size_t u, const Vector& g,
                   const Vector& f) const;
    /// Coordinates of b_g∘b_f for basis indices.
    Vector compose_basis(std::size_t w, std::size_t v, std::size_t u, std::size_t g,
                         std::size_t f) const;
    /// Matrix of f ↦ g∘f, Hom(W,V) -> Hom(W,U).
    Matrix post_compose(std::size_t w, std::size_t v, std::size_t u, const Vector& g) const;
    /// Matrix of g ↦ g∘f, Hom(V,U) -> Hom(W,U).
    Matrix pre_compose(std::size_t w, std::size_t v, std::size_t u, const Vector& f) const;

    /// Structural equality (objects, bases, structure constants).
    friend bool operator==(const LinearCategory& a, const LinearCategory& b);

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    std::size_t pair(std::size_t v, std::size_t u) const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_category(const LinearCategory& c);

/// Throws Error(NotComposable) if f.target != g.source.
Morphism compose(const LinearCategory& c, const Morphism& g, const Morphism& f);

LinearCategory opposite(const LinearCategory& c);

/// One-object category from an algebra with basis b_0..b_{n-1}:
/// products[i * n + j] holds the coordinates of b_i * b_j.
LinearCategory from_algebra(std::vector<std::string> basis_labels,
                            const std::vector<Vector>& products, const Vector& unit,
                            std::string object_id = "*");

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A path is a list of arrow indices in traversal order: {a, b} is b∘a.
using Path = std::vector<std::size_t>;

/// One relation: a linear combination of parallel nonempty paths.
struct QuiverRelation {
    std::vector<std::pair<Rational, Path>> terms;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<QuiverRelation> relations;
    /// All paths of length >= nilpotency vanish.
    std::size_t nilpotency = 2;
};

/// Path category of a quiver modulo the relations and all paths of length
/// >= nilpotency. basis_paths[v * n + u][k] is the path word of the k-th
/// basis morphism of Hom(v, u).
struct QuiverCategory {
    LinearCategory category;
    std::vector<std::vector<Path>> basis_paths;
    const Path& path(std::size_t v, std::size_t u, std::size_t k) const {
        return basis_paths[v * category.size() + u][k];
    }
};

QuiverCategory from_quiver(const Quiver& q);

/// Concrete category of matrices: object i has size sizes[i]; Hom(V,U) is
/// the span of the given sizes[U] x sizes[V] matrices, which must be linearly
/// independent, contain identities and be closed under products.
/// homs[v * n + u] lists the basis of Hom(v, u).
LinearCategory from_matrix_spaces(std::vector<std::string> objects,
                                  const std::vector<std::size_t>& sizes,
                                  const std::vector<std::vector<Matrix>>& homs,
                                  std::vector<std::vector<std::string>> labels = {});

/// Semisimple category: `n` objects, End = k each, no other morphisms.
LinearCategory discrete_category(const std::vector<std::string>& objects);

}  // namespace laxepi
