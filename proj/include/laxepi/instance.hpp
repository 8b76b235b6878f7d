#pragma once
// Instance bundles: named categories, functors, modules, ideals and
// bimodules, plus optional expected verdicts. Serialized as one JSON
// document; rationals are "p/q" strings and composition tensors are sparse
// [g, f, coords] triples.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxepi/error.hpp"
#include "laxepi/functor.hpp"
#include "laxepi/localization.hpp"

namespace laxepi {

struct QuiverData {
    Quiver quiver;
    QuiverCategory category;
};

struct NamedFunctor {
    std::string source;
    std::string target;
    LinearFunctor functor;
};

struct NamedModule {
    std::string category;
    Module module;
};

struct NamedIdeal {
    enum class Kind { Generated, Whole, Zero };
    std::string category;
    Kind kind = Kind::Generated;
    std::vector<Morphism> generators;
};

struct NamedBimodule {
    std::string left;
    std::string right;
    Bimodule bimodule;
};

/// `subject` is a functor id, or a bimodule id for kind "generalized-closed", or an
/// ideal id for kind "ideal".
struct Expectation {
    std::string kind;
    std::string subject;
    std::string ideal;
    std::optional<bool> verdict;
    std::optional<ErrorCode> error;
};

struct Instance {
    std::string name;
    std::map<std::string, LinearCategory> categories;
    /// Quiver data for categories built from quivers, so that functors and
    /// modules can be given on arrows.
    std::map<std::string, QuiverData> quivers;
    std::map<std::string, NamedFunctor> functors;
    std::map<std::string, NamedModule> modules;
    std::map<std::string, NamedIdeal> ideals;
    std::map<std::string, NamedBimodule> bimodules;
    std::vector<Expectation> expected;

    const LinearCategory& category(const std::string& id) const;
    const NamedFunctor& functor(const std::string& id) const;
    const NamedModule& module(const std::string& id) const;
    const NamedIdeal& ideal(const std::string& id) const;
    const NamedBimodule& bimodule(const std::string& id) const;
    /// Closes the generators; throws Error(IdealNotIdempotent) when the
    /// closure is not idempotent.
    TorsionData torsion(const std::string& ideal_id) const;
};

/// Throws Error(Parse) with the line, or with the offending field path.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
/// Canonical form: categories as raw structure constants, everything else
/// objectwise. parse_instance(serialize_instance(x)) reproduces x.
std::string serialize_instance(const Instance& inst, int indent = 2);

/// FNV-1a over the canonical serialization, as 16 hex digits.
std::string instance_hash(const Instance& inst);
std::string fnv1a_hex(const std::string& bytes);

/// Image of a quiver path given images of the arrows.
Vector path_image(const Quiver& q, const LinearCategory& target, const std::vector<std::size_t>& object_map,
                  const std::vector<Vector>& arrow_images, std::size_t from, const Path& path);
/// The functor determined by arrow images; functoriality is not checked.
LinearFunctor functor_from_arrows(const QuiverData& q, const LinearCategory& target,
                                  std::vector<std::size_t> object_map, const std::vector<Vector>& arrow_images);
/// The module determined by arrow matrices, X(a): X(u) -> X(v) for a: v -> u.
Module module_from_arrows(const QuiverData& q, std::vector<std::size_t> dims, const std::vector<Matrix>& arrows);

}  // namespace laxepi
