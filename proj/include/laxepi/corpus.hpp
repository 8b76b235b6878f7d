#pragma once
// Worked examples with expected verdicts, and seeded random generators.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "laxepi/instance.hpp"

namespace laxepi {

std::vector<std::string> builtin_names();
/// Throws Error(InvalidArgument) for an unknown name.
Instance builtin(const std::string& name);

struct Bounds {
    std::size_t max_objects = 3;
    std::size_t max_hom_dim = 4;
    std::size_t max_arrows = 4;
    std::size_t max_nilpotency = 3;
    std::size_t max_module_dim = 3;
};

/// Attempts and acceptances per generator, for tuning the bounds.
struct SamplerStats {
    std::size_t category_tries = 0, categories = 0, category_fallbacks = 0;
    std::size_t functor_tries = 0, functors = 0, functor_fallbacks = 0;
    std::size_t module_tries = 0, modules = 0, module_corrections = 0;
    std::size_t ideal_tries = 0, ideals = 0;
};

struct SampledIdeal {
    NamedIdeal spec;  // category id left empty
    TorsionData torsion;
};

enum class ObjectShape { Any, Surjective, Bijective };

class Sampler {
public:
    explicit Sampler(std::uint64_t seed, Bounds bounds = {});

    /// A truncated path category of a random quiver within the bounds.
    QuiverData category(std::size_t min_objects = 1);
    /// Arrow images drawn at random and rejected until functorial; falls
    /// back to zero arrow images. Surjective needs source.size() >=
    /// target.size(), Bijective equal sizes.
    LinearFunctor functor(const QuiverData& source, const LinearCategory& target, ObjectShape shape);
    /// A quotient of q by extra zero relations (or a lower nilpotency bound)
    /// with the projection functor.
    std::pair<QuiverData, LinearFunctor> quotient(const QuiverData& q);
    /// Random arrow matrices, corrected by zeroing arrows until the
    /// relations hold.
    Module module(const QuiverData& q);
    /// Generated by vertex identities and occasionally an arrow, kept only
    /// when idempotent. Sometimes the whole or the zero ideal.
    SampledIdeal ideal(const QuiverData& q);

    std::mt19937_64& rng() noexcept { return rng_; }
    const SamplerStats& stats() const noexcept { return stats_; }
    const Bounds& bounds() const noexcept { return bounds_; }

private:
    std::size_t pick(std::size_t lo, std::size_t hi);
    Rational coefficient();

    std::mt19937_64 rng_;
    Bounds bounds_;
    SamplerStats stats_;
};

/// Bundle with categories "source" and "target", functor "f", module "x"
/// over the source and ideal "t" on the target. Deterministic in the seed.
Instance random_instance(std::uint64_t seed, Bounds bounds = {}, SamplerStats* stats = nullptr);

}  // namespace laxepi
