#pragma once
// JSON reports for the command line and the Python module. Every report
// carries "verdict", "witnesses" and "instance_hash"; callers add "timing".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "laxepi/corpus.hpp"
#include "laxepi/instance.hpp"

namespace laxepi {

using Json = nlohmann::ordered_json;

/// Kinds accepted by check_report. "generalized-closed" takes a bimodule id
/// as subject, "ideal" an ideal id; all others a functor id.
const std::vector<std::string>& check_kinds();

Json validate_report(const Instance& inst);
Json factor_report(const Instance& inst, const std::string& functor, const std::optional<std::string>& ideal);
/// Without an ideal, kinds that need one use the whole ideal of the target,
/// i.e. no torsion.
Json check_report(const Instance& inst, const std::string& subject, const std::string& kind,
                  const std::optional<std::string>& ideal);
Json localize_report(const Instance& inst, const std::string& module, const std::string& ideal);
Json hom_report(const Instance& inst, const std::string& from, const std::string& to,
                const std::optional<std::string>& ideal);

struct ExpectationOutcome {
    Expectation expected;
    std::optional<bool> verdict;
    std::optional<ErrorCode> error;
    bool ok = false;
};

std::vector<ExpectationOutcome> evaluate_expectations(const Instance& inst);

// ---- cross-validation properties ----

struct PropertyTally {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
    void record(bool ok, const std::string& what);
};

/// localize is idempotent, the unit has torsion kernel and cokernel, and the
/// result passes is_closed.
bool localization_laws_hold(const TorsionData& t, const Module& x, std::string* why = nullptr);

struct CorpusRun {
    Json report;
    bool ok = false;
};

/// Builtin expectation tables plus `count` random instances seeded from
/// `seed`, `seed + 1`, ...
CorpusRun corpus_run(std::uint64_t seed, std::size_t count, Bounds bounds = {});

}  // namespace laxepi
