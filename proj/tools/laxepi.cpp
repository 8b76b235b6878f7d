// Command-line front end. Reports go to stdout as JSON, diagnostics to
// stderr. Exit codes: 0 verdict computed, 2 precondition, 3 parse, 4 internal.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "laxepi/corpus.hpp"
#include "laxepi/report.hpp"

using namespace laxepi;

namespace {

// "builtin:<name>" loads a corpus instance instead of a file.
Instance load(const std::string& path) {
    const std::string prefix = "builtin:";
    if (path.rfind(prefix, 0) == 0) return builtin(path.substr(prefix.size()));
    return load_instance(path);
}

std::optional<std::string> opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

void print_table(const Json& r) {
    std::printf("corpus run  seed %llu  count %llu\n", static_cast<unsigned long long>(r["seed"].get<std::uint64_t>()),
                static_cast<unsigned long long>(r["count"].get<std::size_t>()));
    std::printf("%-28s %8s %8s %8s\n", "builtin", "checked", "passed", "failed");
    for (const auto& b : r["builtins"])
        std::printf("%-28s %8zu %8zu %8zu\n", b["name"].get<std::string>().c_str(), b["expectations"].get<std::size_t>(),
                    b["passed"].get<std::size_t>(), b["failed"].size());
    std::printf("%-28s %8s %8s %8s\n", "property", "checked", "skipped", "failed");
    for (const auto& [name, p] : r["properties"].items())
        std::printf("%-28s %8zu %8zu %8zu\n", name.c_str(), p["checked"].get<std::size_t>(), p["skipped"].get<std::size_t>(),
                    p["failures"].size());
    const Json& s = r["sampler"];
    std::printf("sampler: categories %zu/%zu tries (%zu fallbacks), functors %zu/%zu tries (%zu fallbacks), "
                "modules %zu (%zu corrections)\n",
                s["categories"].get<std::size_t>(), s["category_tries"].get<std::size_t>(),
                s["category_fallbacks"].get<std::size_t>(), s["functors"].get<std::size_t>(),
                s["functor_tries"].get<std::size_t>(), s["functor_fallbacks"].get<std::size_t>(),
                s["module_tries"].get<std::size_t>(), s["module_corrections"].get<std::size_t>());
    std::printf("%s\n", r["verdict"].get<bool>() ? "OK" : "DISAGREEMENT");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Epimorphisms of finite linear categories, decided exactly"};
    app.require_subcommand(1);
    app.fallthrough();
    bool no_timing = false;
    int indent = 2;
    app.add_flag("--no-timing", no_timing, "Omit the timing field so reports are byte-stable");
    app.add_option("--indent", indent, "JSON indent, -1 for one line");

    std::string file, functor, kind, ideal, module, from, to, name;
    std::uint64_t seed = 0;
    std::size_t count = 50;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "Run every structural validator");
    validate->add_option("file", file, "Instance file or builtin:<name>")->required();

    auto* factor = app.add_subcommand("factor", "Canonical factorization T = I∘S");
    factor->add_option("file", file)->required();
    factor->add_option("--functor", functor)->required();
    factor->add_option("--ideal", ideal, "Factor through the localization at this ideal");

    auto* check = app.add_subcommand("check", "Run a decider");
    check->add_option("file", file)->required();
    check->add_option("--functor,--subject", functor, "Functor id (bimodule id for generalized-closed, ideal id for ideal)")
        ->required();
    check->add_option("--kind", kind)->required()->check(CLI::IsMember(check_kinds()));
    check->add_option("--ideal", ideal);

    auto* loc = app.add_subcommand("localize", "Closed module and unit");
    loc->add_option("file", file)->required();
    loc->add_option("--module", module)->required();
    loc->add_option("--ideal", ideal)->required();

    auto* hom = app.add_subcommand("hom", "Hom or quotient Hom dimensions");
    hom->add_option("file", file)->required();
    hom->add_option("--from", from)->required();
    hom->add_option("--to", to)->required();
    hom->add_option("--ideal", ideal);

    auto* corpus = app.add_subcommand("corpus", "Builtin instances and cross-validation");
    corpus->require_subcommand(1);
    auto* run = corpus->add_subcommand("run", "Check builtin tables and random properties");
    run->add_option("--seed", seed);
    run->add_option("--count", count);
    run->add_flag("--json", json, "Print the full report instead of the table");
    auto* show = corpus->add_subcommand("show", "Print a builtin instance file");
    show->add_option("name", name)->required()->check(CLI::IsMember(builtin_names()));
    corpus->add_subcommand("list", "List builtin names");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto start = std::chrono::steady_clock::now();
        Json report;
        int status = 0;
        if (*validate) {
            report = validate_report(load(file));
        } else if (*factor) {
            report = factor_report(load(file), functor, opt(ideal));
        } else if (*check) {
            report = check_report(load(file), functor, kind, opt(ideal));
        } else if (*loc) {
            report = localize_report(load(file), module, ideal);
        } else if (*hom) {
            report = hom_report(load(file), from, to, opt(ideal));
        } else if (*show) {
            std::cout << serialize_instance(builtin(name)) << "\n";
            return 0;
        } else if (corpus->got_subcommand("list")) {
            for (const auto& n : builtin_names()) std::cout << n << "\n";
            return 0;
        } else {
            CorpusRun r = corpus_run(seed, count);
            report = std::move(r.report);
            status = r.ok ? 0 : 1;
            if (!json) {
                print_table(report);
                return status;
            }
        }
        if (!no_timing) {
            std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
            report["timing"] = {{"seconds", d.count()}};
        }
        std::cout << report.dump(indent) << "\n";
        return status;
    } catch (const Error& e) {
        Json err = {{"error", code_name(e.code())}, {"message", e.what()}};
        std::cout << err.dump(indent) << "\n";
        std::cerr << code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "E_INVARIANT: " << e.what() << "\n";
        return 4;
    }
}
