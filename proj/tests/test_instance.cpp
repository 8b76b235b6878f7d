#include <doctest.h>

#include <functional>

#include "laxepi/corpus.hpp"
#include "laxepi/instance.hpp"

using namespace laxepi;

namespace {

Error parse_error(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const Error& e) {
        return e;
    }
    return Error(ErrorCode::Invariant, "parsed");
}

const char* diagonal_doc = R"({
  "name": "diagonal",
  "categories": {
    "Q": {"algebra": {"basis": ["1"], "products": [[0, 0, ["1"]]], "unit": ["1"]}},
    "QxQ": {"algebra": {"basis": ["e1", "e2"],
                        "products": [[0, 0, ["1", "0"]], [1, 1, ["0", "1"]]],
                        "unit": ["1", "1"]}}
  },
  "functors": {
    "d": {"source": "Q", "target": "QxQ", "objects": {"*": "*"},
          "maps": [{"source": "*", "target": "*", "matrix": [["1"], ["1"]]}]}
  },
  "modules": {},
  "ideals": {"all": {"category": "QxQ", "whole": true}}
})";

}  // namespace

TEST_CASE("builtins round-trip through the file format") {
    for (const auto& name : builtin_names()) {
        INFO(name);
        Instance a = builtin(name);
        std::string text = serialize_instance(a);
        Instance b = parse_instance(text);
        CHECK(serialize_instance(b) == text);
        CHECK(instance_hash(a) == instance_hash(b));
        for (const auto& [id, c] : a.categories) CHECK(b.category(id) == c);
        for (const auto& [id, m] : a.modules) CHECK(b.module(id).module == m.module);
        CHECK(b.expected.size() == a.expected.size());
    }
}

TEST_CASE("random instances round-trip") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Instance a = random_instance(seed);
        std::string text = serialize_instance(a);
        CHECK(serialize_instance(parse_instance(text)) == text);
    }
}

TEST_CASE("hand-written documents") {
    Instance inst = parse_instance(diagonal_doc);
    CHECK(inst.name == "diagonal");
    CHECK(inst.category("QxQ").total_dim() == 2);
    CHECK(inst.functor("d").functor.hom_map(0, 0).rows() == 2);
    CHECK(inst.torsion("all").trivial());
    CHECK_THROWS_AS(inst.functor("e"), Error);
}

TEST_CASE("parse errors carry a line or a field") {
    Error syntax = parse_error("{\n  \"categories\": {\n    oops\n}");
    CHECK(syntax.code() == ErrorCode::Parse);
    CHECK(std::string(syntax.what()).find("line 3") != std::string::npos);

    std::string bad = diagonal_doc;
    bad.replace(bad.find("[[\"1\"], [\"1\"]]"), 14, "[[\"1\"]]");
    Error shape = parse_error(bad);
    CHECK(shape.code() == ErrorCode::Parse);
    CHECK(std::string(shape.what()).find("functors.d") != std::string::npos);

    std::string rat = diagonal_doc;
    rat.replace(rat.find("\"unit\": [\"1\", \"1\"]"), 18, "\"unit\": [\"1/0\", \"1\"]");
    CHECK(parse_error(rat).code() == ErrorCode::Parse);
}

TEST_CASE("hash is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(instance_hash(builtin("corner_T2")) == instance_hash(builtin("corner_T2")));
}
