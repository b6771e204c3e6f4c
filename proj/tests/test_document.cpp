#include <doctest.h>

#include <fstream>
#include <sstream>

#include "coinflip.hpp"
#include "vval/document.hpp"
#include "vval/errors.hpp"

using namespace vval;

namespace {

ValidationError::Kind validation_kind(const std::string& json)
{
    try {
        (void)parse_document(json);
    }
    catch (const ValidationError& e) {
        return e.kind();
    }
    FAIL("expected a validation error for " << json);
    return ValidationError::Kind::Malformed;
}

std::string message_of(const std::string& json)
{
    try {
        (void)parse_document(json);
    }
    catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("shipped fixture file matches the built-in model")
{
    std::ifstream in(VVAL_SOURCE_DIR "/fixtures/coinflip.json");
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    const ModelDocument file = parse_document(buf.str());
    CHECK(file.model == testing::coinflip().model);
    CHECK(file.measures == testing::coinflip().measures);
    CHECK(file.model.space().names()
          == std::vector<std::string>{"H-acc", "H-sh", "H-st", "T-acc", "T-sh", "T-st"});
    CHECK(builtin_document("nope") == std::nullopt);
}

TEST_CASE("dump then parse preserves the document")
{
    const ModelDocument& doc = testing::coinflip();
    const std::string text = dump_document(doc);
    const ModelDocument again = parse_document(text);
    CHECK(again.model == doc.model);
    CHECK(again.measures == doc.measures);
    CHECK(dump_document(again) == text);
    CHECK(text.find("\"*\"") != std::string::npos);
}

TEST_CASE("document validation")
{
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {"p": {"a": ["c"], "b": []}}})")
          == ValidationError::Kind::UndeclaredState);
    CHECK(message_of(R"({"states": ["a","b"], "atoms": {"p": {"a": ["c"], "b": []}}})").find("'c'")
          != std::string::npos);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {"p": {"a": []}}})") == ValidationError::Kind::MissingState);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {"p": {"a": [], "b": [], "z": []}}})")
          == ValidationError::Kind::UndeclaredState);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {"p": {"*": [], "a": []}}})")
          == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a","a"], "atoms": {}})") == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": [], "atoms": {}})") == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a"], "atoms": {"p-q": {"*": []}}})") == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a"]})") == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a"], "atoms": {}, "extra": 1})") == ValidationError::Kind::Malformed);
    CHECK(validation_kind("{not json") == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {}, "measures": {"m": {"a": "1/2", "b": "1/3"}}})")
          == ValidationError::Kind::BadSum);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {}, "measures": {"m": {"a": "2/4", "b": "1/2"}}})")
          == ValidationError::Kind::NonCanonicalRational);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {}, "measures": {"m": {"a": 0.5, "b": "1/2"}}})")
          == ValidationError::Kind::Malformed);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {}, "measures": {"m": {"a": "1"}}})")
          == ValidationError::Kind::MissingState);
    CHECK(validation_kind(R"({"states": ["a","b"], "atoms": {}, "measures": {"m": {"a": "3/2", "b": "-1/2"}}})")
          == ValidationError::Kind::NegativeWeight);
}

TEST_CASE("measures are optional; constant shorthand")
{
    const auto doc = parse_document(R"({"states": ["x","y","z"], "atoms": {"q": {"*": ["y", "z"]}}})");
    CHECK(doc.measures.empty());
    CHECK(doc.model.valuation("q").is_constant());
    CHECK(doc.model.valuation("q").truth_set() == doc.model.space().set_of({"y", "z"}));
    CHECK_THROWS_AS((void)doc.measure("pi"), LookupError);
}

TEST_CASE("state set text")
{
    const auto& space = testing::coinflip().model.space();
    const StateSet s = space.set_of({"T-sh", "H-acc"});
    CHECK(format_set(space, s) == "{H-acc,T-sh}");
    CHECK(format_set(space, space.none()) == "{}");
    CHECK(parse_state_set(space, " { T-sh , H-acc } ") == s);
    CHECK(parse_state_set(space, "{}").empty());
    CHECK_THROWS_AS((void)parse_state_set(space, "{H-acc, nope}"), LookupError);
    CHECK_THROWS_AS((void)parse_state_set(space, "H-acc"), ValidationError);
    CHECK_THROWS_AS((void)parse_state_set(space, "{H-acc,,T-sh}"), ValidationError);
}
