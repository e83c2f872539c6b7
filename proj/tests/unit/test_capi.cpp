#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "cornerhom/cornerhom.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    ch_string_free(s);
    return out;
}

} // namespace

TEST_CASE("c api: builders, report and characters", "[capi]")
{
    ch_complex* cube = nullptr;
    REQUIRE(ch_complex_from_builder("cube", &cube) == CH_OK);
    char* text = nullptr;
    REQUIRE(ch_report(cube, CH_FORMAT_TEXT, &text) == CH_OK);
    auto report = take(text);
    REQUIRE(report.find("K1 = Z") != std::string::npos);
    REQUIRE(ch_report(cube, CH_FORMAT_JSON, &text) == CH_OK);
    REQUIRE(take(text).find("\"K1\"") != std::string::npos);
    ch_characters chars{};
    REQUIRE(ch_corner_characters(cube, &chars) == CH_OK);
    REQUIRE(chars.chi == -1);
    size_t n = 0;
    REQUIRE(ch_complex_face_count(cube, &n) == CH_OK);
    REQUIRE(n == 27);
    ch_complex_free(cube);
}

TEST_CASE("c api: errors", "[capi]")
{
    ch_complex* c = nullptr;
    REQUIRE(ch_complex_from_builder("nope", &c) == CH_INVALID_ARGUMENT);
    REQUIRE(std::string(ch_last_error()).find("nope") != std::string::npos);
    REQUIRE(ch_complex_from_document("{", &c) == CH_PARSE_ERROR);
    REQUIRE(ch_complex_load("/nonexistent/file.json", &c) == CH_IO_ERROR);
    REQUIRE(ch_complex_from_builder(nullptr, &c) == CH_INVALID_ARGUMENT);

    const char* bad = R"({"format_version": 1, "num_hyperfaces": 1,
        "faces": [{"id": "X", "tuple": [], "parents": {}}, {"id": "H", "tuple": [1], "parents": {}}]})";
    REQUIRE(ch_complex_from_document(bad, &c) == CH_OK);
    int ok = 1;
    char* text = nullptr;
    REQUIRE(ch_validate(c, &ok, &text) == CH_OK);
    REQUIRE(ok == 0);
    REQUIRE(take(text).find("parent-keys") != std::string::npos);
    REQUIRE(ch_homology(c, CH_FORMAT_TEXT, &text) == CH_VALIDATION_ERROR);
    ch_complex_free(c);
}

TEST_CASE("c api: products, serialization, les", "[capi]")
{
    ch_complex *a = nullptr, *b = nullptr, *p = nullptr;
    REQUIRE(ch_complex_from_builder("interval", &a) == CH_OK);
    REQUIRE(ch_complex_from_builder("two_chambers:2", &b) == CH_OK);
    REQUIRE(ch_complex_product(a, b, &p) == CH_OK);
    char* text = nullptr;
    REQUIRE(ch_complex_serialize(p, &text) == CH_OK);
    auto doc = take(text);
    ch_complex* q = nullptr;
    REQUIRE(ch_complex_from_document(doc.c_str(), &q) == CH_OK);
    REQUIRE(ch_complex_serialize(q, &text) == CH_OK);
    REQUIRE(take(text) == doc);

    int exact = 0;
    REQUIRE(ch_les(p, 1, &exact, &text) == CH_OK);
    REQUIRE(exact == 1);
    REQUIRE(take(text).find("exact = true") != std::string::npos);
    REQUIRE(ch_les(p, 9, &exact, nullptr) == CH_INVALID_ARGUMENT);
    for (auto* c : {a, b, p, q})
        ch_complex_free(c);
}
