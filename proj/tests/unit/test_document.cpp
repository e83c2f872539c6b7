#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "cornerhom/builders.hpp"
#include "cornerhom/document.hpp"
#include "cornerhom/products.hpp"

using namespace cornerhom;

TEST_CASE("round trip is exact for every builder and products", "[document]")
{
    for (const char* spec : {"smooth", "interval", "quarter_plane", "two_chambers:3", "cube", "cube_with_cubic_hole",
                             "cube_with_ball_hole"}) {
        auto x = build(std::string_view(spec));
        auto text = serialize(x);
        auto y = parse_document(text);
        REQUIRE(y == x);
        REQUIRE(isomorphic(x, y));
        REQUIRE(serialize(y) == text);
    }
    auto p = product(cube(), interval());
    auto q = parse_document(serialize(p));
    REQUIRE(q.factors() == p.factors());
    REQUIRE(q.factors().size() == 2);
}

TEST_CASE("serialization is canonical", "[document]")
{
    auto text = serialize(quarter_plane());
    // Keys sorted, faces in canonical order.
    REQUIRE(text.find("\"faces\"") < text.find("\"format_version\""));
    REQUIRE(text.find("\"H1\"") < text.find("\"H2\""));
}

TEST_CASE("structural errors carry locations", "[document]")
{
    try {
        parse_document(R"({"format_version": 1, "num_hyperfaces": 1,
                           "faces": [{"id": "X", "tuple": [], "parents": {}},
                                     {"id": "H1", "tuple": ["a"], "parents": {"one": "X"}}]})");
        FAIL("expected DocumentError");
    } catch (const DocumentError& e) {
        REQUIRE(e.issues().size() == 2);
        REQUIRE(e.issues()[0].location == "faces[1].tuple[0]");
        REQUIRE(e.issues()[1].location == "faces[1].parents.one");
    }
    REQUIRE_THROWS_AS(parse_document("{not json"), DocumentError);
    REQUIRE_THROWS_AS(parse_document(R"({"format_version": 2, "num_hyperfaces": 0, "faces": []})"), DocumentError);
}

TEST_CASE("semantic errors name the face", "[document]")
{
    auto text = R"({"format_version": 1, "num_hyperfaces": 2,
                    "faces": [{"id": "X", "tuple": [], "parents": {}},
                              {"id": "H1", "tuple": [1], "parents": {"1": "X"}},
                              {"id": "H2", "tuple": [2], "parents": {"2": "X"}},
                              {"id": "C", "tuple": [1, 2], "parents": {"1": "H2"}}]})";
    REQUIRE_NOTHROW(parse_document(text));
    try {
        parse_document_checked(text);
        FAIL("expected DocumentError");
    } catch (const DocumentError& e) {
        REQUIRE(e.issues().size() == 1);
        REQUIRE(e.issues()[0].location == "faces C");
        REQUIRE(e.issues()[0].message == "violates parent-keys");
    }
}

TEST_CASE("factors metadata is carried", "[document]")
{
    auto x = parse_document(R"({"format_version": 1, "num_hyperfaces": 1,
        "faces": [{"id": "X", "tuple": [], "parents": {}}, {"id": "H", "tuple": [1], "parents": {"1": "X"}}],
        "factors": [{"name": "halfline", "max_codim": 1, "num_hyperfaces": 1, "label_offset": 0}]})");
    REQUIRE(x.factors().size() == 1);
    REQUIRE(x.factors()[0].name == "halfline");
}

TEST_CASE("files", "[document]")
{
    auto path = std::filesystem::temp_directory_path() / "cornerhom_test_doc.json";
    save_document(path, cube());
    REQUIRE(load_document(path) == cube());
    std::filesystem::remove(path);
    REQUIRE_THROWS_AS(load_document(path), DocumentError);
}
