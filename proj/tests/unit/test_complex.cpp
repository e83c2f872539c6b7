#include <catch2/catch_amalgamated.hpp>

#include "cornerhom/builders.hpp"
#include "cornerhom/complex.hpp"

using namespace cornerhom;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule)
{
    for (const auto& v : r.violations)
        if (v.rule == rule)
            return true;
    return false;
}

std::vector<Face> quarter_faces()
{
    return {{"X", {}, {}},
            {"H1", {1}, {{1, "X"}}},
            {"H2", {2}, {{2, "X"}}},
            {"C", {1, 2}, {{1, "H2"}, {2, "H1"}}}};
}

// [0,inf)^n: one face per subset of labels, id "F" + labels.
std::vector<Face> corner_faces(int n)
{
    std::vector<Face> faces;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Face f;
        auto id = [](int m) {
            std::string s = "F";
            for (int i = 0; i < 8; ++i)
                if (m & (1 << i))
                    s += std::to_string(i + 1);
            return s;
        };
        f.id = mask == 0 ? "X" : id(mask);
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) {
                f.tuple.push_back(i + 1);
                int rest = mask & ~(1 << i);
                f.parents[i + 1] = rest == 0 ? "X" : id(rest);
            }
        faces.push_back(f);
    }
    return faces;
}

} // namespace

TEST_CASE("canonical order sorts by codimension then tuple", "[complex]")
{
    std::vector<Face> faces = quarter_faces();
    std::reverse(faces.begin(), faces.end());
    FaceComplex c(2, faces);
    REQUIRE(c.face(0).id == "X");
    REQUIRE(c.face(1).id == "H1");
    REQUIRE(c.face(3).id == "C");
    REQUIRE(c.codim_range(1) == std::pair<std::size_t, std::size_t>{1, 3});
    REQUIRE(c.max_codim() == 2);
    REQUIRE(*c.parent_index(3, 1) == 2);
    REQUIRE(validate(c).ok);
}

TEST_CASE("validation names each broken rule", "[complex]")
{
    SECTION("diamond")
    {
        auto faces = corner_faces(4);
        REQUIRE(validate(FaceComplex(4, faces)).ok);
        // A second (1,2) edge that only the 123 face points to: dropping
        // {3,4} from the vertex gives two different edges.
        faces.push_back({"F12b", {1, 2}, {{1, "F2"}, {2, "F1"}}});
        for (auto& f : faces)
            if (f.id == "F123")
                f.parents[3] = "F12b";
        auto r = validate(FaceComplex(4, faces));
        REQUIRE_FALSE(r.ok);
        REQUIRE(has_rule(r, rules::kDiamond));
        REQUIRE(r.violations.size() == 1);
        REQUIRE(r.violations[0].faces[0] == "F1234");
    }
    SECTION("duplicate id")
    {
        auto faces = quarter_faces();
        faces[2].id = "H1";
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kDuplicateId));
    }
    SECTION("missing parent key")
    {
        auto faces = quarter_faces();
        faces[3].parents.erase(2);
        auto r = validate(FaceComplex(2, faces));
        REQUIRE(has_rule(r, rules::kParentKeys));
        REQUIRE(std::find(r.violations[0].faces.begin(), r.violations[0].faces.end(), "C") !=
                r.violations[0].faces.end());
    }
    SECTION("parent with the wrong tuple")
    {
        auto faces = quarter_faces();
        faces[3].parents[1] = "H1";
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kParentTuple));
    }
    SECTION("unresolved parent")
    {
        auto faces = quarter_faces();
        faces[3].parents[1] = "nowhere";
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kParentResolves));
    }
    SECTION("labels out of range or not increasing")
    {
        auto faces = quarter_faces();
        faces[3].tuple = {2, 1};
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kTupleIncreasing));
        REQUIRE(has_rule(validate(FaceComplex(1, quarter_faces())), rules::kTupleRange));
    }
    SECTION("hyperfaces and interior are unique")
    {
        auto faces = quarter_faces();
        faces.push_back({"H1b", {1}, {{1, "X"}}});
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kHyperfaceUnique));
        faces = quarter_faces();
        faces.push_back({"Y", {}, {}});
        REQUIRE(has_rule(validate(FaceComplex(2, faces)), rules::kInteriorUnique));
    }
    SECTION("require_valid throws")
    {
        auto faces = quarter_faces();
        faces[3].parents.erase(1);
        REQUIRE_THROWS_AS(require_valid(FaceComplex(2, faces)), std::invalid_argument);
    }
}

TEST_CASE("ancestor composes parent maps", "[complex]")
{
    auto c = cube();
    auto [b, e] = c.codim_range(3);
    for (std::size_t v = b; v < e; ++v) {
        const auto& t = c.face(v).tuple;
        std::vector<Label> all(t.begin(), t.end());
        REQUIRE(ancestor(c, v, all) == 0);
        for (Label l : t) {
            std::vector<Label> one{l};
            REQUIRE(ancestor(c, v, one) == *c.parent_index(v, l));
        }
    }
    std::vector<Label> bogus{99};
    REQUIRE_THROWS(ancestor(c, b, bogus));
}

TEST_CASE("face counts and boundary components", "[complex]")
{
    REQUIRE(face_counts(cube()) == std::vector<std::size_t>{1, 6, 12, 8});
    REQUIRE(boundary_components(cube()).size() == 1);
    REQUIRE(boundary_components(n_boundary_components(4)).size() == 4);
    REQUIRE(boundary_components(cube_with_cubic_hole()).size() == 2);
    REQUIRE(boundary_components(cube_with_ball_hole()).size() == 2);
    REQUIRE(boundary_components(smooth()).empty());
}

TEST_CASE("isomorphism ignores ids and detects structure", "[complex]")
{
    auto a = cube();
    std::vector<Face> renamed = a.faces();
    for (auto& f : renamed) {
        f.id = "z" + f.id;
        for (auto& [l, p] : f.parents)
            p = "z" + p;
    }
    REQUIRE(isomorphic(a, FaceComplex(a.num_hyperfaces(), renamed)));
    REQUIRE_FALSE(isomorphic(a, square()));
    REQUIRE_FALSE(isomorphic(two_chambers(1), two_chambers(2)));
}
