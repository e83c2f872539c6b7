#include <catch2/catch_amalgamated.hpp>

#include "cornerhom/builders.hpp"
#include "cornerhom/chains.hpp"
#include "cornerhom/homology.hpp"
#include "helpers.hpp"

using namespace cornerhom;

namespace {

AbelianGroup Z(std::size_t r = 1)
{
    return AbelianGroup(r);
}

// Graded homology straight from the delta matrices and the brute-force
// oracles.
std::vector<AbelianGroup> oracle_graded(const FaceComplex& x)
{
    const std::size_t d = x.max_codim();
    std::vector<AbelianGroup> out;
    for (std::size_t p = 0; p <= d; ++p) {
        oracle::Dense d_in, d_out;
        if (p + 1 <= d)
            d_in = to_dense(delta(x, p + 1).matrix);
        if (p >= 1)
            d_out = to_dense(delta(x, p).matrix);
        out.push_back(oracle_homology(x.count_codim(p), d_in, d_out));
    }
    return out;
}

} // namespace

TEST_CASE("worked examples: graded groups", "[homology]")
{
    REQUIRE(conormal_homology(smooth()).graded == std::vector<AbelianGroup>{Z()});
    REQUIRE(conormal_homology(cube()).graded == std::vector<AbelianGroup>{{}, {}, {}, Z()});
    REQUIRE(conormal_homology(cube_with_cubic_hole()).graded == std::vector<AbelianGroup>{{}, Z(), {}, Z(2)});
    REQUIRE(conormal_homology(cube_with_ball_hole()).graded == std::vector<AbelianGroup>{{}, Z(), {}, Z()});
    for (int k = 0; k <= 5; ++k)
        REQUIRE(conormal_homology(two_chambers(k)).graded[2] == Z(k));
    for (int n = 1; n <= 5; ++n)
        REQUIRE(conormal_homology(n_boundary_components(n)).graded[1] == Z(n - 1));
}

TEST_CASE("boundary differences span the kernel of delta_1", "[homology]")
{
    auto x = n_boundary_components(4);
    auto d1 = delta(x, 1).matrix.to_dense();
    auto kernel = kernel_basis(d1);
    REQUIRE(kernel.cols() == 3);
    // f_i - f_{i+1} lies in the kernel and the kernel has no other part.
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        IntVector v(4, 0);
        v[i] = 1;
        v[i + 1] = -1;
        REQUIRE(solve(kernel, v).has_value());
    }
}

TEST_CASE("graded homology agrees with the brute-force oracle", "[homology]")
{
    for (const char* name : {"smooth", "interval", "halfline", "n_boundary_components:3", "quarter_plane",
                             "two_chambers:3", "square", "cube", "cube_with_ball_hole"}) {
        INFO(name);
        auto x = build(std::string_view(name));
        REQUIRE(conormal_homology(x).graded == oracle_graded(x));
    }
}

TEST_CASE("periodic homology computed directly equals the graded sums", "[homology]")
{
    for (const auto& name : {"smooth", "interval", "quarter_plane", "two_chambers:4", "square", "cube",
                             "cube_with_cubic_hole", "cube_with_ball_hole"}) {
        INFO(name);
        auto x = build(std::string_view(name));
        auto table = conormal_homology(x);
        auto [even, odd] = periodic_homology_direct(x);
        REQUIRE(even == table.even);
        REQUIRE(odd == table.odd);
    }
    // Relabeled products exercise nontrivial orderings.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto x = random_product(seed, 4);
        INFO(x.name());
        auto table = conormal_homology(x);
        auto [even, odd] = periodic_homology_direct(x);
        REQUIRE(even == table.even);
        REQUIRE(odd == table.odd);
    }
}

TEST_CASE("filtration pieces", "[homology]")
{
    auto x = cube();
    // X_0 is the interior alone; C(X, X_2) is the vertices.
    REQUIRE(sub_homology(x, 0).graded[0] == Z());
    REQUIRE(relative_homology(x, 2).graded[3] == Z(8));
    REQUIRE(relative_homology(x, 3).graded == std::vector<AbelianGroup>(4));
    REQUIRE(sub_homology(x, 3) == conormal_homology(x));
    REQUIRE_THROWS(relative_homology(x, 4));
}

TEST_CASE("long exact sequences are exact at every node", "[homology]")
{
    for (const char* name : {"interval", "n_boundary_components:3", "quarter_plane", "two_chambers:2", "square",
                             "cube", "cube_with_cubic_hole", "cube_with_ball_hole"}) {
        auto x = build(std::string_view(name));
        for (std::size_t m = 0; m <= x.max_codim(); ++m) {
            INFO(name << " m=" << m);
            auto les = les_exactness(x, m);
            REQUIRE(les.nodes.size() == 3 * (x.max_codim() + 1));
            for (const auto& node : les.nodes) {
                INFO(node.label);
                REQUIRE(node.exact);
            }
            REQUIRE(les.exact);
        }
    }
}

TEST_CASE("connecting map is [delta(rho(c))] on explicit cycles", "[homology]")
{
    for (const char* name : {"quarter_plane", "two_chambers:3", "square", "cube", "cube_with_ball_hole"}) {
        auto x = build(std::string_view(name));
        for (std::size_t m = 0; m < x.max_codim(); ++m) {
            auto pres = filtration_presentations(x, m);
            // Only p = m + 1 has a nonzero map: lower relative groups vanish.
            const std::size_t p = m + 1;
            INFO(name << " m=" << m);
            auto conn = connecting_map(x, m, p);
            REQUIRE(conn.well_defined);
            const auto& rel = pres.quotient[p];
            const auto& sub = pres.sub[p - 1];
            auto d = delta(x, p).matrix.to_dense();
            for (std::size_t j = 0; j < rel.num_generators(); ++j) {
                // rho lifts a relative cycle to the same chain in X; delta of
                // it has codimension m, so it lives in X_m.
                auto image = d * rel.cycles.column(j);
                auto coords = sub.coordinates(image);
                REQUIRE(coords.has_value());
                IntVector diff(coords->size());
                for (std::size_t i = 0; i < diff.size(); ++i)
                    diff[i] = (*coords)[i] - conn.matrix(i, j);
                REQUIRE(sub.is_relation(diff));
            }
        }
    }
}

TEST_CASE("degree zero corollary", "[homology]")
{
    for (const char* name : {"interval", "halfline", "quarter_plane", "two_chambers:3", "square", "cube",
                             "cube_with_cubic_hole", "cube_with_ball_hole"}) {
        INFO(name);
        auto c = h0pcn_corollary_check(build(std::string_view(name)));
        REQUIRE(c.isomorphism);
        REQUIRE(c.source == c.target);
    }
    REQUIRE_THROWS(h0pcn_corollary_check(smooth()));
}

TEST_CASE("torsion freeness in low codimension", "[homology]")
{
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        auto x = random_product(seed, 4);
        auto table = conormal_homology(x);
        INFO(x.name());
        if (x.max_codim() <= 2)
            for (const auto& g : table.graded)
                REQUIRE(g.is_torsion_free());
        if (x.max_codim() == 3)
            REQUIRE(table.odd.is_torsion_free());
    }
}

TEST_CASE("invalid complexes are rejected", "[homology]")
{
    std::vector<Face> faces = {{"X", {}, {}}, {"H1", {1}, {}}};
    REQUIRE_THROWS_AS(conormal_homology(FaceComplex(1, faces)), std::invalid_argument);
}
