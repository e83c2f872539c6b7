// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
// usage: acceptance <path to cornerhom cli>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cornerhom/builders.hpp"
#include "cornerhom/chains.hpp"
#include "cornerhom/cornerhom.h"
#include "cornerhom/homology.hpp"
#include "cornerhom/products.hpp"
#include "cornerhom/report.hpp"
#include "../oracles.hpp"

using namespace cornerhom;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

std::vector<std::string> builder_fixtures()
{
    std::vector<std::string> out = {"smooth", "interval", "halfline", "quarter_plane", "square", "cube",
                                    "cube_with_cubic_hole", "cube_with_ball_hole"};
    for (int n = 1; n <= 5; ++n)
        out.push_back("n_boundary_components:" + std::to_string(n));
    for (int k = 0; k <= 5; ++k)
        out.push_back("two_chambers:" + std::to_string(k));
    return out;
}

std::vector<FaceComplex> random_fixtures(std::size_t count)
{
    std::vector<FaceComplex> out;
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_product(rng(), 4));
    return out;
}

std::vector<FaceComplex> all_fixtures()
{
    std::vector<FaceComplex> out;
    for (const auto& b : builder_fixtures())
        out.push_back(build(b));
    auto r = random_fixtures(100);
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

Outcome criterion1()
{
    Outcome o;
    auto expect = [&](const std::string& spec, AbelianGroup even, AbelianGroup odd) {
        auto t = conormal_homology(build(spec));
        if (t.even != even || t.odd != odd)
            o.fail(spec + " gives (" + t.even.to_string() + ", " + t.odd.to_string() + "), expected (" +
                   even.to_string() + ", " + odd.to_string() + ")");
    };
    expect("smooth", AbelianGroup(1), AbelianGroup());
    for (int n = 1; n <= 5; ++n)
        expect("n_boundary_components:" + std::to_string(n), AbelianGroup(), AbelianGroup(n - 1));
    expect("quarter_plane", AbelianGroup(), AbelianGroup());
    for (int k = 0; k <= 5; ++k)
        expect("two_chambers:" + std::to_string(k), AbelianGroup(k), AbelianGroup());
    expect("cube", AbelianGroup(), AbelianGroup(1));
    expect("cube_with_cubic_hole", AbelianGroup(), AbelianGroup(3));
    expect("cube_with_ball_hole", AbelianGroup(), AbelianGroup(2));
    return o;
}

Outcome criterion2()
{
    Outcome o;
    std::size_t randoms = 0;
    for (const auto& x : all_fixtures()) {
        if (x.name().rfind("random_product", 0) == 0)
            ++randoms;
        for (std::size_t p = 2; p <= x.max_codim(); ++p)
            if (!(delta(x, p - 1).matrix * delta(x, p).matrix).is_zero())
                o.fail(x.name() + ": delta o delta != 0 at degree " + std::to_string(p));
        auto pcn = delta_pcn(x);
        if (!(pcn.odd_to_even * pcn.even_to_odd).is_zero() || !(pcn.even_to_odd * pcn.odd_to_even).is_zero())
            o.fail(x.name() + ": delta_pcn o delta_pcn != 0");
        auto h = h_operator(x), hi = h_inverse(x), d = total_delta(x), dp = total_delta_pcn(x);
        auto id = SparseMatrix::identity(x.num_faces());
        if (!(h * hi == id) || !(hi * h == id))
            o.fail(x.name() + ": h h^-1 != Id");
        if (!(h * d == dp) || !(d * h == dp))
            o.fail(x.name() + ": delta_pcn != h delta or delta h");
    }
    if (randoms < 100)
        o.fail("only " + std::to_string(randoms) + " random products");
    if (o.pass)
        o.detail = "all builders and " + std::to_string(randoms) + " seeded random products";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    for (const auto& x : all_fixtures()) {
        auto t = conormal_homology(x);
        auto [even, odd] = periodic_homology_direct(x);
        if (even != t.even || odd != t.odd)
            o.fail(x.name() + ": direct (" + even.to_string() + ", " + odd.to_string() + ") vs graded (" +
                   t.even.to_string() + ", " + t.odd.to_string() + ")");
    }
    return o;
}

Outcome criterion4()
{
    Outcome o;
    std::size_t nodes = 0, cycles = 0;
    for (const auto& spec : builder_fixtures()) {
        auto x = build(spec);
        const std::size_t d = x.max_codim();
        for (std::size_t m = 0; m <= d; ++m) {
            auto les = les_exactness(x, m);
            for (const auto& node : les.nodes) {
                ++nodes;
                if (!node.exact)
                    o.fail(spec + " m=" + std::to_string(m) + ": not exact at " + node.label);
            }
            // [delta(rho(c))] on the explicit relative cycle basis, all p.
            auto pres = filtration_presentations(x, m);
            for (std::size_t p = 1; p <= d; ++p) {
                auto conn = connecting_map(x, m, p);
                if (!conn.well_defined)
                    o.fail(spec + ": connecting map not well defined");
                const auto& rel = pres.quotient[p];
                const auto& sub = pres.sub[p - 1];
                auto dp = delta(x, p).matrix.to_dense();
                for (std::size_t j = 0; j < rel.num_generators(); ++j) {
                    ++cycles;
                    auto image = dp * rel.cycles.column(j);
                    // rho(c) only has faces of codimension > m; delta of it must
                    // land in X_m when it is nonzero in H_{p-1}(X_m).
                    if (p - 1 > m) {
                        bool zero = true;
                        for (std::size_t i = 0; i < conn.matrix.rows(); ++i)
                            zero = zero && conn.matrix(i, j) == 0;
                        if (!zero)
                            o.fail(spec + ": connecting map nonzero outside X_m");
                        continue;
                    }
                    auto coords = sub.coordinates(image);
                    if (!coords) {
                        o.fail(spec + ": delta(rho(c)) is not a cycle of X_m");
                        continue;
                    }
                    IntVector diff(coords->size());
                    for (std::size_t i = 0; i < diff.size(); ++i)
                        diff[i] = (*coords)[i] - conn.matrix(i, j);
                    if (!sub.is_relation(diff))
                        o.fail(spec + " m=" + std::to_string(m) + " p=" + std::to_string(p) +
                               ": connecting map differs from [delta(rho(c))]");
                }
            }
        }
        if (d >= 1 && !h0pcn_corollary_check(x).isomorphism)
            o.fail(spec + ": H0pcn(X) -> H0pcn(X,X0) not an isomorphism");
    }
    if (o.pass)
        o.detail = std::to_string(nodes) + " nodes exact, " + std::to_string(cycles) + " relative cycles checked";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    auto specs = builder_fixtures();
    std::size_t pairs = 0;
    for (const auto& a : specs)
        for (const auto& b : specs) {
            auto xa = build(a), xb = build(b);
            if (std::min(xa.max_codim(), xb.max_codim()) > 2)
                continue;
            ++pairs;
            auto r = kunneth_check_integral(xa, xb);
            if (!r.holds)
                o.fail("integral " + a + " x " + b + ": expected (" + r.expected_even.to_string() + ", " +
                       r.expected_odd.to_string() + ") got (" + r.actual_even.to_string() + ", " +
                       r.actual_odd.to_string() + ")");
        }
    if (!kunneth_check_rational(cube(), cube()).holds)
        o.fail("rational cube x cube");
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            if (!kunneth_check_rational(two_chambers(i), two_chambers(j)).holds)
                o.fail("rational two_chambers:" + std::to_string(i) + " x two_chambers:" + std::to_string(j));
    if (o.pass)
        o.detail = std::to_string(pairs) + " integral pairs, 17 rational pairs";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    for (const auto& x : all_fixtures()) {
        auto t = conormal_homology(x);
        if (x.max_codim() <= 2)
            for (std::size_t p = 0; p < t.graded.size(); ++p)
                if (!t.graded[p].is_torsion_free())
                    o.fail(x.name() + ": torsion in H" + std::to_string(p));
        if (x.max_codim() == 3 && !t.odd.is_torsion_free())
            o.fail(x.name() + ": torsion in H1pcn");
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        IntegerMatrix a(rows, cols);
        oracle::Dense dense(rows, std::vector<oracle::Int>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                long v = static_cast<long>(rng() % 19) - 9;
                a(r, c) = v;
                dense[r][c] = v;
            }
        if (smith(a).invariant_factors() != oracle::invariant_factors(dense))
            o.fail("mismatch on " + a.to_string());
    }
    if (o.pass)
        o.detail = "500 matrices";
    return o;
}

std::string report_of(const char* builder)
{
    ch_complex* c = nullptr;
    if (ch_complex_from_builder(builder, &c) != CH_OK)
        return {};
    char* text = nullptr;
    std::string out;
    if (ch_report(c, CH_FORMAT_TEXT, &text) == CH_OK)
        out = text;
    ch_string_free(text);
    ch_complex_free(c);
    return out;
}

Outcome criterion8()
{
    Outcome o;
    for (const auto& x : all_fixtures()) {
        try {
            (void)corner_characters(x);
        } catch (const std::logic_error& e) {
            o.fail(x.name() + ": " + e.what());
        }
    }
    auto cube = report_of("cube");
    for (const char* line : {"K0 = 0\n", "K1 = Z\n", "sufficient_HFP = true\n", "ktheory = integral\n"})
        if (cube.find(line) == std::string::npos)
            o.fail(std::string("cube report lacks ") + line);
    if (report_of("two_chambers:1").find("necessary_FP_obstruction = true\n") == std::string::npos)
        o.fail("two_chambers:1 does not report necessary_FP_obstruction = true");
    return o;
}

std::string run_command(const std::string& cmd, int& status)
{
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
        out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

Outcome criterion9(const std::string& cli)
{
    Outcome o;
    if (cli.empty()) {
        o.fail("no cli path given");
        return o;
    }
    int s1 = 0, s2 = 0;
    auto a = run_command("'" + cli + "' selftest --seed 7", s1);
    auto b = run_command("'" + cli + "' selftest --seed 7", s2);
    if (s1 != 0 || s2 != 0)
        o.fail("selftest exited with a failure status");
    if (a.empty() || a != b)
        o.fail("logs differ");
    if (a.find("seed = 7") == std::string::npos)
        o.fail("log does not record the seed");
    if (o.pass)
        o.detail = std::to_string(a.size()) + " identical bytes";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 worked examples, exact groups", criterion1},
        {"2 differential laws", criterion2},
        {"3 quasi-isomorphism", criterion3},
        {"4 long exact sequence", criterion4},
        {"5 kunneth", criterion5},
        {"6 torsion freeness", criterion6},
        {"7 smith normal form oracle", criterion7},
        {"8 characters and k-theory", criterion8},
        {"9 determinism", [&] { return criterion9(cli); }},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name;
        if (!o.detail.empty())
            std::cout << " -- " << o.detail;
        std::cout << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed" : std::string("acceptance: all passed"))
              << "\n";
    return failed ? 1 : 0;
}
