#include "cornerhom/builders.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "cornerhom/products.hpp"

namespace cornerhom {

std::string BuilderId::to_string() const
{
    std::string out = name;
    for (int p : params)
        out += ":" + std::to_string(p);
    return out;
}

BuilderId parse_builder_id(std::string_view text)
{
    BuilderId id;
    auto colon = text.find(':');
    id.name = std::string(text.substr(0, colon));
    if (id.name.empty())
        throw std::invalid_argument("empty builder name");
    while (colon != std::string_view::npos) {
        auto rest = text.substr(colon + 1);
        auto next = rest.find(':');
        auto token = rest.substr(0, next);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad builder parameter '" + std::string(token) + "'");
        id.params.push_back(value);
        colon = next == std::string_view::npos ? next : colon + 1 + next;
    }
    return id;
}

namespace {

Face make_face(std::string id, Tuple tuple, std::map<Label, std::string> parents = {})
{
    return Face{std::move(id), std::move(tuple), std::move(parents)};
}

void expect_params(const BuilderId& id, std::size_t n)
{
    if (id.params.size() != n)
        throw std::invalid_argument("builder '" + id.name + "' takes " + std::to_string(n) +
                                    " parameter(s)");
}

// Faces of [0,1]^dims (or of prefix + that boundary pattern). Axis a carries
// labels offset+2a+1 (coordinate 0) and offset+2a+2 (coordinate 1). A face is
// a word over {*,0,1}; dropping a label resets its axis to '*'.
std::vector<Face> box_faces(int dims, int offset, const std::string& prefix,
                            const std::string& interior_id)
{
    std::vector<Face> faces;
    int total = 1;
    for (int a = 0; a < dims; ++a)
        total *= 3;
    auto id_of = [&](const std::string& word) {
        if (word.find_first_not_of('*') == std::string::npos)
            return interior_id;
        return prefix + word;
    };
    for (int code = 0; code < total; ++code) {
        std::string word(static_cast<std::size_t>(dims), '*');
        int c = code;
        for (int a = 0; a < dims; ++a, c /= 3)
            word[static_cast<std::size_t>(a)] = "*01"[c % 3];
        Face f;
        f.id = id_of(word);
        for (int a = 0; a < dims; ++a) {
            char ch = word[static_cast<std::size_t>(a)];
            if (ch == '*')
                continue;
            Label l = offset + 2 * a + (ch == '0' ? 1 : 2);
            f.tuple.push_back(l);
            std::string up = word;
            up[static_cast<std::size_t>(a)] = '*';
            f.parents[l] = id_of(up);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

FaceComplex finish(FaceComplex complex, const std::string& name)
{
    return complex.with_name(name);
}

} // namespace

FaceComplex smooth()
{
    return FaceComplex(0, {make_face("X", {})}, {}, "smooth");
}

FaceComplex n_boundary_components(int n)
{
    if (n < 1)
        throw std::invalid_argument("n_boundary_components: n must be at least 1");
    std::vector<Face> faces{make_face("X", {})};
    for (Label i = 1; i <= n; ++i)
        faces.push_back(make_face("H" + std::to_string(i), {i}, {{i, "X"}}));
    return FaceComplex(n, std::move(faces), {}, "n_boundary_components:" + std::to_string(n));
}

FaceComplex interval()
{
    return finish(n_boundary_components(2), "interval");
}

FaceComplex halfline()
{
    return finish(n_boundary_components(1), "halfline");
}

FaceComplex quarter_plane()
{
    std::vector<Face> faces{
        make_face("X", {}),
        make_face("H1", {1}, {{1, "X"}}),
        make_face("H2", {2}, {{2, "X"}}),
        make_face("C", {1, 2}, {{1, "H2"}, {2, "H1"}}),
    };
    return FaceComplex(2, std::move(faces), {}, "quarter_plane");
}

FaceComplex two_chambers(int k)
{
    if (k < 0)
        throw std::invalid_argument("two_chambers: k must be nonnegative");
    std::vector<Face> faces{
        make_face("X", {}),
        make_face("H1", {1}, {{1, "X"}}),
        make_face("H2", {2}, {{2, "X"}}),
    };
    for (int j = 0; j <= k; ++j)
        faces.push_back(make_face("s" + std::to_string(j), {1, 2}, {{1, "H2"}, {2, "H1"}}));
    return FaceComplex(2, std::move(faces), {}, "two_chambers:" + std::to_string(k));
}

FaceComplex square()
{
    return FaceComplex(4, box_faces(2, 0, "", "**"), {}, "square");
}

FaceComplex cube()
{
    return FaceComplex(6, box_faces(3, 0, "", "***"), {}, "cube");
}

FaceComplex cube_with_cubic_hole()
{
    auto faces = box_faces(3, 0, "", "***");
    auto inner = box_faces(3, 6, "in:", "***");
    for (auto& f : inner)
        if (!f.tuple.empty())
            faces.push_back(std::move(f));
    return FaceComplex(12, std::move(faces), {}, "cube_with_cubic_hole");
}

FaceComplex cube_with_ball_hole()
{
    auto faces = box_faces(3, 0, "", "***");
    faces.push_back(make_face("sphere", {7}, {{7, "***"}}));
    return FaceComplex(7, std::move(faces), {}, "cube_with_ball_hole");
}

std::vector<std::string> builder_names()
{
    return {"smooth",       "interval", "halfline", "n_boundary_components",
            "quarter_plane", "two_chambers", "square", "cube",
            "cube_with_cubic_hole", "cube_with_ball_hole"};
}

FaceComplex build(const BuilderId& id)
{
    const auto& n = id.name;
    if (n == "n_boundary_components") {
        expect_params(id, 1);
        return n_boundary_components(id.params[0]);
    }
    if (n == "two_chambers") {
        expect_params(id, 1);
        return two_chambers(id.params[0]);
    }
    expect_params(id, 0);
    if (n == "smooth")
        return smooth();
    if (n == "interval")
        return interval();
    if (n == "halfline")
        return halfline();
    if (n == "quarter_plane")
        return quarter_plane();
    if (n == "square")
        return square();
    if (n == "cube")
        return cube();
    if (n == "cube_with_cubic_hole")
        return cube_with_cubic_hole();
    if (n == "cube_with_ball_hole")
        return cube_with_ball_hole();
    throw std::invalid_argument("unknown builder '" + n + "'");
}

FaceComplex build(std::string_view text)
{
    return build(parse_builder_id(text));
}

FaceComplex relabel(const FaceComplex& complex, const std::vector<Label>& sigma)
{
    if (sigma.size() != static_cast<std::size_t>(complex.num_hyperfaces()))
        throw std::invalid_argument("relabel: permutation size mismatch");
    auto map = [&](Label l) {
        if (l < 1 || l > complex.num_hyperfaces())
            throw std::invalid_argument("relabel: label out of range");
        return sigma[static_cast<std::size_t>(l - 1)];
    };
    std::vector<Face> faces;
    for (const auto& f : complex.faces()) {
        Face g;
        g.id = f.id;
        for (Label l : f.tuple)
            g.tuple.push_back(map(l));
        std::sort(g.tuple.begin(), g.tuple.end());
        for (const auto& [l, pid] : f.parents)
            g.parents[map(l)] = pid;
        faces.push_back(std::move(g));
    }
    return FaceComplex(complex.num_hyperfaces(), std::move(faces), complex.factors(),
                       complex.name());
}

FaceComplex random_product(std::uint64_t seed, const std::vector<BuilderId>& factors)
{
    FaceComplex result = smooth();
    std::string name;
    bool first = true;
    for (const auto& f : factors) {
        auto next = build(f);
        result = first ? next : product(result, next);
        name += (first ? "" : "*") + f.to_string();
        first = false;
    }
    if (first)
        name = "smooth";

    std::mt19937_64 rng(seed);
    std::vector<Label> sigma(static_cast<std::size_t>(result.num_hyperfaces()));
    for (std::size_t i = 0; i < sigma.size(); ++i)
        sigma[i] = static_cast<Label>(i + 1);
    for (std::size_t i = sigma.size(); i > 1; --i)
        std::swap(sigma[i - 1], sigma[rng() % i]);

    // A single factor keeps its own (trivial) provenance.
    auto out = relabel(result, sigma);
    return out.with_name("random_product:" + std::to_string(seed) + "[" + name + "]");
}

FaceComplex random_product(std::uint64_t seed, int max_total_codim)
{
    struct Candidate
    {
        const char* spec;
        int codim;
    };
    static constexpr Candidate pool[] = {
        {"smooth", 0},        {"interval", 1},       {"halfline", 1},
        {"n_boundary_components:3", 1}, {"quarter_plane", 2}, {"two_chambers:0", 2},
        {"two_chambers:1", 2}, {"two_chambers:2", 2}, {"square", 2},
        {"cube", 3},           {"cube_with_ball_hole", 3},
    };
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t count = 1 + rng() % 3;
    std::vector<BuilderId> chosen;
    int total = 0;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<const Candidate*> fitting;
        for (const auto& c : pool)
            if (total + c.codim <= max_total_codim)
                fitting.push_back(&c);
        const Candidate* pick = fitting[rng() % fitting.size()];
        chosen.push_back(parse_builder_id(pick->spec));
        total += pick->codim;
    }
    return random_product(seed, chosen);
}

} // namespace cornerhom
