#include "cornerhom/products.hpp"

#include <algorithm>
#include <tuple>

#include "cornerhom/homology.hpp"

namespace cornerhom {

std::string product_face_id(const std::string& f, const std::string& g)
{
    return "(" + f + "," + g + ")";
}

FaceComplex product(const FaceComplex& x1, const FaceComplex& x2)
{
    require_valid(x1);
    require_valid(x2);
    const int shift = x1.num_hyperfaces();

    std::vector<Face> faces;
    faces.reserve(x1.num_faces() * x2.num_faces());
    for (const auto& f : x1.faces()) {
        for (const auto& g : x2.faces()) {
            Face fg;
            fg.id = product_face_id(f.id, g.id);
            fg.tuple = f.tuple;
            for (Label l : g.tuple)
                fg.tuple.push_back(l + shift);
            for (const auto& [l, pid] : f.parents)
                fg.parents[l] = product_face_id(pid, g.id);
            for (const auto& [l, pid] : g.parents)
                fg.parents[l + shift] = product_face_id(f.id, pid);
            faces.push_back(std::move(fg));
        }
    }

    std::vector<FactorInfo> factors = x1.effective_factors();
    for (auto info : x2.effective_factors()) {
        info.label_offset += shift;
        factors.push_back(std::move(info));
    }

    std::string name = (x1.name().empty() ? "?" : x1.name()) + "*" +
                       (x2.name().empty() ? "?" : x2.name());
    return FaceComplex(x1.num_hyperfaces() + x2.num_hyperfaces(), std::move(faces),
                       std::move(factors), std::move(name));
}

namespace {

std::pair<AbelianGroup, AbelianGroup> kunneth_formula(const HomologyTable& a,
                                                      const HomologyTable& b)
{
    AbelianGroup even = direct_sum(tensor(a.even, b.even), tensor(a.odd, b.odd));
    AbelianGroup odd = direct_sum(tensor(a.even, b.odd), tensor(a.odd, b.even));
    return {even, odd};
}

bool torsion_free(const HomologyTable& t)
{
    return std::all_of(t.graded.begin(), t.graded.end(),
                       [](const AbelianGroup& g) { return g.is_torsion_free(); });
}

} // namespace

KunnethResult kunneth_check_integral(const FaceComplex& x1, const FaceComplex& x2)
{
    KunnethResult r;
    r.hypothesis_holds = std::min(x1.max_codim(), x2.max_codim()) <= 2;

    auto h1 = conormal_homology(x1);
    auto h2 = conormal_homology(x2);
    r.factors_torsion_free = torsion_free(h1) || torsion_free(h2);

    std::tie(r.expected_even, r.expected_odd) = kunneth_formula(h1, h2);
    auto hp = conormal_homology(product(x1, x2));
    r.actual_even = hp.even;
    r.actual_odd = hp.odd;
    r.holds = r.expected_even == r.actual_even && r.expected_odd == r.actual_odd;
    return r;
}

RationalKunnethResult kunneth_check_rational(const FaceComplex& x1, const FaceComplex& x2)
{
    auto h1 = conormal_homology(x1);
    auto h2 = conormal_homology(x2);
    const long a0 = static_cast<long>(h1.even.free_rank), a1 = static_cast<long>(h1.odd.free_rank);
    const long b0 = static_cast<long>(h2.even.free_rank), b1 = static_cast<long>(h2.odd.free_rank);

    RationalKunnethResult r;
    r.expected_chi0 = a0 * b0 + a1 * b1;
    r.expected_chi1 = a0 * b1 + a1 * b0;
    auto hp = conormal_homology(product(x1, x2));
    r.actual_chi0 = static_cast<long>(hp.even.free_rank);
    r.actual_chi1 = static_cast<long>(hp.odd.free_rank);
    r.holds = r.expected_chi0 == r.actual_chi0 && r.expected_chi1 == r.actual_chi1;
    return r;
}

} // namespace cornerhom
