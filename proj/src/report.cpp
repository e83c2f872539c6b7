#include "cornerhom/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cornerhom {

namespace {

long alternating_face_count(const FaceComplex& complex)
{
    long chi = 0;
    for (std::size_t p = 0; p <= complex.max_codim(); ++p) {
        long n = static_cast<long>(complex.count_codim(p));
        chi += p % 2 == 0 ? n : -n;
    }
    return chi;
}

const char* flag(bool b)
{
    return b ? "true" : "false";
}

} // namespace

CornerCharacters corner_characters(const FaceComplex& complex, const HomologyTable& homology)
{
    CornerCharacters c;
    c.chi0 = static_cast<long>(homology.even.free_rank);
    c.chi1 = static_cast<long>(homology.odd.free_rank);
    c.chi = c.chi0 - c.chi1;
    c.chi_from_faces = alternating_face_count(complex);
    if (c.chi != c.chi_from_faces)
        throw std::logic_error("corner characters: chi0 - chi1 = " + std::to_string(c.chi) +
                               " but the alternating face count is " +
                               std::to_string(c.chi_from_faces));
    return c;
}

CornerCharacters corner_characters(const FaceComplex& complex)
{
    return corner_characters(complex, conormal_homology(complex));
}

std::string to_string(KTheoryStatus status)
{
    switch (status) {
    case KTheoryStatus::Integral:
        return "integral";
    case KTheoryStatus::RationalOnly:
        return "rational";
    case KTheoryStatus::Conjectural:
        return "conjectural";
    }
    return "unknown";
}

Applicability applicability(const FaceComplex& complex)
{
    Applicability a;
    a.factors = complex.effective_factors();
    a.declared_product = !complex.factors().empty();
    a.factors_codim_at_most_3 = std::all_of(a.factors.begin(), a.factors.end(),
                                            [](const FactorInfo& f) { return f.max_codim <= 3; });
    a.some_factor_codim_at_most_2 = std::any_of(
        a.factors.begin(), a.factors.end(), [](const FactorInfo& f) { return f.max_codim <= 2; });
    a.total_codim_at_most_3 = complex.max_codim() <= 3;
    return a;
}

KTheory ktheory_groups(const FaceComplex& complex, const HomologyTable& homology)
{
    auto a = applicability(complex);
    KTheory k;
    k.rank_k0 = static_cast<long>(homology.even.free_rank);
    k.rank_k1 = static_cast<long>(homology.odd.free_rank);
    if (a.factors_codim_at_most_3 && (a.some_factor_codim_at_most_2 || a.total_codim_at_most_3)) {
        k.status = KTheoryStatus::Integral;
        k.k0 = homology.even;
        k.k1 = homology.odd;
    } else if (a.factors_codim_at_most_3) {
        k.status = KTheoryStatus::RationalOnly;
    } else {
        k.status = KTheoryStatus::Conjectural;
    }
    return k;
}

KTheory ktheory_groups(const FaceComplex& complex)
{
    return ktheory_groups(complex, conormal_homology(complex));
}

FredholmFlags fredholm_diagnostic(const FaceComplex& complex, const HomologyTable& homology)
{
    FredholmFlags f;
    const auto& h0 = homology.even;
    f.chi0_vanishes = h0.free_rank == 0;
    f.h0pcn_trivial = h0.is_trivial();
    f.h0pcn_torsion_free = h0.is_torsion_free();

    f.applicable = complex.max_codim() >= 1;
    if (!f.applicable) {
        f.note = "theorem not applicable (closed manifold)";
        return f;
    }
    f.within_theorem = applicability(complex).factors_codim_at_most_3;
    f.note = f.within_theorem ? "product of factors of codimension <= 3"
                              : "conjectural: a factor has codimension > 3";
    f.necessary_fp_obstruction = !f.chi0_vanishes;
    f.sufficient_hfp = f.h0pcn_trivial || (f.h0pcn_torsion_free && f.chi0_vanishes);
    return f;
}

FredholmFlags fredholm_diagnostic(const FaceComplex& complex)
{
    return fredholm_diagnostic(complex, conormal_homology(complex));
}

CornerReport make_report(const FaceComplex& complex)
{
    CornerReport r;
    r.name = complex.name();
    r.num_hyperfaces = complex.num_hyperfaces();
    r.max_codim = complex.max_codim();
    r.face_counts = face_counts(complex);
    r.homology = conormal_homology(complex);
    r.boundary_components = boundary_components(complex).size();
    r.characters = corner_characters(complex, r.homology);
    r.ktheory = ktheory_groups(complex, r.homology);
    r.applicability = applicability(complex);
    r.fredholm = fredholm_diagnostic(complex, r.homology);
    return r;
}

std::string homology_text(const FaceComplex& complex, const HomologyTable& homology)
{
    std::ostringstream out;
    out << "name = " << (complex.name().empty() ? "-" : complex.name()) << "\n";
    out << "max_codim = " << complex.max_codim() << "\n";
    for (std::size_t p = 0; p < homology.graded.size(); ++p)
        out << "H" << p << " = " << homology.graded[p].to_string() << "\n";
    out << "H0pcn = " << homology.even.to_string() << "\n";
    out << "H1pcn = " << homology.odd.to_string() << "\n";
    return out.str();
}

std::string characters_text(const CornerCharacters& c)
{
    std::ostringstream out;
    out << "chi0 = " << c.chi0 << "\n";
    out << "chi1 = " << c.chi1 << "\n";
    out << "chi = " << c.chi << "\n";
    out << "chi_faces = " << c.chi_from_faces << "\n";
    return out.str();
}

std::string report_text(const CornerReport& r)
{
    std::ostringstream out;
    out << "name = " << (r.name.empty() ? "-" : r.name) << "\n";
    out << "num_hyperfaces = " << r.num_hyperfaces << "\n";
    out << "max_codim = " << r.max_codim << "\n";
    out << "face_counts =";
    for (auto n : r.face_counts)
        out << " " << n;
    out << "\n";
    out << "boundary_components = " << r.boundary_components << "\n";
    for (std::size_t p = 0; p < r.homology.graded.size(); ++p)
        out << "H" << p << " = " << r.homology.graded[p].to_string() << "\n";
    out << "H0pcn = " << r.homology.even.to_string() << "\n";
    out << "H1pcn = " << r.homology.odd.to_string() << "\n";
    out << characters_text(r.characters);

    out << "factors =";
    for (const auto& f : r.applicability.factors)
        out << " " << f.name << "(codim " << f.max_codim << ")";
    out << "\n";
    out << "ktheory = " << to_string(r.ktheory.status) << "\n";
    if (r.ktheory.status == KTheoryStatus::Integral) {
        out << "K0 = " << r.ktheory.k0.to_string() << "\n";
        out << "K1 = " << r.ktheory.k1.to_string() << "\n";
    } else {
        out << "K0 (x) Q = Q^" << r.ktheory.rank_k0 << "\n";
        out << "K1 (x) Q = Q^" << r.ktheory.rank_k1 << "\n";
    }

    const auto& f = r.fredholm;
    out << "fredholm = " << f.note << "\n";
    if (f.applicable) {
        out << "chi0_vanishes = " << flag(f.chi0_vanishes) << "\n";
        out << "h0pcn_trivial = " << flag(f.h0pcn_trivial) << "\n";
        out << "h0pcn_torsion_free = " << flag(f.h0pcn_torsion_free) << "\n";
        out << "necessary_FP_obstruction = " << flag(f.necessary_fp_obstruction) << "\n";
        out << "sufficient_HFP = " << flag(f.sufficient_hfp) << "\n";
    }
    return out.str();
}

nlohmann::json group_json(const AbelianGroup& group)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : group.torsion) {
        if (t.fits_slong_p())
            torsion.push_back(t.get_si());
        else
            torsion.push_back(t.get_str());
    }
    return {{"free_rank", group.free_rank}, {"torsion", torsion}, {"text", group.to_string()}};
}

nlohmann::json homology_json(const HomologyTable& homology)
{
    nlohmann::json graded = nlohmann::json::array();
    for (const auto& g : homology.graded)
        graded.push_back(group_json(g));
    return {{"graded", graded}, {"H0pcn", group_json(homology.even)},
            {"H1pcn", group_json(homology.odd)}};
}

nlohmann::json characters_json(const CornerCharacters& c)
{
    return {{"chi0", c.chi0}, {"chi1", c.chi1}, {"chi", c.chi}, {"chi_faces", c.chi_from_faces}};
}

nlohmann::json report_json(const CornerReport& r)
{
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : r.applicability.factors)
        factors.push_back({{"name", f.name},
                           {"max_codim", f.max_codim},
                           {"num_hyperfaces", f.num_hyperfaces},
                           {"label_offset", f.label_offset}});

    nlohmann::json ktheory = {{"status", to_string(r.ktheory.status)},
                              {"rank_K0", r.ktheory.rank_k0},
                              {"rank_K1", r.ktheory.rank_k1}};
    if (r.ktheory.status == KTheoryStatus::Integral) {
        ktheory["K0"] = group_json(r.ktheory.k0);
        ktheory["K1"] = group_json(r.ktheory.k1);
    }

    const auto& f = r.fredholm;
    nlohmann::json fredholm = {{"applicable", f.applicable},
                               {"within_theorem", f.within_theorem},
                               {"note", f.note},
                               {"chi0_vanishes", f.chi0_vanishes},
                               {"h0pcn_trivial", f.h0pcn_trivial},
                               {"h0pcn_torsion_free", f.h0pcn_torsion_free},
                               {"necessary_FP_obstruction", f.necessary_fp_obstruction},
                               {"sufficient_HFP", f.sufficient_hfp}};

    const auto& a = r.applicability;
    return {{"name", r.name},
            {"num_hyperfaces", r.num_hyperfaces},
            {"max_codim", r.max_codim},
            {"face_counts", r.face_counts},
            {"boundary_components", r.boundary_components},
            {"homology", homology_json(r.homology)},
            {"characters", characters_json(r.characters)},
            {"ktheory", ktheory},
            {"applicability",
             {{"factors", factors},
              {"declared_product", a.declared_product},
              {"factors_codim_at_most_3", a.factors_codim_at_most_3},
              {"some_factor_codim_at_most_2", a.some_factor_codim_at_most_2},
              {"total_codim_at_most_3", a.total_codim_at_most_3}}},
            {"fredholm", fredholm}};
}

} // namespace cornerhom
