/**
 * Headline outputs: corner characters, K-theory of the b-compact operators
 * and the Fredholm perturbation diagnostic.
 *
 * K-theory is reported, never computed from operators: the groups are the
 * periodic conormal homology groups, and the report records whether that
 * identification is integral, rational only, or conjectural for the input.
 */
#ifndef CORNERHOM_REPORT_HPP
#define CORNERHOM_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cornerhom/complex.hpp"
#include "cornerhom/homology.hpp"

namespace cornerhom {

struct CornerCharacters
{
    long chi0 = 0;
    long chi1 = 0;
    long chi = 0;            ///< chi0 - chi1
    long chi_from_faces = 0; ///< 1 - #F_1 + #F_2 - ...
};

/// Throws std::logic_error if the two routes to chi disagree.
CornerCharacters corner_characters(const FaceComplex& complex);
CornerCharacters corner_characters(const FaceComplex& complex, const HomologyTable& homology);

enum class KTheoryStatus
{
    Integral,     ///< product of codim <= 3 factors, one of codim <= 2, or codim 3
    RationalOnly, ///< product of codim <= 3 factors, rational statement only
    Conjectural,  ///< outside the proven range; rational values are conjectural
};

std::string to_string(KTheoryStatus status);

struct KTheory
{
    KTheoryStatus status = KTheoryStatus::Conjectural;
    /// Set when status is Integral.
    AbelianGroup k0, k1;
    /// Rational dimensions, always set.
    long rank_k0 = 0, rank_k1 = 0;
};

/// What the recorded factorization certifies.
struct Applicability
{
    std::vector<FactorInfo> factors;
    bool declared_product = false;
    bool factors_codim_at_most_3 = false;
    bool some_factor_codim_at_most_2 = false;
    bool total_codim_at_most_3 = false;
};

Applicability applicability(const FaceComplex& complex);

KTheory ktheory_groups(const FaceComplex& complex);
KTheory ktheory_groups(const FaceComplex& complex, const HomologyTable& homology);

struct FredholmFlags
{
    /// False for closed manifolds (codimension 0).
    bool applicable = false;
    /// True when the factorization puts the input inside the proven range;
    /// otherwise the flags are conjectural.
    bool within_theorem = false;
    std::string note;

    bool chi0_vanishes = false;
    bool h0pcn_trivial = false;
    bool h0pcn_torsion_free = false;
    /// chi0 != 0: the Fredholm perturbation property fails.
    bool necessary_fp_obstruction = false;
    /// H_0^pcn = 0, or H_0^pcn torsion free with chi0 = 0.
    bool sufficient_hfp = false;
};

FredholmFlags fredholm_diagnostic(const FaceComplex& complex);
FredholmFlags fredholm_diagnostic(const FaceComplex& complex, const HomologyTable& homology);

struct CornerReport
{
    std::string name;
    int num_hyperfaces = 0;
    std::size_t max_codim = 0;
    std::vector<std::size_t> face_counts;
    std::size_t boundary_components = 0;
    HomologyTable homology;
    CornerCharacters characters;
    KTheory ktheory;
    Applicability applicability;
    FredholmFlags fredholm;
};

CornerReport make_report(const FaceComplex& complex);

/// Deterministic "key = value" text blocks.
std::string homology_text(const FaceComplex& complex, const HomologyTable& homology);
std::string characters_text(const CornerCharacters& chars);
std::string report_text(const CornerReport& report);

/// Structured forms sharing one schema; keys are sorted on output.
nlohmann::json group_json(const AbelianGroup& group);
nlohmann::json homology_json(const HomologyTable& homology);
nlohmann::json characters_json(const CornerCharacters& chars);
nlohmann::json report_json(const CornerReport& report);

} // namespace cornerhom

#endif
