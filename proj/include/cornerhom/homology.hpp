/**
 * Conormal homology, its periodic version, relative homology of the
 * codimension filtration and the associated long exact sequence.
 */
#ifndef CORNERHOM_HOMOLOGY_HPP
#define CORNERHOM_HOMOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cornerhom/complex.hpp"
#include "cornerhom/linalg.hpp"

namespace cornerhom {

struct HomologyTable
{
    /// graded[p] is H_p for p = 0..max_codim.
    std::vector<AbelianGroup> graded;
    AbelianGroup even; ///< H_0^pcn, sum of the even degrees
    AbelianGroup odd;  ///< H_1^pcn, sum of the odd degrees

    static HomologyTable from_graded(std::vector<AbelianGroup> graded);

    bool operator==(const HomologyTable&) const = default;
};

/// Which part of the codimension filtration a complex is restricted to.
struct FiltrationPiece
{
    enum class Mode
    {
        Whole,    ///< C_*(X)
        Sub,      ///< C_*(X_m): faces of codimension <= m
        Quotient, ///< C_*(X, X_m): faces of codimension > m
    };
    std::size_t m = 0;
    Mode mode = Mode::Whole;

    bool contains(std::size_t codim) const;
};

/// The chain complex of one filtration piece as dense boundary matrices.
/// boundary[p] maps degree p to degree p-1 (boundary[0] has zero rows).
/// Degrees outside the piece have rank zero.
struct GradedComplex
{
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> boundary;

    /// d_{p+1}, with an empty matrix past the top degree.
    IntegerMatrix incoming(std::size_t p) const;
    const IntegerMatrix& outgoing(std::size_t p) const { return boundary[p]; }
};

GradedComplex graded_complex(const FaceComplex& complex, FiltrationPiece piece = {});

HomologyTable homology_of(const GradedComplex& chains);

HomologyTable conormal_homology(const FaceComplex& complex);

/// Homology of the Z/2-graded complex (even, odd, delta^pcn). Returns
/// (H_0^pcn, H_1^pcn) computed without passing through delta^1.
std::pair<AbelianGroup, AbelianGroup> periodic_homology_direct(const FaceComplex& complex);

/// Homology of C_*(X, X_m).
HomologyTable relative_homology(const FaceComplex& complex, std::size_t m);
/// Homology of C_*(X_m).
HomologyTable sub_homology(const FaceComplex& complex, std::size_t m);

/// The three presented groups at degree p: H_p(X_m), H_p(X), H_p(X, X_m).
struct FiltrationPresentations
{
    std::vector<HomologyPresentation> sub, whole, quotient;
};

FiltrationPresentations filtration_presentations(const FaceComplex& complex, std::size_t m);

/// Connecting map H_p(X, X_m) -> H_{p-1}(X_m), [c] -> [delta(rho(c))], as
/// a matrix from the cycle coordinates of the relative presentation to the
/// cycle coordinates of the sub presentation.
struct ConnectingMap
{
    IntegerMatrix matrix;
    /// Every relative boundary is sent to a boundary of X_m.
    bool well_defined = false;
};

ConnectingMap connecting_map(const FaceComplex& complex, std::size_t m, std::size_t p);

struct ExactnessNode
{
    std::string label; ///< e.g. "H2(X,X1)"
    bool exact = false;
    bool composition_vanishes = false;
    AbelianGroup defect;
};

struct ExactnessReport
{
    bool exact = true;
    std::vector<ExactnessNode> nodes;
};

/// Splices H_p(X_m) -> H_p(X) -> H_p(X,X_m) -> H_{p-1}(X_m) -> ... for
/// p = d..0 and checks exactness at every group integrally.
ExactnessReport les_exactness(const FaceComplex& complex, std::size_t m);

struct CorollaryCheck
{
    bool isomorphism = false;
    AbelianGroup source; ///< H_0^pcn(X)
    AbelianGroup target; ///< H_0^pcn(X, X_0)
};

/// Whether H_0^pcn(X) -> H_0^pcn(X, X_0) is an isomorphism. Requires
/// max_codim >= 1.
CorollaryCheck h0pcn_corollary_check(const FaceComplex& complex);

} // namespace cornerhom

#endif
