/**
 * Products of face complexes and the Kunneth comparisons.
 *
 * The product face of f and g has tuple I_f followed by I_g shifted by the
 * hyperface count of the first factor. The concatenation is already sorted,
 * so the product co-orientation e_{I_f} . e_{I_g} is the canonical one.
 */
#ifndef CORNERHOM_PRODUCTS_HPP
#define CORNERHOM_PRODUCTS_HPP

#include <string>

#include "cornerhom/complex.hpp"
#include "cornerhom/linalg.hpp"

namespace cornerhom {

/// Id of the product face (f, g).
std::string product_face_id(const std::string& f, const std::string& g);

/// Recorded factors of the result are the effective factors of x1 followed
/// by those of x2 with shifted label offsets.
FaceComplex product(const FaceComplex& x1, const FaceComplex& x2);

struct KunnethResult
{
    /// False when both factors have codimension above two.
    bool hypothesis_holds = false;
    bool factors_torsion_free = false;
    AbelianGroup expected_even, expected_odd;
    AbelianGroup actual_even, actual_odd;
    bool holds = false;
};

/// Integral periodic Kunneth formula compared with the direct homology of
/// the product. The comparison is always made; hypothesis_holds says
/// whether the formula is a theorem for this input.
KunnethResult kunneth_check_integral(const FaceComplex& x1, const FaceComplex& x2);

struct RationalKunnethResult
{
    long expected_chi0 = 0, expected_chi1 = 0;
    long actual_chi0 = 0, actual_chi1 = 0;
    bool holds = false;
};

RationalKunnethResult kunneth_check_rational(const FaceComplex& x1, const FaceComplex& x2);

} // namespace cornerhom

#endif
