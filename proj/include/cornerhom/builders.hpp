/**
 * Named example complexes and parametrized families.
 *
 * Every builder returns a validated complex whose name is the builder id
 * (e.g. "two_chambers:3"). Builders that are products record their
 * factorization only when that factorization is meaningful for downstream
 * hypotheses; cube() and square() are recorded as single factors.
 */
#ifndef CORNERHOM_BUILDERS_HPP
#define CORNERHOM_BUILDERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cornerhom/complex.hpp"

namespace cornerhom {

/// Builder name plus integer parameters, e.g. {"two_chambers", {3}}.
struct BuilderId
{
    std::string name;
    std::vector<int> params;

    std::string to_string() const;
    bool operator==(const BuilderId&) const = default;
};

/// Parses "name" or "name:k". Throws std::invalid_argument.
BuilderId parse_builder_id(std::string_view text);

FaceComplex build(const BuilderId& id);
FaceComplex build(std::string_view text);

/// Names accepted by build().
std::vector<std::string> builder_names();

FaceComplex smooth();
FaceComplex interval();
FaceComplex halfline();
FaceComplex n_boundary_components(int n);
FaceComplex quarter_plane();
FaceComplex two_chambers(int k);
FaceComplex square();
FaceComplex cube();
FaceComplex cube_with_cubic_hole();
FaceComplex cube_with_ball_hole();

/// Product of the named factors followed by a seeded permutation of the
/// hyperface labels. Equal seeds and specs give identical complexes.
FaceComplex random_product(std::uint64_t seed, const std::vector<BuilderId>& factors);

/// Draws between one and three factors from the small builders with total
/// codimension at most max_total_codim, then calls random_product.
FaceComplex random_product(std::uint64_t seed, int max_total_codim = 4);

/// Applies the label permutation sigma (sigma[i-1] is the new label of i)
/// and re-sorts every tuple.
FaceComplex relabel(const FaceComplex& complex, const std::vector<Label>& sigma);

} // namespace cornerhom

#endif
