/**
 * Invariant suite run by `cornerhom selftest`: differential laws, the
 * periodic quasi-isomorphism, long exact sequences, Kunneth, corner
 * characters and a brute-force check of the Smith normal form.
 */
#ifndef CORNERHOM_SELFTEST_HPP
#define CORNERHOM_SELFTEST_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cornerhom/complex.hpp"

namespace cornerhom {

struct SelftestOptions
{
    std::uint64_t seed = 7;
    std::size_t random_products = 100;
    std::size_t snf_matrices = 500;
};

struct SelftestResult
{
    bool passed = false;
    std::string log;
};

/// Deterministic for fixed options: the log contains no timings.
SelftestResult run_selftest(const SelftestOptions& options);

/// Runs the per-complex invariants and returns the first violation.
/// With include_les, also checks every long exact sequence of the
/// filtration and the degree 0 corollary.
std::optional<std::string> check_complex_invariants(const FaceComplex& complex, bool include_les);

} // namespace cornerhom

#endif
