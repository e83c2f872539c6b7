#ifndef CORNERHOM_TESTS_HELPERS_HPP
#define CORNERHOM_TESTS_HELPERS_HPP

#include "cornerhom/chains.hpp"
#include "cornerhom/linalg.hpp"
#include "../oracles.hpp"

inline oracle::Dense to_dense(const cornerhom::IntegerMatrix& m)
{
    oracle::Dense out(m.rows(), std::vector<oracle::Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

inline oracle::Dense to_dense(const cornerhom::SparseMatrix& m)
{
    return to_dense(m.to_dense());
}

// H = Z^(n - rank d_out - rank d_in) + nonunit invariant factors of d_in,
// all computed by the brute-force oracles.
inline cornerhom::AbelianGroup oracle_homology(std::size_t n, const oracle::Dense& d_in, const oracle::Dense& d_out)
{
    std::size_t r_in = d_in.empty() || d_in[0].empty() ? 0 : oracle::rank(d_in);
    std::size_t r_out = d_out.empty() || d_out[0].empty() ? 0 : oracle::rank(d_out);
    std::vector<cornerhom::Integer> torsion;
    if (r_in > 0)
        for (const auto& f : oracle::invariant_factors(d_in))
            if (abs(f) != 1)
                torsion.push_back(abs(f));
    return cornerhom::AbelianGroup(n - r_in - r_out, torsion);
}

#endif
