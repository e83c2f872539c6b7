/**
 * Exact integer linear algebra: dense big-integer matrices, Smith normal
 * form with unimodular transforms, and finitely generated abelian groups.
 */
#ifndef CORNERHOM_LINALG_HPP
#define CORNERHOM_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cornerhom {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntegerMatrix
{
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    void set_column(std::size_t c, const IntVector& v);

    bool is_zero() const;

    /// Columns [begin, end) as a new matrix.
    IntegerMatrix column_slice(std::size_t begin, std::size_t end) const;
    /// Rows [begin, end) as a new matrix.
    IntegerMatrix row_slice(std::size_t begin, std::size_t end) const;

    /// [this | other]; row counts must agree.
    IntegerMatrix hconcat(const IntegerMatrix& other) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool operator==(const IntegerMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntVector operator*(const IntegerMatrix& a, const IntVector& v);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
/// u_inverse is U^{-1}, kept because image lattices need it.
struct SmithDecomposition
{
    IntegerMatrix u, d, v, u_inverse;
    std::size_t rank = 0;

    /// Nonzero diagonal entries in order.
    std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith(const IntegerMatrix& a);

/// Nonzero invariant factors only; skips the transforms.
std::vector<Integer> smith_invariants(const IntegerMatrix& a);

/// Rank over the rationals.
std::size_t rank_q(const IntegerMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum of Z/t_i, with every
/// t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup
{
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    AbelianGroup() = default;
    AbelianGroup(std::size_t rank, std::vector<Integer> torsion_factors = {});

    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank); }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_torsion_free() const { return torsion.empty(); }

    /// "0", "Z", "Z^2", "Z/2", "Z^3 + Z/2 + Z/4".
    std::string to_string() const;

    bool operator==(const AbelianGroup&) const = default;
};

/// Brings arbitrary cyclic orders to invariant-factor form. Orders equal
/// to 1 are dropped, orders equal to 0 count as free summands.
AbelianGroup canonical_group(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);

/// ker(d_out) / im(d_in). Throws std::invalid_argument when the matrices are
/// not composable or d_out * d_in != 0.
AbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

/// Integer basis of ker(a) as the columns of the result (a.cols() x k).
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Lattice basis of the column span of a.
IntegerMatrix image_basis(const IntegerMatrix& a);

/// Some integer x with a * x = b, or nullopt.
std::optional<IntVector> solve(const IntegerMatrix& a, const IntVector& b);

/// Homology at one node presented on explicit cycle representatives:
/// H = Z^k / span(relations), where column j of cycles is generator j.
struct HomologyPresentation
{
    IntegerMatrix cycles;    // ambient x k
    IntegerMatrix relations; // k x (number of boundary generators)
    AbelianGroup group;

    std::size_t num_generators() const { return cycles.cols(); }

    /// Coordinates c with chain = cycles * c, or nullopt if chain is not a
    /// cycle.
    std::optional<IntVector> coordinates(const IntVector& chain) const;

    /// True when the cycle-coordinate vector lies in span(relations).
    bool is_relation(const IntVector& coords) const;

    bool is_boundary(const IntVector& chain) const;
};

HomologyPresentation present_homology(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

/// Matrix of the map induced on homology by a chain map (target ambient x
/// source ambient), in cycle coordinates. Throws std::domain_error if a
/// source cycle is not sent to a cycle.
IntegerMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                          const IntegerMatrix& chain_map);

/// Quotient {x : beta x in span(R_C)} / span(alpha, R_B) for maps
/// alpha: A -> B and beta: B -> C between presented groups. The sequence
/// is exact at B iff this group is trivial and beta*alpha lands in R_C.
struct ExactnessDefect
{
    bool composition_vanishes = false;
    AbelianGroup defect;

    bool exact() const { return composition_vanishes && defect.is_trivial(); }
};

ExactnessDefect exactness_at(const IntegerMatrix& alpha, const IntegerMatrix& relations_b,
                             const IntegerMatrix& beta, const IntegerMatrix& relations_c);

} // namespace cornerhom

#endif
