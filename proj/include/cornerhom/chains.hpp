/**
 * The conormal chain complex of a face complex.
 *
 * C_p is free on the codimension p faces, each carrying its canonical
 * co-orientation e_I (the exterior product of dr_i in increasing label
 * order). A chain with co-orientation -e_I is stored as coefficient -1.
 */
#ifndef CORNERHOM_CHAINS_HPP
#define CORNERHOM_CHAINS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cornerhom/complex.hpp"
#include "cornerhom/linalg.hpp"

namespace cornerhom {

/// Sparse matrix with 64-bit entries, stored by column.
class SparseMatrix
{
public:
    using Column = std::map<std::size_t, std::int64_t>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const IntegerMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    std::int64_t at(std::size_t r, std::size_t c) const;
    void add(std::size_t r, std::size_t c, std::int64_t value);
    const Column& column(std::size_t c) const { return columns_[c]; }

    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    /// Rows [r0, r1) and columns [c0, c1).
    SparseMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

    IntegerMatrix to_dense() const;

    bool operator==(const SparseMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scaled(const SparseMatrix& a, std::int64_t factor);

/// Integer combination of co-oriented faces; zero coefficients are dropped.
class Chain
{
public:
    Chain() = default;

    void add(const std::string& face_id, std::int64_t coefficient);
    std::int64_t coefficient(const std::string& face_id) const;
    const std::map<std::string, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient vector over the codimension p basis. Throws when a face
    /// is missing or has another codimension.
    IntVector to_vector(const FaceComplex& complex, std::size_t p) const;
    static Chain from_vector(const FaceComplex& complex, std::size_t p, const IntVector& v);

    bool operator==(const Chain&) const = default;

private:
    std::map<std::string, std::int64_t> terms_;
};

/// Matrix C_domain -> C_codomain in the faces_of_codim bases.
struct GradedMatrix
{
    std::size_t domain = 0;
    std::size_t codomain = 0;
    SparseMatrix matrix;
};

/// Sign s with e_{drop} _| e_I = s e_{I \ drop}. The contraction by e_J is
/// nested as e_{j1} _| (... _| (e_{jk} _| .)), so the largest label acts
/// first; a single step e_i _| e_K = (-1)^(j-1) e_{K \ i} with j the
/// 1-based position of i in K. Throws std::invalid_argument unless drop is
/// a subset of I.
int contraction_sign(std::span<const Label> tuple, std::span<const Label> drop);

/// delta_p : C_p -> C_{p-1}. Requires 1 <= p <= max_codim.
GradedMatrix delta(const FaceComplex& complex, std::size_t p);

/// delta^k_p : C_p -> C_{p-k}, summing e_{(g,f)} _| e_I over the ancestors
/// g of f obtained by dropping k labels. Requires k <= p <= max_codim.
GradedMatrix delta_k(const FaceComplex& complex, std::size_t p, std::size_t k);

/// Image of a chain of codimension p under delta_p.
Chain apply_delta(const FaceComplex& complex, std::size_t p, const Chain& chain);

/// Basis of the total space split by parity of codimension. Indices are
/// global face indices, in canonical order.
struct ParityBases
{
    std::vector<std::size_t> even;
    std::vector<std::size_t> odd;
};

ParityBases parity_bases(const FaceComplex& complex);

/// The Z/2-graded differential: sum over k of delta^{2k+1}, split into the
/// even -> odd and odd -> even blocks.
struct PeriodicDifferential
{
    ParityBases bases;
    SparseMatrix even_to_odd;
    SparseMatrix odd_to_even;
};

PeriodicDifferential delta_pcn(const FaceComplex& complex);

/// Operators on the total space C_0 + ... + C_d in the global face order.
/// delta^1 on the total space.
SparseMatrix total_delta(const FaceComplex& complex);
/// delta^pcn on the total space.
SparseMatrix total_delta_pcn(const FaceComplex& complex);
/// h = Id + N with N the sum of delta^{2k}, k >= 1.
SparseMatrix h_operator(const FaceComplex& complex);
/// h^{-1} = sum_j (-1)^j N^j, a finite sum since N is nilpotent.
SparseMatrix h_inverse(const FaceComplex& complex);

} // namespace cornerhom

#endif
