#include "cornerhom/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cornerhom {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntVector IntegerMatrix::column(std::size_t c) const
{
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

void IntegerMatrix::set_column(std::size_t c, const IntVector& v)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntegerMatrix IntegerMatrix::column_slice(std::size_t begin, std::size_t end) const
{
    IntegerMatrix out(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c)
            out(r, c - begin) = (*this)(r, c);
    return out;
}

IntegerMatrix IntegerMatrix::row_slice(std::size_t begin, std::size_t end) const
{
    IntegerMatrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r - begin, c) = (*this)(r, c);
    return out;
}

IntegerMatrix IntegerMatrix::hconcat(const IntegerMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hconcat: row counts differ");
    IntegerMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            out(r, cols_ + c) = other(r, c);
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(src, c)) != 0)
            (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t r = 0; r < rows_; ++r)
        if (sgn((*this)(r, src)) != 0)
            (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c)
            out << (c ? " " : "") << (*this)(r, c);
    }
    out << "]";
    return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    out(i, j) += x * b(k, j);
        }
    return out;
}

IntVector operator*(const IntegerMatrix& a, const IntVector& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: dimension mismatch");
    IntegerMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) += b(i, j);
    return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: dimension mismatch");
    IntegerMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) -= b(i, j);
    return out;
}

namespace {

int cmp_abs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

bool is_unit(const Integer& a)
{
    return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0;
}

// Row/column gcd elimination. Pivot is always the smallest nonzero absolute
// value available; transforms are updated only when requested.
class SmithReducer
{
public:
    SmithReducer(IntegerMatrix& a, bool track) : a_(a), track_(track)
    {
        if (track_) {
            u_ = IntegerMatrix::identity(a.rows());
            u_inv_ = IntegerMatrix::identity(a.rows());
            v_ = IntegerMatrix::identity(a.cols());
        }
    }

    std::size_t run()
    {
        const std::size_t m = a_.rows(), n = a_.cols();
        std::size_t t = 0;
        for (; t < std::min(m, n); ++t) {
            if (!move_smallest_to(t))
                break;
            settle_pivot(t);
            if (sgn(a_(t, t)) < 0)
                negate_row(t);
        }
        return t;
    }

    IntegerMatrix take_u() { return std::move(u_); }
    IntegerMatrix take_u_inverse() { return std::move(u_inv_); }
    IntegerMatrix take_v() { return std::move(v_); }

private:
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        a_.swap_rows(i, j);
        if (track_) {
            u_.swap_rows(i, j);
            u_inv_.swap_cols(i, j);
        }
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        a_.swap_cols(i, j);
        if (track_)
            v_.swap_cols(i, j);
    }

    void negate_row(std::size_t r)
    {
        a_.negate_row(r);
        if (track_) {
            u_.negate_row(r);
            for (std::size_t i = 0; i < u_inv_.rows(); ++i)
                u_inv_(i, r) = -u_inv_(i, r);
        }
    }

    // row[dst] += f * row[src], restricted to the listed columns of a.
    void add_row(std::size_t dst, std::size_t src, const Integer& f,
                 const std::vector<std::size_t>& support)
    {
        for (std::size_t c : support)
            a_(dst, c) += f * a_(src, c);
        if (track_) {
            u_.add_row_multiple(dst, src, f);
            u_inv_.add_col_multiple(src, dst, -f);
        }
    }

    void add_col(std::size_t dst, std::size_t src, const Integer& f,
                 const std::vector<std::size_t>& support)
    {
        for (std::size_t r : support)
            a_(r, dst) += f * a_(r, src);
        if (track_)
            v_.add_col_multiple(dst, src, f);
    }

    bool move_smallest_to(std::size_t t)
    {
        const Integer* best = nullptr;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < a_.rows(); ++i) {
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const Integer& x = a_(i, j);
                if (sgn(x) == 0)
                    continue;
                if (!best || cmp_abs(x, *best) < 0) {
                    best = &x;
                    bi = i;
                    bj = j;
                    if (is_unit(x))
                        goto found;
                }
            }
        }
        if (!best)
            return false;
    found:
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void settle_pivot(std::size_t t)
    {
        const std::size_t m = a_.rows(), n = a_.cols();
        Integer q;
        for (;;) {
            // Clear column t below the pivot.
            std::vector<std::size_t> row_support;
            for (std::size_t j = t; j < n; ++j)
                if (sgn(a_(t, j)) != 0)
                    row_support.push_back(j);
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a_(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0)
                    add_row(i, t, -q, row_support);
            }
            // Clear row t right of the pivot.
            std::vector<std::size_t> col_support;
            for (std::size_t i = t; i < m; ++i)
                if (sgn(a_(i, t)) != 0)
                    col_support.push_back(i);
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a_(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0)
                    add_col(j, t, -q, col_support);
            }

            // Remainders smaller than the pivot become the new pivot.
            const Integer* best = nullptr;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i)
                if (sgn(a_(i, t)) != 0 && (!best || cmp_abs(a_(i, t), *best) < 0)) {
                    best = &a_(i, t);
                    bi = i;
                    bj = t;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (sgn(a_(t, j)) != 0 && (!best || cmp_abs(a_(t, j), *best) < 0)) {
                    best = &a_(t, j);
                    bi = t;
                    bj = j;
                }
            if (best) {
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }

            // Divisibility: the pivot must divide the whole trailing block.
            if (is_unit(a_(t, t)))
                return;
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        std::vector<std::size_t> support;
                        for (std::size_t c = t; c < n; ++c)
                            if (sgn(a_(i, c)) != 0)
                                support.push_back(c);
                        add_row(t, i, Integer(1), support);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                return;
        }
    }

    IntegerMatrix& a_;
    bool track_;
    IntegerMatrix u_, u_inv_, v_;
};

// Caches one Smith decomposition of A to answer A x = b repeatedly.
class LinearSolver
{
public:
    explicit LinearSolver(const IntegerMatrix& a) : s_(smith(a)) {}

    std::optional<IntVector> solve(const IntVector& b) const
    {
        if (b.size() != s_.u.cols())
            throw std::invalid_argument("solve: right-hand side has wrong length");
        IntVector y = s_.u * b;
        IntVector z(s_.v.rows());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (i < s_.rank) {
                const Integer& d = s_.d(i, i);
                if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t()))
                    return std::nullopt;
                z[i] = y[i] / d;
            } else if (sgn(y[i]) != 0) {
                return std::nullopt;
            }
        }
        return s_.v * z;
    }

private:
    SmithDecomposition s_;
};

bool product_vanishes(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return (a * b).is_zero();
}

} // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith(const IntegerMatrix& a)
{
    SmithDecomposition s;
    s.d = a;
    SmithReducer reducer(s.d, true);
    s.rank = reducer.run();
    s.u = reducer.take_u();
    s.u_inverse = reducer.take_u_inverse();
    s.v = reducer.take_v();
    return s;
}

std::vector<Integer> smith_invariants(const IntegerMatrix& a)
{
    IntegerMatrix work = a;
    SmithReducer reducer(work, false);
    std::size_t r = reducer.run();
    std::vector<Integer> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        out.push_back(work(i, i));
    return out;
}

std::size_t rank_q(const IntegerMatrix& a)
{
    return smith_invariants(a).size();
}

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> torsion_factors)
    : free_rank(rank), torsion(std::move(torsion_factors))
{
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1)
            out << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return out.str();
}

AbelianGroup canonical_group(std::size_t free_rank, const std::vector<Integer>& cyclic_orders)
{
    std::vector<Integer> orders;
    for (const auto& o : cyclic_orders) {
        if (sgn(o) == 0)
            ++free_rank;
        else if (!is_unit(o))
            orders.push_back(abs(o));
    }
    if (orders.empty())
        return AbelianGroup(free_rank);
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        diag(i, i) = orders[i];
    std::vector<Integer> torsion;
    for (auto& d : smith_invariants(diag))
        if (!is_unit(d))
            torsion.push_back(d);
    return AbelianGroup(free_rank, std::move(torsion));
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b)
{
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return canonical_group(a.free_rank + b.free_rank, orders);
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b)
{
    std::vector<Integer> orders;
    for (std::size_t k = 0; k < b.free_rank; ++k)
        orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    for (std::size_t k = 0; k < a.free_rank; ++k)
        orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    for (const auto& s : a.torsion)
        for (const auto& t : b.torsion)
            orders.push_back(gcd(s, t));
    return canonical_group(a.free_rank * b.free_rank, orders);
}

AbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_at: d_out has " + std::to_string(d_out.cols()) +
                                    " columns but d_in has " + std::to_string(d_in.rows()) +
                                    " rows");
    if (!product_vanishes(d_out, d_in))
        throw std::invalid_argument("homology_at: d_out * d_in != 0");
    const std::size_t n = d_in.rows();
    const std::size_t rank_out = rank_q(d_out);
    auto factors = smith_invariants(d_in);
    std::vector<Integer> torsion;
    for (auto& f : factors)
        if (!is_unit(f))
            torsion.push_back(f);
    return AbelianGroup(n - rank_out - factors.size(), std::move(torsion));
}

IntegerMatrix kernel_basis(const IntegerMatrix& a)
{
    auto s = smith(a);
    return s.v.column_slice(s.rank, a.cols());
}

IntegerMatrix image_basis(const IntegerMatrix& a)
{
    auto s = smith(a);
    IntegerMatrix out(a.rows(), s.rank);
    for (std::size_t c = 0; c < s.rank; ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            out(r, c) = s.u_inverse(r, c) * s.d(c, c);
    return out;
}

std::optional<IntVector> solve(const IntegerMatrix& a, const IntVector& b)
{
    return LinearSolver(a).solve(b);
}

std::optional<IntVector> HomologyPresentation::coordinates(const IntVector& chain) const
{
    return solve(cycles, chain);
}

bool HomologyPresentation::is_relation(const IntVector& coords) const
{
    return solve(relations, coords).has_value();
}

bool HomologyPresentation::is_boundary(const IntVector& chain) const
{
    auto c = coordinates(chain);
    return c && is_relation(*c);
}

HomologyPresentation present_homology(const IntegerMatrix& d_in, const IntegerMatrix& d_out)
{
    HomologyPresentation h;
    // homology_at performs the composability and d^2 = 0 checks.
    AbelianGroup expected = homology_at(d_in, d_out);

    h.cycles = kernel_basis(d_out);
    LinearSolver in_cycles(h.cycles);
    h.relations = IntegerMatrix(h.cycles.cols(), d_in.cols());
    for (std::size_t j = 0; j < d_in.cols(); ++j) {
        auto coords = in_cycles.solve(d_in.column(j));
        if (!coords)
            throw std::logic_error("present_homology: boundary outside the cycle lattice");
        h.relations.set_column(j, *coords);
    }
    h.group = homology_at(h.relations, IntegerMatrix(0, h.cycles.cols()));
    if (h.group != expected)
        throw std::logic_error("present_homology: presentation disagrees with homology_at");
    return h;
}

IntegerMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                          const IntegerMatrix& chain_map)
{
    if (chain_map.cols() != source.cycles.rows() || chain_map.rows() != target.cycles.rows())
        throw std::invalid_argument("induced_map: chain map has wrong shape");
    IntegerMatrix out(target.num_generators(), source.num_generators());
    LinearSolver in_cycles(target.cycles);
    for (std::size_t j = 0; j < source.num_generators(); ++j) {
        auto coords = in_cycles.solve(chain_map * source.cycles.column(j));
        if (!coords)
            throw std::domain_error("induced_map: a cycle is not sent to a cycle");
        out.set_column(j, *coords);
    }
    return out;
}

ExactnessDefect exactness_at(const IntegerMatrix& alpha, const IntegerMatrix& relations_b,
                             const IntegerMatrix& beta, const IntegerMatrix& relations_c)
{
    const std::size_t kb = relations_b.rows();
    if (alpha.rows() != kb || beta.cols() != kb || beta.rows() != relations_c.rows())
        throw std::invalid_argument("exactness_at: shapes do not splice");

    ExactnessDefect out;
    LinearSolver in_rc(relations_c);
    IntegerMatrix composed = beta * alpha;
    out.composition_vanishes = true;
    for (std::size_t j = 0; j < composed.cols(); ++j)
        if (!in_rc.solve(composed.column(j))) {
            out.composition_vanishes = false;
            break;
        }

    // Preimage lattice of span(R_C) under beta.
    IntegerMatrix joint = kernel_basis(beta.hconcat(relations_c));
    IntegerMatrix preimage = image_basis(joint.row_slice(0, kb));

    IntegerMatrix spanning = alpha.hconcat(relations_b);
    LinearSolver in_preimage(preimage);
    IntegerMatrix coords(preimage.cols(), spanning.cols());
    for (std::size_t j = 0; j < spanning.cols(); ++j) {
        auto c = in_preimage.solve(spanning.column(j));
        if (!c) {
            out.composition_vanishes = false;
            out.defect = AbelianGroup();
            return out;
        }
        coords.set_column(j, *c);
    }
    out.defect = homology_at(coords, IntegerMatrix(0, preimage.cols()));
    return out;
}

} // namespace cornerhom
