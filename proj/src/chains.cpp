#include "cornerhom/chains.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cornerhom {

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.add(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntegerMatrix& d)
{
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c)
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (sgn(d(r, c)) != 0) {
                if (!d(r, c).fits_slong_p())
                    throw std::overflow_error("SparseMatrix: entry exceeds 64 bits");
                m.add(r, c, d(r, c).get_si());
            }
    return m;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = col.find(r);
    return it == col.end() ? 0 : it->second;
}

void SparseMatrix::add(std::size_t r, std::size_t c, std::int64_t value)
{
    if (r >= rows_ || c >= columns_.size())
        throw std::out_of_range("SparseMatrix::add: index out of range");
    if (value == 0)
        return;
    auto& col = columns_[c];
    auto [it, inserted] = col.try_emplace(r, value);
    if (!inserted) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(it->second, value, &sum))
            throw std::overflow_error("SparseMatrix: 64-bit overflow");
        if (sum == 0)
            col.erase(it);
        else
            it->second = sum;
    }
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

SparseMatrix SparseMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                                 std::size_t c1) const
{
    SparseMatrix out(r1 - r0, c1 - c0);
    for (std::size_t c = c0; c < c1; ++c)
        for (auto it = columns_[c].lower_bound(r0); it != columns_[c].end() && it->first < r1; ++it)
            out.add(it->first - r0, c - c0, it->second);
    return out;
}

IntegerMatrix SparseMatrix::to_dense() const
{
    IntegerMatrix out(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : columns_[c])
            out(r, c) = static_cast<long>(v);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const
{
    return rows_ == other.rows_ && columns_ == other.columns_;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("sparse product: dimension mismatch");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [k, bv] : b.column(j))
            for (const auto& [i, av] : a.column(k)) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(av, bv, &prod))
                    throw std::overflow_error("SparseMatrix: 64-bit overflow");
                out.add(i, j, prod);
            }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sparse sum: dimension mismatch");
    SparseMatrix out = a;
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [i, v] : b.column(j))
            out.add(i, j, v);
    return out;
}

SparseMatrix scaled(const SparseMatrix& a, std::int64_t factor)
{
    SparseMatrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.column(j))
            out.add(i, j, v * factor);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
{
    return a + scaled(b, -1);
}

void Chain::add(const std::string& face_id, std::int64_t coefficient)
{
    if (coefficient == 0)
        return;
    auto& slot = terms_[face_id];
    slot += coefficient;
    if (slot == 0)
        terms_.erase(face_id);
}

std::int64_t Chain::coefficient(const std::string& face_id) const
{
    auto it = terms_.find(face_id);
    return it == terms_.end() ? 0 : it->second;
}

IntVector Chain::to_vector(const FaceComplex& complex, std::size_t p) const
{
    auto [lo, hi] = complex.codim_range(p);
    IntVector v(hi - lo);
    for (const auto& [id, c] : terms_) {
        auto idx = complex.index_of(id);
        if (!idx || *idx < lo || *idx >= hi)
            throw std::invalid_argument("chain term '" + id + "' is not a face of codimension " +
                                        std::to_string(p));
        v[*idx - lo] = static_cast<long>(c);
    }
    return v;
}

Chain Chain::from_vector(const FaceComplex& complex, std::size_t p, const IntVector& v)
{
    auto faces = faces_of_codim(complex, p);
    if (faces.size() != v.size())
        throw std::invalid_argument("chain vector has wrong length");
    Chain c;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p())
            throw std::overflow_error("chain coefficient exceeds 64 bits");
        c.add(faces[i].id, v[i].get_si());
    }
    return c;
}

int contraction_sign(std::span<const Label> tuple, std::span<const Label> drop)
{
    std::vector<Label> current(tuple.begin(), tuple.end());
    std::vector<Label> order(drop.begin(), drop.end());
    std::sort(order.begin(), order.end(), std::greater<>());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        throw std::invalid_argument("contraction_sign: repeated label");
    int sign = 1;
    for (Label l : order) {
        auto it = std::find(current.begin(), current.end(), l);
        if (it == current.end())
            throw std::invalid_argument("contraction_sign: label " + std::to_string(l) +
                                        " is not in the tuple");
        if ((it - current.begin()) % 2 == 1)
            sign = -sign;
        current.erase(it);
    }
    return sign;
}

namespace {

void check_codim(const FaceComplex& complex, std::size_t p, std::size_t k)
{
    if (k > p || p > complex.max_codim())
        throw std::invalid_argument("delta: need k <= p <= max_codim, got p=" + std::to_string(p) +
                                    ", k=" + std::to_string(k));
}

// Calls visit(ancestor_global_index, sign) for every k-subset of labels of
// the face.
template <typename Visit>
void for_each_k_ancestor(const FaceComplex& complex, std::size_t face, std::size_t k, Visit visit)
{
    const Tuple& tuple = complex.face(face).tuple;
    const std::size_t p = tuple.size();
    std::vector<Label> drop;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (drop.size() == k) {
            visit(ancestor(complex, face, drop), contraction_sign(tuple, drop));
            return;
        }
        for (std::size_t i = start; i + (k - drop.size()) <= p; ++i) {
            drop.push_back(tuple[i]);
            choose(i + 1);
            drop.pop_back();
        }
    };
    choose(0);
}

// Sum over the jumps k accepted by keep of delta^k on the total space.
template <typename Keep>
SparseMatrix total_jump_sum(const FaceComplex& complex, Keep keep)
{
    const std::size_t n = complex.num_faces();
    SparseMatrix out(n, n);
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t p = complex.face(f).codim();
        for (std::size_t k = 0; k <= p; ++k) {
            if (!keep(k))
                continue;
            for_each_k_ancestor(complex, f, k,
                                [&](std::size_t g, int sign) { out.add(g, f, sign); });
        }
    }
    return out;
}

} // namespace

GradedMatrix delta_k(const FaceComplex& complex, std::size_t p, std::size_t k)
{
    check_codim(complex, p, k);
    auto [lo, hi] = complex.codim_range(p);
    auto [tlo, thi] = complex.codim_range(p - k);
    GradedMatrix out{p, p - k, SparseMatrix(thi - tlo, hi - lo)};
    for (std::size_t f = lo; f < hi; ++f)
        for_each_k_ancestor(complex, f, k, [&](std::size_t g, int sign) {
            out.matrix.add(g - tlo, f - lo, sign);
        });
    return out;
}

GradedMatrix delta(const FaceComplex& complex, std::size_t p)
{
    if (p == 0)
        throw std::invalid_argument("delta: p must be at least 1");
    return delta_k(complex, p, 1);
}

Chain apply_delta(const FaceComplex& complex, std::size_t p, const Chain& chain)
{
    auto d = delta(complex, p);
    IntVector image = d.matrix.to_dense() * chain.to_vector(complex, p);
    return Chain::from_vector(complex, p - 1, image);
}

ParityBases parity_bases(const FaceComplex& complex)
{
    ParityBases b;
    for (std::size_t i = 0; i < complex.num_faces(); ++i)
        (complex.face(i).codim() % 2 == 0 ? b.even : b.odd).push_back(i);
    return b;
}

PeriodicDifferential delta_pcn(const FaceComplex& complex)
{
    PeriodicDifferential out;
    out.bases = parity_bases(complex);
    const auto& even = out.bases.even;
    const auto& odd = out.bases.odd;

    std::vector<std::size_t> slot(complex.num_faces());
    for (std::size_t i = 0; i < even.size(); ++i)
        slot[even[i]] = i;
    for (std::size_t i = 0; i < odd.size(); ++i)
        slot[odd[i]] = i;

    out.even_to_odd = SparseMatrix(odd.size(), even.size());
    out.odd_to_even = SparseMatrix(even.size(), odd.size());
    for (std::size_t f = 0; f < complex.num_faces(); ++f) {
        const std::size_t p = complex.face(f).codim();
        auto& target = p % 2 == 0 ? out.even_to_odd : out.odd_to_even;
        for (std::size_t k = 1; k <= p; k += 2)
            for_each_k_ancestor(complex, f, k, [&](std::size_t g, int sign) {
                target.add(slot[g], slot[f], sign);
            });
    }
    return out;
}

SparseMatrix total_delta(const FaceComplex& complex)
{
    return total_jump_sum(complex, [](std::size_t k) { return k == 1; });
}

SparseMatrix total_delta_pcn(const FaceComplex& complex)
{
    return total_jump_sum(complex, [](std::size_t k) { return k % 2 == 1; });
}

SparseMatrix h_operator(const FaceComplex& complex)
{
    return total_jump_sum(complex, [](std::size_t k) { return k % 2 == 0; });
}

SparseMatrix h_inverse(const FaceComplex& complex)
{
    const std::size_t n = complex.num_faces();
    SparseMatrix nil = total_jump_sum(complex, [](std::size_t k) { return k >= 2 && k % 2 == 0; });
    SparseMatrix out = SparseMatrix::identity(n);
    SparseMatrix power = SparseMatrix::identity(n);
    // N lowers codimension by at least 2, so N^j = 0 once 2j > max_codim.
    for (std::size_t j = 1; 2 * j <= complex.max_codim(); ++j) {
        power = power * nil;
        out = j % 2 == 1 ? out - power : out + power;
    }
    return out;
}

} // namespace cornerhom
