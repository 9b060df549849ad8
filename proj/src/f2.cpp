#include "hgt/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hgt {

namespace {
std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

F2Vector::F2Vector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

F2Vector F2Vector::unit(std::size_t size, std::size_t index)
{
    F2Vector v(size);
    v.set(index);
    return v;
}

F2Vector F2Vector::from_bits(const std::vector<int>& bits)
{
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) v.set(i);
    return v;
}

void F2Vector::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool F2Vector::is_zero() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t F2Vector::first_set() const
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
}

std::vector<std::size_t> F2Vector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        auto w = words_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool F2Vector::dot(const F2Vector& other) const
{
    if (other.size_ != size_) throw std::invalid_argument("F2Vector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

F2Vector& F2Vector::operator^=(const F2Vector& other)
{
    if (other.size_ != size_) throw std::invalid_argument("F2Vector: length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

F2Vector F2Vector::concat(const F2Vector& tail) const
{
    F2Vector out(size_ + tail.size_);
    for (auto i : support()) out.set(i);
    for (auto i : tail.support()) out.set(size_ + i);
    return out;
}

std::string F2Vector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b)
{
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Lexicographic in bit order, bit 0 most significant.
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
        if (a.words_[k] == b.words_[k]) continue;
        const auto diff = a.words_[k] ^ b.words_[k];
        const auto low = diff & (~diff + 1);
        return (a.words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, F2Vector(cols))
{
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("F2Matrix::from_rows: ragged rows");
        m.data_[r] = F2Vector::from_bits(rows[r]);
    }
    return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::span<const F2Vector> columns)
{
    F2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("F2Matrix::from_columns: column length");
        for (auto r : columns[c].support()) m.set(r, c);
    }
    return m;
}

F2Vector F2Matrix::column(std::size_t c) const
{
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

F2Vector F2Matrix::apply(const F2Vector& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("F2Matrix::apply: length mismatch");
    F2Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(x)) y.set(r);
    return y;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto c : data_[r].support()) t.set(c, r);
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix::operator*: shape mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto k : data_[r].support()) out.data_[r] ^= rhs.data_[k];
    return out;
}

bool EchelonBasis::insert(F2Vector v)
{
    if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis::insert: length mismatch");
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    const std::size_t pivot = v.first_set();
    for (auto& row : rows_)
        if (row.get(pivot)) row ^= v;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

F2Vector EchelonBasis::reduce(F2Vector v) const
{
    if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis::reduce: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

std::size_t rank(const F2Matrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.rank();
}

std::size_t rank(std::span<const F2Vector> vectors)
{
    if (vectors.empty()) return 0;
    EchelonBasis basis(vectors.front().size());
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

AffineSolutionSet solve(const F2Matrix& m, const F2Vector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length != rows");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<F2Vector> a;
    a.reserve(rows);
    F2Vector rhs = b;
    for (std::size_t r = 0; r < rows; ++r) a.push_back(m.row(r));

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && !a[p].get(c)) ++p;
        if (p == rows) continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            const bool tmp = rhs.get(p);
            rhs.set(p, rhs.get(rank));
            rhs.set(rank, tmp);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && a[r].get(c)) {
                a[r] ^= a[rank];
                if (rhs.get(rank)) rhs.flip(r);
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    AffineSolutionSet out;
    bool consistent = true;
    for (std::size_t r = rank; r < rows; ++r)
        if (rhs.get(r)) consistent = false;
    if (consistent) {
        F2Vector x(cols);
        for (std::size_t i = 0; i < rank; ++i)
            if (rhs.get(i)) x.set(pivot_cols[i]);
        out.particular = std::move(x);
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        F2Vector k(cols);
        k.set(f);
        for (std::size_t i = 0; i < rank; ++i)
            if (a[i].get(f)) k.set(pivot_cols[i]);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

std::vector<F2Vector> kernel(const F2Matrix& m) { return solve(m, F2Vector(m.rows())).kernel_basis; }

QuotientSpace::QuotientSpace(std::size_t ambient_dimension, std::span<const F2Vector> cycles,
                             std::span<const F2Vector> boundaries)
    : cycles_(ambient_dimension), boundaries_(ambient_dimension), reduced_(ambient_dimension)
{
    for (const auto& z : cycles) cycles_.insert(z);
    for (const auto& b : boundaries) {
        if (!cycles_.contains(b))
            throw InconsistentComplex("boundary " + b.to_string() + " is not in the cycle span");
        boundaries_.insert(b);
    }
    // Vectors reduced modulo the boundaries vanish on the boundary pivots, and so does
    // every combination of them.
    for (const auto& z : cycles_.rows()) reduced_.insert(boundaries_.reduce(z));
    transversal_ = reduced_.rows();
}

F2Vector QuotientSpace::coordinates(const F2Vector& cycle) const
{
    F2Vector r = reduce(cycle);
    F2Vector coords(transversal_.size());
    const auto& piv = reduced_.pivots();
    for (std::size_t i = 0; i < transversal_.size(); ++i) {
        if (r.get(piv[i])) {
            r ^= transversal_[i];
            coords.set(i);
        }
    }
    r = reduce(r);
    if (!r.is_zero()) throw std::invalid_argument("QuotientSpace::coordinates: vector is not a cycle");
    return coords;
}

F2Vector QuotientSpace::representative(const F2Vector& coordinates) const
{
    if (coordinates.size() != transversal_.size())
        throw std::invalid_argument("QuotientSpace::representative: coordinate length");
    F2Vector v(ambient_dimension());
    for (auto i : coordinates.support()) v ^= transversal_[i];
    return reduce(v);
}

}  // namespace hgt
