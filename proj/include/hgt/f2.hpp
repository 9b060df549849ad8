#pragma once

// Exact linear algebra over the two-element field.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgt {

/// Bit-packed vector over GF(2). Bits past size() are always zero.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t size);

    static F2Vector unit(std::size_t size, std::size_t index);
    static F2Vector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const;
    std::vector<std::size_t> support() const;
    bool dot(const F2Vector& other) const;

    F2Vector& operator^=(const F2Vector& other);
    F2Vector& operator+=(const F2Vector& other) { return *this ^= other; }
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a ^= b; }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Concatenation of this vector followed by `tail`.
    F2Vector concat(const F2Vector& tail) const;

    std::string to_string() const;

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major GF(2) matrix.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);
    /// Matrix whose j-th column is columns[j]; every column must have length `rows`.
    static F2Matrix from_columns(std::size_t rows, std::span<const F2Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
    const F2Vector& row(std::size_t r) const { return data_[r]; }
    F2Vector& row(std::size_t r) { return data_[r]; }
    F2Vector column(std::size_t c) const;

    F2Vector apply(const F2Vector& x) const;
    F2Matrix transpose() const;
    F2Matrix operator*(const F2Matrix& rhs) const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F2Vector> data_;
};

/// Span of a set of vectors kept in fully reduced row echelon form. The pivot of
/// each row is its lowest set bit, and no other row has a bit at that pivot.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension = 0) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }
    /// Adds v to the span. Returns false when v was already in it.
    bool insert(F2Vector v);
    /// Canonical representative of v modulo the span: zero at every pivot column.
    F2Vector reduce(F2Vector v) const;
    bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }
    /// Rows ordered by increasing pivot.
    const std::vector<F2Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t dimension_;
    std::vector<F2Vector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const F2Matrix& m);
std::size_t rank(std::span<const F2Vector> vectors);

struct AffineSolutionSet {
    std::optional<F2Vector> particular;
    std::vector<F2Vector> kernel_basis;

    bool solvable() const { return particular.has_value(); }
};

/// All x with m.apply(x) == b. Throws std::invalid_argument on a length mismatch.
AffineSolutionSet solve(const F2Matrix& m, const F2Vector& b);
std::vector<F2Vector> kernel(const F2Matrix& m);

/// Thrown when a boundary space is not contained in the corresponding cycle space.
class InconsistentComplex : public std::exception {
public:
    explicit InconsistentComplex(std::string what) : what_(std::move(what)) {}
    const char* what() const noexcept override { return what_.c_str(); }

private:
    std::string what_;
};

/// span(cycles) / span(boundaries) with canonical coset representatives.
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(std::size_t ambient_dimension, std::span<const F2Vector> cycles,
                  std::span<const F2Vector> boundaries);

    std::size_t ambient_dimension() const { return cycles_.dimension(); }
    std::size_t dimension() const { return transversal_.size(); }
    std::size_t cycle_rank() const { return cycles_.rank(); }
    std::size_t boundary_rank() const { return boundaries_.rank(); }

    bool is_cycle(const F2Vector& v) const { return cycles_.contains(v); }
    bool is_boundary(const F2Vector& v) const { return boundaries_.contains(v); }
    /// Canonical representative of v + span(boundaries). Idempotent.
    F2Vector reduce(const F2Vector& v) const { return boundaries_.reduce(v); }
    /// Coordinates of the class of a cycle in the transversal basis.
    F2Vector coordinates(const F2Vector& cycle) const;
    /// Canonical cycle with the given class coordinates.
    F2Vector representative(const F2Vector& coordinates) const;

    /// Reduced representatives, one per quotient basis vector.
    const std::vector<F2Vector>& transversal() const { return transversal_; }
    const EchelonBasis& cycle_basis() const { return cycles_; }
    const EchelonBasis& boundary_basis() const { return boundaries_; }

private:
    EchelonBasis cycles_;
    EchelonBasis boundaries_;
    EchelonBasis reduced_;  // transversal in echelon form, pivots disjoint from boundaries
    std::vector<F2Vector> transversal_;
};

}  // namespace hgt
