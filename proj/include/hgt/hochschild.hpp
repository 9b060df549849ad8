#pragma once

// The bigraded Hochschild cochain complex C^{m,n}(H,H) of a finite graded algebra
// with its differential, cup product, brace operations and cohomology.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgt/f2.hpp"
#include "hgt/graded.hpp"

namespace hgt {

using Mask = std::uint64_t;

/// Graded algebra (zero differential) of dimension at most 64, with vectors stored
/// as bit masks over the basis.
class GradedAlgebra {
public:
    static constexpr std::size_t max_dim = 64;
    static constexpr std::size_t max_arity = 24;

    GradedAlgebra() = default;
    /// Throws PreconditionError when d != 0, dim > 64 or validate_dga fails.
    explicit GradedAlgebra(DgAlgebra a);

    const DgAlgebra& algebra() const { return a_; }
    const GradedBasis& basis() const { return a_.basis(); }
    std::size_t dim() const { return n_; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::size_t unit_index() const { return a_.unit(); }
    Mask unit() const { return Mask{1} << a_.unit(); }
    Mask product(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }
    Mask multiply(Mask x, Mask y) const;
    /// Pairs (x, y) of basis elements whose product contains basis element k.
    const std::vector<std::pair<std::uint8_t, std::uint8_t>>& preimages(std::size_t k) const { return pre_[k]; }
    /// Every basis element of degree deg.
    Mask degree_mask(int deg) const;
    bool ungraded() const;

    /// Largest arity whose tuples fit in a 64-bit row index.
    std::size_t arity_limit() const { return arity_limit_; }
    std::uint64_t rows(std::size_t arity) const { return pow_[arity]; }
    std::uint64_t encode(std::span<const std::uint8_t> tuple) const;
    void decode(std::uint64_t row, std::size_t arity, std::uint8_t* out) const;
    std::vector<std::uint8_t> decode(std::uint64_t row, std::size_t arity) const;
    int tuple_degree(std::uint64_t row, std::size_t arity) const;

    F2Vector to_vector(Mask m) const;
    Mask to_mask(const F2Vector& v) const;
    std::string format(Mask m) const;

private:
    DgAlgebra a_;
    std::size_t n_ = 0;
    std::vector<int> degrees_;
    std::vector<Mask> prod_;
    std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> pre_;
    std::vector<std::uint64_t> pow_;
    std::size_t arity_limit_ = 0;
};

struct CochainEntry {
    std::uint64_t row;  // input tuple in base dim, first argument most significant
    Mask value;         // nonzero

    friend bool operator==(const CochainEntry&, const CochainEntry&) = default;
    friend auto operator<=>(const CochainEntry&, const CochainEntry&) = default;
};

/// Hochschild cochain f in C^{m,n}(H,H): a multilinear map H^{(x)m} -> H raising
/// degree by n, stored as its nonzero values on basis tuples sorted by row.
class HCochain {
public:
    HCochain() = default;
    HCochain(std::size_t arity, int degree) : arity_(arity), degree_(degree) {}
    /// Takes unsorted entries with possible repeats; repeated rows are added.
    HCochain(std::size_t arity, int degree, std::vector<CochainEntry> entries);

    /// 0-cochain given by an element of H. Throws when the element is not homogeneous.
    static HCochain element(const GradedAlgebra& h, Mask value);
    /// e_{t -> o}: sends the basis tuple t to basis element o and the other tuples to 0.
    static HCochain elementary(const GradedAlgebra& h, std::span<const std::uint8_t> tuple, std::size_t output);
    static HCochain identity(const GradedAlgebra& h);
    static HCochain multiplication(const GradedAlgebra& h);

    std::size_t arity() const { return arity_; }
    int degree() const { return degree_; }
    /// Total degree m + n.
    int total_degree() const { return static_cast<int>(arity_) + degree_; }
    const std::vector<CochainEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Mask value(std::uint64_t row) const;

    /// Throws std::invalid_argument when both sides are nonzero with different bidegrees.
    HCochain& operator+=(const HCochain& other);
    friend HCochain operator+(HCochain a, const HCochain& b) { return a += b; }
    /// Zero cochains compare equal whatever their bidegree.
    friend bool operator==(const HCochain& a, const HCochain& b);

    /// Checks the degree law on every entry.
    bool well_typed(const GradedAlgebra& h) const;
    std::string to_string(const GradedAlgebra& h) const;

private:
    std::size_t arity_ = 0;
    int degree_ = 0;
    std::vector<CochainEntry> entries_;
};

/// Multilinear evaluation on arbitrary vectors.
Mask evaluate(const GradedAlgebra& h, const HCochain& f, std::span<const Mask> args);

/// (df)(a_1..a_{m+1}) = a_1 f(a_2..) + sum_k f(.., a_k a_{k+1}, ..) + f(..a_m) a_{m+1}.
HCochain delta(const GradedAlgebra& h, const HCochain& f);
/// (f cup g)(a_1..a_{m+p}) = f(a_1..a_m) g(a_{m+1}..a_{m+p}).
HCochain cup(const GradedAlgebra& h, const HCochain& f, const HCochain& g);
/// E_{1,k}(f; g_1..g_k): sum over order preserving non-overlapping insertions.
/// Zero when k > arity(f).
HCochain brace(const GradedAlgebra& h, const HCochain& f, std::span<const HCochain> gs);
inline HCochain cup1(const GradedAlgebra& h, const HCochain& f, const HCochain& g)
{
    return brace(h, f, std::span<const HCochain>(&g, 1));
}

/// Coordinates of C^{m,n} in the basis of elementary cochains e_{t -> o}, ordered by
/// (row, output).
class CochainSpace {
public:
    CochainSpace() = default;
    CochainSpace(const GradedAlgebra& h, std::size_t arity, int degree);

    std::size_t arity() const { return arity_; }
    int degree() const { return degree_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::pair<std::uint64_t, std::uint8_t>& basis_element(std::size_t i) const { return basis_[i]; }
    HCochain element(std::size_t i) const;
    std::optional<std::size_t> index_of(std::uint64_t row, std::size_t output) const;

    /// Throws std::invalid_argument when f has a different bidegree (zero is accepted).
    F2Vector to_vector(const HCochain& f) const;
    HCochain from_vector(const F2Vector& v) const;
    /// Uniformly random element.
    HCochain random(std::mt19937_64& rng) const;

private:
    std::size_t arity_ = 0;
    int degree_ = 0;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> basis_;
};

/// Matrix of delta: C^{m,n} -> C^{m+1,n} in the elementary bases.
F2Matrix delta_matrix(const GradedAlgebra& h, const CochainSpace& source, const CochainSpace& target);

/// HH^{m,n}(H,H) = ker(delta on C^{m,n}) / delta(C^{m-1,n}).
struct HHGroup {
    CochainSpace space;
    CochainSpace previous;  // C^{m-1,n}; empty for m = 0
    F2Matrix incoming;      // delta: C^{m-1,n} -> C^{m,n}
    QuotientSpace quotient;

    std::size_t dimension() const { return quotient.dimension(); }
    bool is_cocycle(const HCochain& z) const { return quotient.is_cycle(space.to_vector(z)); }
    /// All c in C^{m-1,n} with delta c = z.
    AffineSolutionSet lift(const HCochain& z) const;
    bool is_coboundary(const HCochain& z) const { return quotient.is_boundary(space.to_vector(z)); }
    /// Canonical representative of z modulo coboundaries.
    HCochain reduce(const HCochain& z) const { return space.from_vector(quotient.reduce(space.to_vector(z))); }
    F2Vector class_of(const HCochain& z) const { return quotient.coordinates(space.to_vector(z)); }
    HCochain representative(const F2Vector& coords) const
    {
        return space.from_vector(quotient.representative(coords));
    }
    /// Reduced cocycles, one per basis class.
    std::vector<HCochain> class_basis() const;
};

/// Lazily computed cohomology groups of one algebra, cached per bidegree.
class HochschildComplex {
public:
    explicit HochschildComplex(GradedAlgebra h) : h_(std::move(h)) {}
    const GradedAlgebra& algebra() const { return h_; }
    const HHGroup& cohomology(std::size_t m, int n);
    const CochainSpace& space(std::size_t m, int n);

private:
    GradedAlgebra h_;
    std::map<std::pair<std::size_t, int>, std::unique_ptr<HHGroup>> groups_;
    std::map<std::pair<std::size_t, int>, std::unique_ptr<CochainSpace>> spaces_;
};

}  // namespace hgt
