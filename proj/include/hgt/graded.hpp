#pragma once

// Finite dg algebras and coalgebras over GF(2), their bar and cobar
// constructions, twisting cochains and classical twisting elements.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgt/common.hpp"
#include "hgt/f2.hpp"

namespace hgt {

struct BasisElement {
    std::string name;
    int degree = 0;
};

/// Finite list of named basis elements with integer degrees.
class GradedBasis {
public:
    GradedBasis() = default;
    /// Throws std::invalid_argument on duplicate names.
    explicit GradedBasis(std::vector<BasisElement> elements);

    std::size_t size() const { return elements_.size(); }
    const std::string& name(std::size_t i) const { return elements_[i].name; }
    int degree(std::size_t i) const { return elements_[i].degree; }
    const std::vector<BasisElement>& elements() const { return elements_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    /// Degree of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
    std::optional<int> degree_of(const F2Vector& v) const;
    std::string format(const F2Vector& v) const;

private:
    std::vector<BasisElement> elements_;
    std::map<std::string, std::size_t> index_;
};

/// Differential graded algebra given by structure tables on a basis.
/// Nothing beyond table shapes is checked at construction; see validate_dga.
class DgAlgebra {
public:
    DgAlgebra() = default;
    DgAlgebra(GradedBasis basis, std::size_t unit, std::vector<std::vector<F2Vector>> mult,
              std::vector<F2Vector> diff);
    /// Zero differential.
    DgAlgebra(GradedBasis basis, std::size_t unit, std::vector<std::vector<F2Vector>> mult);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t unit() const { return unit_; }
    F2Vector element(std::size_t i) const { return F2Vector::unit(dim(), i); }
    const F2Vector& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
    const F2Vector& differential(std::size_t i) const { return diff_[i]; }
    bool has_zero_differential() const;

    F2Vector multiply(const F2Vector& x, const F2Vector& y) const;
    F2Vector d(const F2Vector& x) const;

private:
    GradedBasis basis_;
    std::size_t unit_ = 0;
    std::vector<std::vector<F2Vector>> mult_;
    std::vector<F2Vector> diff_;
};

/// Differential graded coalgebra. The coproduct of basis element i is a vector of
/// length dim*dim whose bit a*dim+b stands for the tensor e_a (x) e_b.
class DgCoalgebra {
public:
    DgCoalgebra() = default;
    DgCoalgebra(GradedBasis basis, F2Vector counit, std::vector<F2Vector> comult,
                std::vector<F2Vector> diff);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    const F2Vector& counit() const { return counit_; }
    const F2Vector& coproduct(std::size_t i) const { return comult_[i]; }
    std::vector<std::pair<std::size_t, std::size_t>> coproduct_terms(std::size_t i) const;
    const F2Vector& differential(std::size_t i) const { return diff_[i]; }
    F2Vector d(const F2Vector& x) const;

    /// Group-like basis element 1 with eps(1) = 1, d1 = 0, and eps vanishing on every
    /// other basis element.
    std::optional<std::size_t> coaugmentation() const;
    /// Coaugmented with every other basis element in positive degree.
    bool is_connected() const;
    /// Connected with nothing in degrees 1..n.
    bool is_reduced(int n) const;

private:
    GradedBasis basis_;
    F2Vector counit_;
    std::vector<F2Vector> comult_;
    std::vector<F2Vector> diff_;
};

/// Degree additivity, dd = 0, Leibniz rule, associativity and unit laws, each with a
/// witnessing basis tuple.
Report validate_dga(const DgAlgebra& a);
/// Degree preservation, dd = 0, coderivation rule, coassociativity and counit laws.
Report validate_dgc(const DgCoalgebra& c);

bool is_connected(const DgAlgebra& a);
/// Connected with A^i = 0 for 1 <= i <= n.
bool is_reduced(const DgAlgebra& a, int n);

/// Words over letters; a letter is a basis index of the underlying (co)algebra.
using Word = std::vector<std::uint32_t>;
using WordSum = F2Combination<Word>;

enum class BarMode {
    /// Letters are the positive-degree basis elements; requires a connected
    /// 1-reduced algebra.
    reduced,
    /// Letters are all basis elements, T^c(s^{-1}A) on the whole algebra. The
    /// caller accepts that words of length <= L no longer bound the degrees.
    relaxed,
};

/// Bar construction truncated at word length L. Since the differential never
/// increases word length, this is an exact sub dg coalgebra.
struct TruncatedBar {
    std::vector<std::size_t> letters;
    std::size_t max_length = 0;
    std::vector<Word> words;   // by length, then lexicographically
    std::vector<int> degrees;  // sum of (deg a_i - 1)
    std::vector<WordSum> differential;

    std::optional<std::size_t> find(const Word& w) const;
    /// Deconcatenation coalgebra with counit on the empty word.
    DgCoalgebra coalgebra(const GradedBasis& algebra_basis) const;
};

/// Throws PreconditionError when mode is reduced and A is not connected and 1-reduced.
TruncatedBar bar(const DgAlgebra& a, std::size_t max_length, BarMode mode = BarMode::reduced);
/// Bar differential of one word, computed exactly.
WordSum bar_differential(const DgAlgebra& a, const Word& w);
std::string format_word(const GradedBasis& basis, const Word& w);

/// Cobar construction truncated at word length L: the quotient dg algebra of the
/// free algebra by the ideal of words longer than L.
struct TruncatedCobar {
    std::vector<std::size_t> letters;  // basis elements of C other than the coaugmentation
    std::size_t max_length = 0;
    std::vector<Word> words;
    std::vector<int> degrees;  // sum of (deg c_i + 1)
    std::vector<WordSum> differential;  // exact, may contain words of length L + 1
    std::size_t overflow_terms = 0;     // differential terms longer than L

    std::optional<std::size_t> find(const Word& w) const;
    DgAlgebra algebra(const GradedBasis& coalgebra_basis) const;
};

enum class CobarMode {
    /// Requires C connected.
    connected,
    /// Only requires a coaugmentation; letters are the other basis elements.
    coaugmented,
};

/// Throws PreconditionError when C is not connected (resp. not coaugmented).
TruncatedCobar cobar(const DgCoalgebra& c, std::size_t max_length, CobarMode mode = CobarMode::connected);
WordSum cobar_differential(const DgCoalgebra& c, const Word& w);

/// Exact dd = 0 check on every word of the truncation.
Report check_bar_square_zero(const DgAlgebra& a, const TruncatedBar& b);
Report check_cobar_square_zero(const DgCoalgebra& c, const TruncatedCobar& b);

/// Degree +1 map from a coalgebra basis into an algebra.
struct TwistingCochainMap {
    std::vector<F2Vector> values;  // indexed by coalgebra basis, vectors over the algebra
};

/// d tau + tau d = tau cup tau on every basis element of C, plus the degree shift.
Report check_brown(const DgCoalgebra& c, const DgAlgebra& a, const TwistingCochainMap& tau);

/// Projection BA -> A onto words of length one.
TwistingCochainMap universal_bar_cochain(const DgAlgebra& a, const TruncatedBar& b);
/// Inclusion C -> Omega C onto words of length one.
TwistingCochainMap universal_cobar_cochain(const DgCoalgebra& c, const TruncatedCobar& b);

/// f_tau: Omega C -> A on words of length <= L.
struct MultiplicativeExtension {
    std::vector<Word> words;
    std::vector<F2Vector> values;
    Report report;  // chain map and multiplicativity, verified to length L
    std::size_t verified_length = 0;
};

/// g_tau: C -> BA, components of length <= L.
struct ComultiplicativeCoextension {
    std::vector<WordSum> values;  // indexed by basis of C
    Report report;                // chain map and coalgebra map, verified to length L
    std::size_t verified_length = 0;
};

/// Throws PreconditionError when tau fails Brown's condition.
MultiplicativeExtension multiplicative_extension(const DgCoalgebra& c, const DgAlgebra& a,
                                                 const TwistingCochainMap& tau, std::size_t max_length);
/// Throws PreconditionError when tau fails Brown's condition or tau is nonzero on
/// degree 0.
ComultiplicativeCoextension comultiplicative_coextension(const DgCoalgebra& c, const DgAlgebra& a,
                                                         const TwistingCochainMap& tau,
                                                         std::size_t max_length);

/// Classical twisting element: t in A^1 with dt = t.t. Throws PreconditionError
/// when t is nonzero and not homogeneous of degree 1.
bool check_dga_twisting(const DgAlgebra& a, const F2Vector& t);
/// Two-sided inverse of g in A, or nullopt.
std::optional<F2Vector> invert(const DgAlgebra& a, const F2Vector& g);
/// g * t = g.t.g^{-1} + dg.g^{-1}. Throws PreconditionError for a non-invertible
/// or non-degree-0 g.
F2Vector berikashvili_act(const DgAlgebra& a, const F2Vector& g, const F2Vector& t);

}  // namespace hgt
