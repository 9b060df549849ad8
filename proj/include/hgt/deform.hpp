#pragma once

// Gerstenhaber star products with their gauge equivalences, and A(infinity)
// structures with morphisms and bar constructions, together with the translations to
// twisting elements in the Hochschild hGa.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hgt/common.hpp"
#include "hgt/graded.hpp"
#include "hgt/hochschild.hpp"
#include "hgt/twist.hpp"

namespace hgt {

/// a * b = ab + sum_i B_i(a,b) t^i up to order N = B.size(); B_i in C^{2,0}.
struct StarProduct {
    std::vector<HCochain> B;  // B[i-1] = B_i
    std::size_t order() const { return B.size(); }
};

/// G = id + sum_i G_i t^i; G_i in C^{1,0}.
struct GaugeSeries {
    std::vector<HCochain> G;  // G[i-1] = G_i
    std::size_t order() const { return G.size(); }
};

struct OrderCheck {
    bool ok = true;
    std::optional<std::size_t> failing_order;
    std::vector<std::string> witness;  // basis names
};

/// Throws PreconditionError unless every B_i is zero or in C^{2,0}.
void check_typed(const StarProduct& b);
void check_typed(const GaugeSeries& g);

/// sum_{i+j=n} B_i(a, B_j(b,c)) = sum_{i+j=n} B_i(B_j(a,b), c) with B_0 = mu, for all
/// n <= N and basis triples, evaluated directly from the tables.
OrderCheck check_star(const GradedAlgebra& h, const StarProduct& b);
/// Coefficients of t^0..t^N of a * b.
std::vector<Mask> star_eval(const GradedAlgebra& h, Mask a, Mask b, const StarProduct& s);

/// sum_{r+s=n} G_r(B_s(a,b)) = sum_{i+j+k=n} B'_i(G_j(a), G_k(b)) for n <= N, basis pairs.
OrderCheck check_gauge(const GradedAlgebra& h, const StarProduct& b, const StarProduct& bprime, const GaugeSeries& g);
/// The unique B' with check_gauge(B, B', G), solved order by order.
StarProduct gauge_transform(const GradedAlgebra& h, const StarProduct& b, const GaugeSeries& g);

/// b_k = B_k t^k in the t-adic carrier.
TwistV2 star_to_twist(const StarProduct& b);
StarProduct twist_to_star(const TwistV2& b);
GaugeV2 gauge_to_twist(const GaugeSeries& g);
GaugeSeries twist_to_gauge(const GaugeV2& g);

/// Random B with B_i in C^{2,0}, not necessarily associative.
StarProduct random_star(const GradedAlgebra& h, std::size_t order, std::mt19937_64& rng);

struct GerstenhaberReport {
    std::size_t order = 0;
    std::size_t hh2 = 0;
    std::size_t hh3 = 0;
    bool integrability_certificate = false;  // HH^3 = 0
    bool rigidity_certificate = false;       // HH^2 = 0
    struct Run {
        std::string subject;
        Verdict verdict;
        std::optional<ObstructionClass> blocking;
        std::size_t evaluations = 0;
    };
    std::vector<Run> quantize_runs;    // HH^2 classes, when HH^3 != 0
    std::vector<Run> triviality_runs;  // random deformations, when HH^2 != 0
};

/// Requires an ungraded algebra. Quantize runs cover every HH^2 class when there are at
/// most 64 of them, otherwise the basis classes.
GerstenhaberReport gerstenhaber_report(const GradedAlgebra& a, std::size_t order, std::size_t budget,
                                       std::size_t samples = 8, std::uint64_t seed = 1);

/// A(infinity) structure on a graded module with dense operation tables: ops[i-1] holds
/// m_i on every basis tuple of length i (rows in base dim, first argument most
/// significant), as masks over the basis. Operations beyond ops.size() are zero.
struct AinfAlgebra {
    GradedBasis basis;
    std::vector<std::vector<Mask>> ops;

    std::size_t dim() const { return basis.size(); }
    std::size_t max_arity() const { return ops.size(); }
    bool minimal() const;
    /// Degree law deg m_i = 2 - i on every entry, and table shapes.
    Report check_typed() const;
};

/// f_i: M^{(x)i} -> M', deg f_i = 1 - i.
struct AinfMorphism {
    std::vector<std::vector<Mask>> maps;
    std::size_t max_arity() const { return maps.size(); }
    Report check_typed(const AinfAlgebra& source, const AinfAlgebra& target) const;
};

/// Throws PreconditionError when dim > 64 or dim^arity exceeds the table limit.
std::vector<Mask> zero_table(std::size_t dim, std::size_t arity);

AinfAlgebra ainf_from_dga(const DgAlgebra& a, std::size_t max_arity = 2);
/// Identity on M: f_1 = id, f_{>=2} = 0.
AinfMorphism identity_morphism(const AinfAlgebra& m, std::size_t max_arity = 1);

struct AinfCheck {
    bool ok = true;
    std::optional<std::size_t> failing_arity;
    std::vector<std::string> witness;
};

/// The A(infinity) relations for every n <= window on basis tuples.
AinfCheck check_ainf(const AinfAlgebra& m, std::size_t window);
/// The morphism relations for every n <= window on basis tuples.
AinfCheck check_ainf_morphism(const AinfMorphism& f, const AinfAlgebra& source, const AinfAlgebra& target,
                              std::size_t window);

/// Bar construction T^c(s^{-1}M) with the coderivation d_m, on words of length <= L.
struct AinfBar {
    std::size_t max_length = 0;
    std::vector<Word> words;
    std::vector<WordSum> differential;
    Report report;  // d_m d_m = 0 and the coderivation rule within the truncation
};
AinfBar ainf_bar(const AinfAlgebra& m, std::size_t max_length);
WordSum ainf_bar_differential(const AinfAlgebra& m, const Word& w);

enum class MorphismClass { isomorphism, weak_equivalence, neither };
std::string to_string(MorphismClass c);

struct Classification {
    MorphismClass kind = MorphismClass::neither;
    bool chain_map = false;  // f_1 m_1 = m'_1 f_1
    std::vector<std::string> notes;
};
/// Isomorphism iff f_1 is invertible; weak equivalence iff f_1 is a chain map inducing
/// an isomorphism on homology of (M, m_1).
Classification classify_morphism(const AinfMorphism& f, const AinfAlgebra& source, const AinfAlgebra& target);

/// m^i = m_i for 3 <= i <= max_arity, so T = max_arity. Throws PreconditionError unless M
/// is minimal with m_2 equal to the product of H.
TwistV1 stasheff_to_twist(const GradedAlgebra& h, const AinfAlgebra& m);
/// (H, 0, mu, m^3, ..., m^T).
AinfAlgebra twist_to_stasheff(const GradedAlgebra& h, const TwistV1& m);
/// A morphism f between two A(infinity) deformations of H with f_1 = id, as the gauge
/// g^i = f_i. Throws PreconditionError when f_1 is not the identity.
GaugeV1 morphism_to_gauge(const GradedAlgebra& h, const AinfMorphism& f);
/// The unique M' for which f: M -> M' is a morphism, when f_1 = id; solved arity by arity
/// up to the arity of M.
AinfAlgebra transport(const AinfAlgebra& m, const AinfMorphism& f);

/// Random minimal structure (H, 0, mu, m_3..m_max) with m_i uniformly random in C^{i,2-i}.
AinfAlgebra random_deformation(const GradedAlgebra& h, std::size_t max_arity, std::mt19937_64& rng);

struct FormalityResult {
    std::size_t nmax = 0;
    bool certified = false;
    std::vector<std::pair<std::size_t, std::size_t>> dimensions;  // (n, dim HH^{n,2-n})
    std::vector<std::size_t> nonzero;
};
FormalityResult intrinsic_formality(HochschildComplex& c, std::size_t nmax);

/// Checks that (H, {m_i}) with {f_i}: H -> A is a minimal A(infinity) model of a dga:
/// the structure relations, the morphism relations against (A, d, mu, 0, ...), and that f
/// is a weak equivalence.
Report verify_homology_model(const DgAlgebra& a, const AinfAlgebra& h, const AinfMorphism& f, std::size_t window);

}  // namespace hgt
