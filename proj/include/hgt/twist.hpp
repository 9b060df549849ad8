#pragma once

// Twisting elements db = b cup_1 b in the bigraded Hochschild hGa, the gauge group
// and its action, perturbations, and the obstruction searches for quantization and
// triviality.
//
// Components are indexed by a weight w >= 1. With the internal grading a twisting
// element has b_w = m^{w+2} in C^{w+2,-w} and a gauge element g_w = g^{w+1} in
// C^{w+1,-w}. With the t-adic grading b_w = B_w t^w has B_w in C^{2,0} and g_w = G_w t^w
// has G_w in C^{1,0}. Every formula below is then the same in both cases.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgt/common.hpp"
#include "hgt/f2.hpp"
#include "hgt/hochschild.hpp"

namespace hgt {

enum class Grading {
    internal,  // Stasheff deformations of a graded algebra
    t_adic,    // Gerstenhaber deformations, C^*(A,A) (x) t F2[t]
};

using Bidegree = std::pair<std::size_t, int>;

class TwistCarrier {
public:
    TwistCarrier(GradedAlgebra h, Grading grading);

    const GradedAlgebra& algebra() const { return complex_->algebra(); }
    Grading grading() const { return grading_; }
    HochschildComplex& complex() const { return *complex_; }

    Bidegree twist_bidegree(std::size_t w) const;
    Bidegree gauge_bidegree(std::size_t w) const;
    /// Home of the quantization obstruction at weight w.
    Bidegree obstruction_bidegree(std::size_t w) const;

private:
    Grading grading_;
    std::unique_ptr<HochschildComplex> complex_;
};

/// b_q for q = 1..W, stored at index q-1.
struct TwistV2 {
    std::vector<HCochain> b;
    std::size_t weights() const { return b.size(); }
};
/// g_q for q = 1..W, stored at index q-1.
struct GaugeV2 {
    std::vector<HCochain> g;
    std::size_t weights() const { return g.size(); }
};
/// m^p for 3 <= p <= T, stored at index p-3.
struct TwistV1 {
    std::size_t T = 3;
    std::vector<HCochain> m;
};
/// g^p for 2 <= p <= T, stored at index p-2.
struct GaugeV1 {
    std::size_t T = 2;
    std::vector<HCochain> g;
};

TwistV2 regrade(const TwistV1& m);
GaugeV2 regrade(const GaugeV1& g);
TwistV1 regrade_v1(const TwistV2& b);
GaugeV1 regrade_v1(const GaugeV2& g);

TwistV2 zero_twist(std::size_t weights);
GaugeV2 identity_gauge(std::size_t weights);

/// Throws PreconditionError when a nonzero component has the wrong bidegree.
void check_bidegrees(const TwistCarrier& c, const TwistV2& b);
void check_bidegrees(const TwistCarrier& c, const GaugeV2& g);

struct TwistCheck {
    bool ok = true;
    std::optional<std::size_t> failing;  // weight for v2, degree p for v1
};

/// sum_{i+j=w, i,j>=1} b_i cup_1 b_j.
HCochain quadratic_term(const TwistCarrier& c, const std::vector<HCochain>& b, std::size_t w);

/// db_w = sum_{i+j=w} b_i cup_1 b_j for every w.
TwistCheck check_v2(const TwistCarrier& c, const TwistV2& b);
/// dm^p = sum_{i=3}^{p-1} m^i cup_1 m^{p-i+2} for every p <= T.
TwistCheck check_v1(const TwistCarrier& c, const TwistV1& m);

/// (gb * g)_w = gb_w + g_w + sum_k sum E_{1,k}(gb_a; g_{c_1}..g_{c_k}), a + sum c = w.
GaugeV2 gauge_mul(const TwistCarrier& c, const GaugeV2& gbar, const GaugeV2& g);
/// Solved weight by weight from g * h = e.
GaugeV2 gauge_inverse(const TwistCarrier& c, const GaugeV2& g);
GaugeV1 gauge_mul(const TwistCarrier& c, const GaugeV1& gbar, const GaugeV1& g);
GaugeV1 gauge_inverse(const TwistCarrier& c, const GaugeV1& g);

/// g * b, solved weight by weight from
/// b' = b + dg + g.g + E_{1,1}(g;b) + sum_k E_{1,k}(b'; g..g), truncated at the
/// weights of b. Gauge components beyond that truncation are ignored.
TwistV2 act_v2(const TwistCarrier& c, const GaugeV2& g, const TwistV2& b);
TwistV1 act_v1(const TwistCarrier& c, const GaugeV1& g, const TwistV1& m);

/// Action of the gauge element whose only component is g_n at weight n.
TwistV2 perturb(const TwistCarrier& c, const TwistV2& b, std::size_t n, const HCochain& gn);

struct ObstructionClass {
    std::size_t weight = 0;
    Bidegree bidegree;
    HCochain cochain;
    F2Vector coordinates;  // in the basis of the cohomology group
    bool vanishes() const { return coordinates.is_zero(); }
    std::string describe() const;
};

/// Class of quadratic_term(b, w) given b_1..b_{w-1}. Throws PreconditionError when the
/// partial element fails the twisting condition below w and InconsistentComplex when
/// the obstruction cochain is not a cocycle.
ObstructionClass quantization_obstruction(const TwistCarrier& c, const std::vector<HCochain>& partial,
                                          std::size_t w);

enum class Verdict { success, obstructed, inconclusive };
std::string to_string(Verdict v);

struct QuantizeResult {
    Verdict verdict = Verdict::inconclusive;
    std::size_t weights = 0;
    TwistV2 twist;                            // on success
    std::optional<ObstructionClass> blocking;  // first obstruction met by the search
    std::size_t evaluations = 0;
    std::size_t backtracks = 0;
    std::vector<std::string> trace;
};

/// Depth first search for b with [b_1] = alpha. At each weight the lifts are a
/// particular solution plus every combination of cohomology representatives; lifts
/// differing by a coboundary are gauge equivalent through a perturbation.
QuantizeResult quantize(const TwistCarrier& c, const F2Vector& alpha, std::size_t weights, std::size_t budget = 10000);

struct EquivalenceResult {
    Verdict verdict = Verdict::inconclusive;
    std::size_t weights = 0;
    GaugeV2 gauge;                             // on success, with gauge * b = target
    std::optional<ObstructionClass> blocking;  // first obstruction met by the search
    std::size_t evaluations = 0;
    std::size_t backtracks = 0;
    std::vector<std::string> trace;
};

/// Search for g with g * b = target, weight by weight, over particular solution plus
/// every kernel combination. Both arguments must be twisting elements.
EquivalenceResult equivalence(const TwistCarrier& c, const TwistV2& b, const TwistV2& target,
                              std::size_t budget = 10000);
/// equivalence(b, 0).
EquivalenceResult triviality_reduce(const TwistCarrier& c, const TwistV2& b, std::size_t budget = 10000);

/// Random twisting element built weight by weight from random lifts; nullopt when every
/// attempt met a nonvanishing obstruction.
std::optional<TwistV2> random_twist(const TwistCarrier& c, std::size_t weights, std::mt19937_64& rng,
                                    std::size_t attempts = 32);
GaugeV2 random_gauge(const TwistCarrier& c, std::size_t weights, std::mt19937_64& rng);

}  // namespace hgt
