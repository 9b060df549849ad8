#include "hgt/twist.hpp"

#include <functional>
#include <stdexcept>

namespace hgt {

namespace {

const HCochain& at(const std::vector<HCochain>& v, std::size_t w)
{
    static const HCochain zero;
    return w >= 1 && w <= v.size() ? v[w - 1] : zero;
}

// Calls fn(parts) for every composition of total into k positive parts.
void for_each_composition(std::size_t total, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    if (k == 0 || total < k) return;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t slots) {
        if (slots == 1) {
            parts.push_back(left);
            fn(parts);
            parts.pop_back();
            return;
        }
        for (std::size_t p = 1; p + (slots - 1) <= left; ++p) {
            parts.push_back(p);
            rec(left - p, slots - 1);
            parts.pop_back();
        }
    };
    rec(total, k);
}

// sum_{k>=1} sum_{a + c_1 + .. + c_k = w} E_{1,k}(x_a; g_{c_1}..g_{c_k}) over a < w.
HCochain brace_series(const GradedAlgebra& h, const std::vector<HCochain>& x, const std::vector<HCochain>& g,
                      std::size_t w)
{
    HCochain out;
    std::vector<HCochain> args;
    for (std::size_t a = 1; a < w; ++a) {
        const auto& xa = at(x, a);
        if (xa.is_zero()) continue;
        for (std::size_t k = 1; k <= w - a && k <= xa.arity(); ++k)
            for_each_composition(w - a, k, [&](const std::vector<std::size_t>& parts) {
                args.clear();
                for (auto p : parts) {
                    if (at(g, p).is_zero()) return;
                    args.push_back(at(g, p));
                }
                out += brace(h, xa, args);
            });
    }
    return out;
}

void require_bidegree(const HCochain& x, Bidegree expected, const std::string& what, std::size_t w)
{
    if (x.is_zero()) return;
    if (x.arity() != expected.first || x.degree() != expected.second)
        throw PreconditionError(what + " component of weight " + std::to_string(w) + " has bidegree (" +
                                std::to_string(x.arity()) + "," + std::to_string(x.degree()) + "), expected (" +
                                std::to_string(expected.first) + "," + std::to_string(expected.second) + ")");
}

std::string bidegree_string(Bidegree b) { return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")"; }

}  // namespace

TwistCarrier::TwistCarrier(GradedAlgebra h, Grading grading)
    : grading_(grading), complex_(std::make_unique<HochschildComplex>(std::move(h)))
{
}

Bidegree TwistCarrier::twist_bidegree(std::size_t w) const
{
    if (grading_ == Grading::t_adic) return {2, 0};
    return {w + 2, -static_cast<int>(w)};
}

Bidegree TwistCarrier::gauge_bidegree(std::size_t w) const
{
    if (grading_ == Grading::t_adic) return {1, 0};
    return {w + 1, -static_cast<int>(w)};
}

Bidegree TwistCarrier::obstruction_bidegree(std::size_t w) const
{
    auto b = twist_bidegree(w);
    return {b.first + 1, b.second};
}

TwistV2 regrade(const TwistV1& m)
{
    TwistV2 b;
    b.b.resize(m.T >= 3 ? m.T - 2 : 0);
    for (std::size_t i = 0; i < b.b.size() && i < m.m.size(); ++i) b.b[i] = m.m[i];
    return b;
}

GaugeV2 regrade(const GaugeV1& g)
{
    GaugeV2 out;
    out.g.resize(g.T >= 2 ? g.T - 1 : 0);
    for (std::size_t i = 0; i < out.g.size() && i < g.g.size(); ++i) out.g[i] = g.g[i];
    return out;
}

TwistV1 regrade_v1(const TwistV2& b) { return {b.b.size() + 2, b.b}; }
GaugeV1 regrade_v1(const GaugeV2& g) { return {g.g.size() + 1, g.g}; }

TwistV2 zero_twist(std::size_t weights) { return {std::vector<HCochain>(weights)}; }
GaugeV2 identity_gauge(std::size_t weights) { return {std::vector<HCochain>(weights)}; }

void check_bidegrees(const TwistCarrier& c, const TwistV2& b)
{
    for (std::size_t w = 1; w <= b.b.size(); ++w) require_bidegree(b.b[w - 1], c.twist_bidegree(w), "twisting", w);
}

void check_bidegrees(const TwistCarrier& c, const GaugeV2& g)
{
    for (std::size_t w = 1; w <= g.g.size(); ++w) require_bidegree(g.g[w - 1], c.gauge_bidegree(w), "gauge", w);
}

HCochain quadratic_term(const TwistCarrier& c, const std::vector<HCochain>& b, std::size_t w)
{
    HCochain out;
    for (std::size_t i = 1; i < w; ++i)
        if (!at(b, i).is_zero() && !at(b, w - i).is_zero()) out += cup1(c.algebra(), at(b, i), at(b, w - i));
    return out;
}

TwistCheck check_v2(const TwistCarrier& c, const TwistV2& b)
{
    check_bidegrees(c, b);
    for (std::size_t w = 1; w <= b.b.size(); ++w)
        if (!(delta(c.algebra(), b.b[w - 1]) == quadratic_term(c, b.b, w))) return {false, w};
    return {};
}

TwistCheck check_v1(const TwistCarrier& c, const TwistV1& m)
{
    auto r = check_v2(c, regrade(m));
    if (r.failing) r.failing = *r.failing + 2;
    return r;
}

GaugeV2 gauge_mul(const TwistCarrier& c, const GaugeV2& gbar, const GaugeV2& g)
{
    check_bidegrees(c, gbar);
    check_bidegrees(c, g);
    GaugeV2 out;
    const std::size_t n = std::max(gbar.g.size(), g.g.size());
    for (std::size_t w = 1; w <= n; ++w)
        out.g.push_back(at(gbar.g, w) + at(g.g, w) + brace_series(c.algebra(), gbar.g, g.g, w));
    return out;
}

GaugeV2 gauge_inverse(const TwistCarrier& c, const GaugeV2& g)
{
    check_bidegrees(c, g);
    GaugeV2 h;
    for (std::size_t w = 1; w <= g.g.size(); ++w) h.g.push_back(at(g.g, w) + brace_series(c.algebra(), g.g, h.g, w));
    return h;
}

GaugeV1 gauge_mul(const TwistCarrier& c, const GaugeV1& gbar, const GaugeV1& g)
{
    return regrade_v1(gauge_mul(c, regrade(gbar), regrade(g)));
}

GaugeV1 gauge_inverse(const TwistCarrier& c, const GaugeV1& g) { return regrade_v1(gauge_inverse(c, regrade(g))); }

TwistV2 act_v2(const TwistCarrier& c, const GaugeV2& g, const TwistV2& b)
{
    check_bidegrees(c, g);
    check_bidegrees(c, b);
    const auto& h = c.algebra();
    TwistV2 out;
    for (std::size_t w = 1; w <= b.b.size(); ++w) {
        HCochain x = at(b.b, w);
        if (!at(g.g, w).is_zero()) x += delta(h, at(g.g, w));
        for (std::size_t i = 1; i < w; ++i) {
            const auto& gi = at(g.g, i);
            if (gi.is_zero()) continue;
            if (!at(g.g, w - i).is_zero()) x += cup(h, gi, at(g.g, w - i));
            if (!at(b.b, w - i).is_zero()) x += cup1(h, gi, at(b.b, w - i));
        }
        x += brace_series(h, out.b, g.g, w);
        out.b.push_back(std::move(x));
    }
    return out;
}

TwistV1 act_v1(const TwistCarrier& c, const GaugeV1& g, const TwistV1& m)
{
    auto out = regrade_v1(act_v2(c, regrade(g), regrade(m)));
    out.T = m.T;
    return out;
}

TwistV2 perturb(const TwistCarrier& c, const TwistV2& b, std::size_t n, const HCochain& gn)
{
    GaugeV2 g = identity_gauge(std::max(n, b.b.size()));
    if (n >= 1) g.g[n - 1] = gn;
    return act_v2(c, g, b);
}

std::string ObstructionClass::describe() const
{
    return "weight " + std::to_string(weight) + " class " + coordinates.to_string() + " in H^" +
           bidegree_string(bidegree);
}

ObstructionClass quantization_obstruction(const TwistCarrier& c, const std::vector<HCochain>& partial, std::size_t w)
{
    if (w < 1) throw std::invalid_argument("weights start at 1");
    std::vector<HCochain> prefix(partial.begin(), partial.begin() + static_cast<std::ptrdiff_t>(std::min(partial.size(), w - 1)));
    const auto pre = check_v2(c, {prefix});
    if (!pre.ok) throw PreconditionError("partial twisting element fails at weight " + std::to_string(*pre.failing));
    ObstructionClass o;
    o.weight = w;
    o.bidegree = c.obstruction_bidegree(w);
    o.cochain = quadratic_term(c, prefix, w);
    if (!delta(c.algebra(), o.cochain).is_zero())
        throw InconsistentComplex("quantization obstruction at weight " + std::to_string(w) + " is not a cocycle");
    o.coordinates = c.complex().cohomology(o.bidegree.first, o.bidegree.second).class_of(o.cochain);
    return o;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::success: return "success";
    case Verdict::obstructed: return "obstructed";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct BudgetExhausted {};

// particular + sum of the chosen basis vectors, in Gray code order.
template <class Fn>
bool for_each_affine(const F2Vector& particular, const std::vector<F2Vector>& basis, Fn&& fn)
{
    // Larger spaces are cut off by the caller's budget long before the end.
    F2Vector x = particular;
    const std::uint64_t count = basis.size() >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i) x ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        if (fn(x)) return true;
    }
    return false;
}

}  // namespace

QuantizeResult quantize(const TwistCarrier& c, const F2Vector& alpha, std::size_t weights, std::size_t budget)
{
    QuantizeResult r;
    r.weights = weights;
    if (weights == 0) {
        r.verdict = Verdict::success;
        return r;
    }
    auto& cx = c.complex();
    const auto b1 = c.twist_bidegree(1);
    const auto& h1 = cx.cohomology(b1.first, b1.second);
    if (alpha.size() != h1.dimension()) throw std::invalid_argument("class has the wrong number of coordinates");
    std::vector<HCochain> b{h1.representative(alpha)};
    r.trace.push_back("weight 1: representative of " + alpha.to_string());

    std::function<bool(std::size_t)> dfs = [&](std::size_t w) -> bool {
        if (w > weights) return true;
        const auto o = quantization_obstruction(c, b, w);
        if (!o.vanishes()) {
            if (!r.blocking) r.blocking = o;
            r.trace.push_back("weight " + std::to_string(w) + ": obstructed, " + o.describe());
            return false;
        }
        const auto tb = c.twist_bidegree(w);
        const auto& og = cx.cohomology(o.bidegree.first, o.bidegree.second);
        const auto lifts = og.lift(o.cochain);
        const auto& classes = cx.cohomology(tb.first, tb.second).quotient.transversal();
        const auto& space = og.previous;
        bool first = true;
        const bool found = for_each_affine(*lifts.particular, classes, [&](const F2Vector& x) {
            if (r.evaluations >= budget) throw BudgetExhausted{};
            ++r.evaluations;
            if (!first) ++r.backtracks;
            first = false;
            b.push_back(space.from_vector(x));
            if (dfs(w + 1)) return true;
            b.pop_back();
            return false;
        });
        return found;
    };
    try {
        if (dfs(2)) {
            r.verdict = Verdict::success;
            r.twist.b = b;
            r.trace.push_back("quantized up to weight " + std::to_string(weights));
        } else {
            r.verdict = Verdict::obstructed;
        }
    } catch (const BudgetExhausted&) {
        r.verdict = Verdict::inconclusive;
        r.trace.push_back("budget of " + std::to_string(budget) + " lift evaluations exhausted");
    }
    return r;
}

EquivalenceResult equivalence(const TwistCarrier& c, const TwistV2& b, const TwistV2& target, std::size_t budget)
{
    if (b.b.size() != target.b.size()) throw PreconditionError("twisting elements have different truncations");
    if (!check_v2(c, b).ok || !check_v2(c, target).ok) throw PreconditionError("argument is not a twisting element");
    EquivalenceResult r;
    const std::size_t weights = b.b.size();
    r.weights = weights;
    auto& cx = c.complex();
    GaugeV2 g = identity_gauge(weights);

    std::function<bool(std::size_t)> dfs = [&](std::size_t w) -> bool {
        if (w > weights) return true;
        // (g * b)_w depends on g_w only through dg_w.
        TwistV2 head{std::vector<HCochain>(b.b.begin(), b.b.begin() + static_cast<std::ptrdiff_t>(w))};
        const auto cur = act_v2(c, g, head);
        const auto diff = cur.b[w - 1] + target.b[w - 1];
        const auto tb = c.twist_bidegree(w);
        const auto& grp = cx.cohomology(tb.first, tb.second);
        if (!grp.is_cocycle(diff)) throw InconsistentComplex("difference of twisting elements is not a cocycle");
        const auto lifts = grp.lift(diff);
        if (!lifts.solvable()) {
            ObstructionClass o{w, tb, diff, grp.class_of(diff)};
            if (!r.blocking) r.blocking = o;
            r.trace.push_back("weight " + std::to_string(w) + ": obstructed, " + o.describe());
            return false;
        }
        bool first = true;
        const auto previous = g.g[w - 1];
        const bool found = for_each_affine(*lifts.particular, lifts.kernel_basis, [&](const F2Vector& x) {
            if (r.evaluations >= budget) throw BudgetExhausted{};
            ++r.evaluations;
            if (!first) ++r.backtracks;
            first = false;
            g.g[w - 1] = previous + grp.previous.from_vector(x);
            return dfs(w + 1);
        });
        if (!found) g.g[w - 1] = previous;
        return found;
    };
    try {
        if (dfs(1)) {
            if (!(act_v2(c, g, b).b == target.b)) throw InconsistentComplex("gauge found by the search does not act correctly");
            r.verdict = Verdict::success;
            r.gauge = g;
            r.trace.push_back("equivalent up to weight " + std::to_string(weights));
        } else {
            r.verdict = Verdict::obstructed;
        }
    } catch (const BudgetExhausted&) {
        r.verdict = Verdict::inconclusive;
        r.trace.push_back("budget of " + std::to_string(budget) + " lift evaluations exhausted");
    }
    return r;
}

EquivalenceResult triviality_reduce(const TwistCarrier& c, const TwistV2& b, std::size_t budget)
{
    return equivalence(c, b, zero_twist(b.b.size()), budget);
}

std::optional<TwistV2> random_twist(const TwistCarrier& c, std::size_t weights, std::mt19937_64& rng,
                                    std::size_t attempts)
{
    auto& cx = c.complex();
    std::bernoulli_distribution coin(0.5);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<HCochain> b;
        bool ok = true;
        for (std::size_t w = 1; w <= weights && ok; ++w) {
            const auto o = quantization_obstruction(c, b, w);
            const auto& og = cx.cohomology(o.bidegree.first, o.bidegree.second);
            const auto lifts = og.lift(o.cochain);
            if (!lifts.solvable()) {
                ok = false;
                break;
            }
            F2Vector x = *lifts.particular;
            for (const auto& k : lifts.kernel_basis)
                if (coin(rng)) x ^= k;
            b.push_back(og.previous.from_vector(x));
        }
        if (ok) return TwistV2{b};
    }
    return std::nullopt;
}

GaugeV2 random_gauge(const TwistCarrier& c, std::size_t weights, std::mt19937_64& rng)
{
    GaugeV2 g;
    for (std::size_t w = 1; w <= weights; ++w) {
        const auto b = c.gauge_bidegree(w);
        g.g.push_back(c.complex().space(b.first, b.second).random(rng));
    }
    return g;
}

}  // namespace hgt
