#include "hgt/deform.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace hgt {

namespace {

constexpr std::uint64_t table_limit = std::uint64_t{1} << 22;

std::uint64_t power(std::size_t base, std::size_t exp)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > table_limit) throw PreconditionError("operation table too large");
    }
    return r;
}

std::vector<std::string> names(const GradedBasis& basis, std::span<const std::uint32_t> tuple)
{
    std::vector<std::string> out;
    for (auto t : tuple) out.push_back(basis.name(t));
    return out;
}

// Multilinear evaluation of a dense table on arbitrary arguments.
Mask eval_table(const std::vector<Mask>& table, std::size_t dim, std::span<const Mask> args)
{
    if (args.empty()) return table.empty() ? 0 : table[0];
    for (auto a : args)
        if (!a) return 0;
    Mask out = 0;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t row) {
        if (pos == args.size()) {
            out ^= table[row];
            return;
        }
        for (Mask v = args[pos]; v; v &= v - 1) rec(pos + 1, row * dim + static_cast<std::uint64_t>(std::countr_zero(v)));
    };
    rec(0, 0);
    return out;
}

// m_i applied to args, zero beyond the stored arities.
Mask apply_op(const std::vector<std::vector<Mask>>& ops, std::size_t dim, std::span<const Mask> args)
{
    const std::size_t i = args.size();
    if (i == 0 || i > ops.size() || ops[i - 1].empty()) return 0;
    return eval_table(ops[i - 1], dim, args);
}

// Calls fn(tuple) for every basis tuple of length n.
void for_each_basis_tuple(std::size_t dim, std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn)
{
    std::vector<std::uint32_t> t(n, 0);
    while (true) {
        fn(t);
        std::size_t i = n;
        while (i > 0 && ++t[i - 1] == dim) t[--i] = 0;
        if (i == 0) return;
    }
}

std::vector<Mask> to_masks(const std::vector<std::uint32_t>& t)
{
    std::vector<Mask> out;
    for (auto x : t) out.push_back(Mask{1} << x);
    return out;
}

// sum_{j} sum_k op_{n-j+1}(a_1..a_k, inner_j(a_{k+1}..a_{k+j}), ..., a_n)
Mask composite(const std::vector<std::vector<Mask>>& outer, const std::vector<std::vector<Mask>>& inner, std::size_t dim,
               const std::vector<Mask>& a)
{
    const std::size_t n = a.size();
    Mask out = 0;
    std::vector<Mask> args;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 0; k + j <= n; ++k) {
            const Mask v = apply_op(inner, dim, std::span<const Mask>(a.data() + k, j));
            if (!v) continue;
            args.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
            args.push_back(v);
            args.insert(args.end(), a.begin() + static_cast<std::ptrdiff_t>(k + j), a.end());
            out ^= apply_op(outer, dim, args);
        }
    return out;
}

// sum over compositions k_1 + .. + k_t = n of m'_t(f_{k_1}(..), .., f_{k_t}(..)).
Mask composite_after(const std::vector<std::vector<Mask>>& target_ops, std::size_t target_dim,
                     const std::vector<std::vector<Mask>>& maps, std::size_t source_dim, const std::vector<Mask>& a,
                     bool skip_all_ones = false)
{
    const std::size_t n = a.size();
    Mask out = 0;
    std::vector<Mask> values;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == n) {
            if (skip_all_ones && values.size() == n) return;
            out ^= apply_op(target_ops, target_dim, values);
            return;
        }
        for (std::size_t k = 1; pos + k <= n; ++k) {
            const Mask v = apply_op(maps, source_dim, std::span<const Mask>(a.data() + pos, k));
            if (!v) continue;
            values.push_back(v);
            rec(pos + k);
            values.pop_back();
        }
    };
    rec(0);
    return out;
}

HCochain table_to_cochain(const std::vector<Mask>& table, std::size_t arity, int degree)
{
    std::vector<CochainEntry> e;
    for (std::uint64_t r = 0; r < table.size(); ++r)
        if (table[r]) e.push_back({r, table[r]});
    return HCochain(arity, degree, std::move(e));
}

std::vector<Mask> cochain_to_table(const HCochain& f, std::size_t dim, std::size_t arity)
{
    std::vector<Mask> t = zero_table(dim, arity);
    if (f.is_zero()) return t;
    if (f.arity() != arity) throw PreconditionError("cochain has arity " + std::to_string(f.arity()) + ", expected " +
                                                    std::to_string(arity));
    for (const auto& e : f.entries()) t[e.row] = e.value;
    return t;
}

Mask star_coeff(const GradedAlgebra& h, const std::vector<HCochain>& b, std::size_t i, Mask x, Mask y)
{
    if (i == 0) return h.multiply(x, y);
    if (i > b.size() || b[i - 1].is_zero()) return 0;
    const Mask args[2] = {x, y};
    return evaluate(h, b[i - 1], args);
}

Mask gauge_coeff(const GradedAlgebra& h, const std::vector<HCochain>& g, std::size_t i, Mask x)
{
    if (i == 0) return x;
    if (i > g.size() || g[i - 1].is_zero()) return 0;
    return evaluate(h, g[i - 1], std::span<const Mask>(&x, 1));
}

}  // namespace

void check_typed(const StarProduct& b)
{
    for (std::size_t i = 0; i < b.B.size(); ++i)
        if (!b.B[i].is_zero() && (b.B[i].arity() != 2 || b.B[i].degree() != 0))
            throw PreconditionError("B_" + std::to_string(i + 1) + " is not in C^{2,0}");
}

void check_typed(const GaugeSeries& g)
{
    for (std::size_t i = 0; i < g.G.size(); ++i)
        if (!g.G[i].is_zero() && (g.G[i].arity() != 1 || g.G[i].degree() != 0))
            throw PreconditionError("G_" + std::to_string(i + 1) + " is not in C^{1,0}");
}

OrderCheck check_star(const GradedAlgebra& h, const StarProduct& s)
{
    check_typed(s);
    const std::size_t n_dim = h.dim();
    for (std::size_t n = 1; n <= s.order(); ++n)
        for (std::size_t a = 0; a < n_dim; ++a)
            for (std::size_t b = 0; b < n_dim; ++b)
                for (std::size_t c = 0; c < n_dim; ++c) {
                    const Mask ma = Mask{1} << a, mb = Mask{1} << b, mc = Mask{1} << c;
                    Mask diff = 0;
                    for (std::size_t i = 0; i <= n; ++i) {
                        diff ^= star_coeff(h, s.B, i, ma, star_coeff(h, s.B, n - i, mb, mc));
                        diff ^= star_coeff(h, s.B, i, star_coeff(h, s.B, n - i, ma, mb), mc);
                    }
                    if (diff)
                        return {false, n, {h.basis().name(a), h.basis().name(b), h.basis().name(c)}};
                }
    return {};
}

std::vector<Mask> star_eval(const GradedAlgebra& h, Mask a, Mask b, const StarProduct& s)
{
    std::vector<Mask> out;
    for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(star_coeff(h, s.B, i, a, b));
    return out;
}

OrderCheck check_gauge(const GradedAlgebra& h, const StarProduct& b, const StarProduct& bp, const GaugeSeries& g)
{
    check_typed(b);
    check_typed(bp);
    check_typed(g);
    const std::size_t order = std::max({b.order(), bp.order(), g.order()});
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t x = 0; x < h.dim(); ++x)
            for (std::size_t y = 0; y < h.dim(); ++y) {
                const Mask mx = Mask{1} << x, my = Mask{1} << y;
                Mask diff = 0;
                for (std::size_t r = 0; r <= n; ++r) diff ^= gauge_coeff(h, g.G, r, star_coeff(h, b.B, n - r, mx, my));
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t j = 0; i + j <= n; ++j)
                        diff ^= star_coeff(h, bp.B, i, gauge_coeff(h, g.G, j, mx), gauge_coeff(h, g.G, n - i - j, my));
                if (diff) return {false, n, {h.basis().name(x), h.basis().name(y)}};
            }
    return {};
}

StarProduct gauge_transform(const GradedAlgebra& h, const StarProduct& b, const GaugeSeries& g)
{
    check_typed(b);
    check_typed(g);
    const std::size_t order = std::max(b.order(), g.order());
    StarProduct out;
    for (std::size_t n = 1; n <= order; ++n) {
        std::vector<CochainEntry> e;
        for (std::size_t x = 0; x < h.dim(); ++x)
            for (std::size_t y = 0; y < h.dim(); ++y) {
                const Mask mx = Mask{1} << x, my = Mask{1} << y;
                Mask v = 0;
                for (std::size_t r = 0; r <= n; ++r) v ^= gauge_coeff(h, g.G, r, star_coeff(h, b.B, n - r, mx, my));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; i + j <= n; ++j)
                        v ^= star_coeff(h, out.B, i, gauge_coeff(h, g.G, j, mx), gauge_coeff(h, g.G, n - i - j, my));
                if (v) e.push_back({x * h.dim() + y, v});
            }
        out.B.emplace_back(2, 0, std::move(e));
    }
    return out;
}

TwistV2 star_to_twist(const StarProduct& b)
{
    check_typed(b);
    return {b.B};
}

StarProduct twist_to_star(const TwistV2& b)
{
    StarProduct s{b.b};
    check_typed(s);
    return s;
}

GaugeV2 gauge_to_twist(const GaugeSeries& g)
{
    check_typed(g);
    return {g.G};
}

GaugeSeries twist_to_gauge(const GaugeV2& g)
{
    GaugeSeries s{g.g};
    check_typed(s);
    return s;
}

StarProduct random_star(const GradedAlgebra& h, std::size_t order, std::mt19937_64& rng)
{
    CochainSpace space(h, 2, 0);
    StarProduct s;
    for (std::size_t i = 0; i < order; ++i) s.B.push_back(space.random(rng));
    return s;
}

GerstenhaberReport gerstenhaber_report(const GradedAlgebra& a, std::size_t order, std::size_t budget,
                                       std::size_t samples, std::uint64_t seed)
{
    if (!a.ungraded()) throw PreconditionError("Gerstenhaber deformations need an ungraded algebra");
    TwistCarrier c(a, Grading::t_adic);
    GerstenhaberReport r;
    r.order = order;
    const auto& h2 = c.complex().cohomology(2, 0);
    r.hh2 = h2.dimension();
    r.hh3 = c.complex().cohomology(3, 0).dimension();
    r.integrability_certificate = r.hh3 == 0;
    r.rigidity_certificate = r.hh2 == 0;
    if (!r.integrability_certificate) {
        std::vector<F2Vector> classes;
        if (r.hh2 <= 6) {
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << r.hh2); ++m) {
                F2Vector v(r.hh2);
                for (std::size_t i = 0; i < r.hh2; ++i)
                    if ((m >> i) & 1) v.set(i);
                classes.push_back(v);
            }
        } else {
            for (std::size_t i = 0; i < r.hh2; ++i) classes.push_back(F2Vector::unit(r.hh2, i));
        }
        for (const auto& alpha : classes) {
            const auto q = quantize(c, alpha, order, budget);
            r.quantize_runs.push_back({"class " + alpha.to_string(), q.verdict, q.blocking, q.evaluations});
        }
    }
    if (!r.rigidity_certificate) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto b = random_twist(c, order, rng);
            if (!b) continue;
            const auto t = triviality_reduce(c, *b, budget);
            r.triviality_runs.push_back({"random deformation " + std::to_string(i), t.verdict, t.blocking, t.evaluations});
        }
    }
    return r;
}

std::vector<Mask> zero_table(std::size_t dim, std::size_t arity)
{
    if (dim > 64) throw PreconditionError("module dimension above 64");
    return std::vector<Mask>(power(dim, arity), 0);
}

bool AinfAlgebra::minimal() const
{
    if (ops.empty()) return true;
    for (auto v : ops[0])
        if (v) return false;
    return true;
}

Report AinfAlgebra::check_typed() const
{
    Report r;
    const std::size_t n = dim();
    for (std::size_t i = 1; i <= ops.size(); ++i) {
        const auto& t = ops[i - 1];
        if (t.empty()) continue;
        r.count_check();
        if (t.size() != power(n, i)) {
            r.add({"table shape", {"m_" + std::to_string(i)}, "wrong number of rows"});
            continue;
        }
        std::vector<std::uint32_t> tuple(i);
        for (std::uint64_t row = 0; row < t.size(); ++row) {
            if (!t[row]) continue;
            std::uint64_t x = row;
            int deg = 2 - static_cast<int>(i);
            for (std::size_t p = i; p-- > 0;) {
                tuple[p] = static_cast<std::uint32_t>(x % n);
                x /= n;
                deg += basis.degree(tuple[p]);
            }
            for (Mask v = t[row]; v; v &= v - 1) {
                const auto o = static_cast<std::size_t>(std::countr_zero(v));
                if (o >= n || basis.degree(o) != deg) {
                    auto w = names(basis, tuple);
                    w.insert(w.begin(), "m_" + std::to_string(i));
                    r.add({"degree law", w, o >= n ? "output out of range" : "output " + basis.name(o)});
                    break;
                }
            }
        }
    }
    return r;
}

Report AinfMorphism::check_typed(const AinfAlgebra& source, const AinfAlgebra& target) const
{
    Report r;
    const std::size_t n = source.dim();
    for (std::size_t i = 1; i <= maps.size(); ++i) {
        const auto& t = maps[i - 1];
        if (t.empty()) continue;
        r.count_check();
        if (t.size() != power(n, i)) {
            r.add({"table shape", {"f_" + std::to_string(i)}, "wrong number of rows"});
            continue;
        }
        std::vector<std::uint32_t> tuple(i);
        for (std::uint64_t row = 0; row < t.size(); ++row) {
            if (!t[row]) continue;
            std::uint64_t x = row;
            int deg = 1 - static_cast<int>(i);
            for (std::size_t p = i; p-- > 0;) {
                tuple[p] = static_cast<std::uint32_t>(x % n);
                x /= n;
                deg += source.basis.degree(tuple[p]);
            }
            for (Mask v = t[row]; v; v &= v - 1) {
                const auto o = static_cast<std::size_t>(std::countr_zero(v));
                if (o >= target.dim() || target.basis.degree(o) != deg) {
                    auto w = names(source.basis, tuple);
                    w.insert(w.begin(), "f_" + std::to_string(i));
                    r.add({"degree law", w, "output out of range or of the wrong degree"});
                    break;
                }
            }
        }
    }
    return r;
}

AinfAlgebra ainf_from_dga(const DgAlgebra& a, std::size_t max_arity)
{
    if (a.dim() > 64) throw PreconditionError("module dimension above 64");
    AinfAlgebra m{a.basis(), {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 1; i <= std::max<std::size_t>(max_arity, 2); ++i) m.ops.push_back(zero_table(n, i));
    for (std::size_t x = 0; x < n; ++x) {
        for (auto o : a.differential(x).support()) m.ops[0][x] |= Mask{1} << o;
        for (std::size_t y = 0; y < n; ++y)
            for (auto o : a.product(x, y).support()) m.ops[1][x * n + y] |= Mask{1} << o;
    }
    return m;
}

AinfMorphism identity_morphism(const AinfAlgebra& m, std::size_t max_arity)
{
    AinfMorphism f;
    for (std::size_t i = 1; i <= std::max<std::size_t>(max_arity, 1); ++i) f.maps.push_back(zero_table(m.dim(), i));
    for (std::size_t x = 0; x < m.dim(); ++x) f.maps[0][x] = Mask{1} << x;
    return f;
}

AinfCheck check_ainf(const AinfAlgebra& m, std::size_t window)
{
    if (!m.check_typed().ok()) throw PreconditionError("A(infinity) structure is not well typed");
    AinfCheck out;
    for (std::size_t n = 1; n <= window && out.ok; ++n)
        for_each_basis_tuple(m.dim(), n, [&](const std::vector<std::uint32_t>& t) {
            if (!out.ok) return;
            if (composite(m.ops, m.ops, m.dim(), to_masks(t))) out = {false, n, names(m.basis, t)};
        });
    return out;
}

AinfCheck check_ainf_morphism(const AinfMorphism& f, const AinfAlgebra& source, const AinfAlgebra& target,
                              std::size_t window)
{
    if (!f.check_typed(source, target).ok()) throw PreconditionError("A(infinity) morphism is not well typed");
    AinfCheck out;
    for (std::size_t n = 1; n <= window && out.ok; ++n)
        for_each_basis_tuple(source.dim(), n, [&](const std::vector<std::uint32_t>& t) {
            if (!out.ok) return;
            const auto a = to_masks(t);
            const Mask lhs = composite(f.maps, source.ops, source.dim(), a);
            const Mask rhs = composite_after(target.ops, target.dim(), f.maps, source.dim(), a);
            if (lhs != rhs) out = {false, n, names(source.basis, t)};
        });
    return out;
}

WordSum ainf_bar_differential(const AinfAlgebra& m, const Word& w)
{
    F2Accumulator<Word> acc;
    const std::size_t n = w.size();
    std::vector<Mask> a;
    for (auto x : w) a.push_back(Mask{1} << x);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 0; k + j <= n; ++k) {
            const Mask v = apply_op(m.ops, m.dim(), std::span<const Mask>(a.data() + k, j));
            for (Mask b = v; b; b &= b - 1) {
                Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
                out.push_back(static_cast<std::uint32_t>(std::countr_zero(b)));
                out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k + j), w.end());
                acc.toggle(std::move(out));
            }
        }
    return acc.finish();
}

AinfBar ainf_bar(const AinfAlgebra& m, std::size_t max_length)
{
    AinfBar b;
    b.max_length = max_length;
    for (std::size_t len = 0; len <= max_length; ++len) {
        if (len == 0) {
            b.words.push_back({});
            continue;
        }
        for_each_basis_tuple(m.dim(), len, [&](const std::vector<std::uint32_t>& t) { b.words.push_back(t); });
    }
    for (const auto& w : b.words) b.differential.push_back(ainf_bar_differential(m, w));
    auto d_of = [&](const WordSum& s) {
        F2Accumulator<Word> acc;
        for (const auto& w : s.terms()) acc.add(ainf_bar_differential(m, w));
        return acc.finish();
    };
    for (std::size_t i = 0; i < b.words.size(); ++i) {
        const auto& w = b.words[i];
        b.report.count_check(2);
        if (!d_of(b.differential[i]).is_zero()) b.report.add({"d_m d_m = 0", names(m.basis, w), ""});
        // Delta d = (d (x) 1 + 1 (x) d) Delta under deconcatenation
        F2Accumulator<std::pair<Word, Word>> left, right;
        for (const auto& v : b.differential[i].terms())
            for (std::size_t k = 0; k <= v.size(); ++k)
                left.toggle({Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)),
                             Word(v.begin() + static_cast<std::ptrdiff_t>(k), v.end())});
        for (std::size_t k = 0; k <= w.size(); ++k) {
            const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            const Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            const auto du = ainf_bar_differential(m, u), dv = ainf_bar_differential(m, v);
            for (const auto& x : du.terms()) right.toggle({x, v});
            for (const auto& y : dv.terms()) right.toggle({u, y});
        }
        if (!(left.finish() == right.finish())) b.report.add({"coderivation", names(m.basis, w), ""});
    }
    b.report.note("words of length <= " + std::to_string(max_length));
    return b;
}

std::string to_string(MorphismClass c)
{
    switch (c) {
    case MorphismClass::isomorphism: return "isomorphism";
    case MorphismClass::weak_equivalence: return "weak equivalence";
    case MorphismClass::neither: return "neither";
    }
    return "?";
}

namespace {

F2Matrix linear_map(const std::vector<Mask>& table, std::size_t rows, std::size_t cols)
{
    F2Matrix out(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        if (c < table.size())
            for (Mask v = table[c]; v; v &= v - 1) out.set(static_cast<std::size_t>(std::countr_zero(v)), c);
    return out;
}

QuotientSpace homology(const AinfAlgebra& m)
{
    const std::size_t n = m.dim();
    const F2Matrix d = m.ops.empty() ? F2Matrix(n, n) : linear_map(m.ops[0], n, n);
    const auto cycles = kernel(d);
    std::vector<F2Vector> boundaries;
    for (std::size_t c = 0; c < n; ++c) boundaries.push_back(d.column(c));
    return QuotientSpace(n, cycles, boundaries);
}

}  // namespace

Classification classify_morphism(const AinfMorphism& f, const AinfAlgebra& source, const AinfAlgebra& target)
{
    if (!f.check_typed(source, target).ok()) throw PreconditionError("A(infinity) morphism is not well typed");
    Classification out;
    const std::size_t n = source.dim(), np = target.dim();
    const F2Matrix f1 = f.maps.empty() ? F2Matrix(np, n) : linear_map(f.maps[0], np, n);
    const F2Matrix d = source.ops.empty() ? F2Matrix(n, n) : linear_map(source.ops[0], n, n);
    const F2Matrix dp = target.ops.empty() ? F2Matrix(np, np) : linear_map(target.ops[0], np, np);
    out.chain_map = f1 * d == dp * f1;
    if (!out.chain_map) {
        out.notes.push_back("f_1 is not a chain map");
        return out;
    }
    const bool iso = n == np && rank(f1) == n;
    const auto h = homology(source), hp = homology(target);
    bool weak = h.dimension() == hp.dimension();
    if (weak) {
        std::vector<F2Vector> cols;
        for (const auto& v : h.transversal()) cols.push_back(hp.coordinates(f1.apply(v)));
        weak = rank(cols) == h.dimension();
    }
    out.notes.push_back("homology dimensions " + std::to_string(h.dimension()) + " and " + std::to_string(hp.dimension()));
    if (iso && !weak) throw InconsistentComplex("invertible chain map that is not a quasi-isomorphism");
    if (source.minimal() && target.minimal() && weak && !iso)
        throw InconsistentComplex("weak equivalence of minimal structures that is not invertible");
    out.kind = iso ? MorphismClass::isomorphism : weak ? MorphismClass::weak_equivalence : MorphismClass::neither;
    if (source.minimal() && target.minimal() && weak) out.notes.push_back("minimal source and target: weak equivalence is an isomorphism");
    return out;
}

TwistV1 stasheff_to_twist(const GradedAlgebra& h, const AinfAlgebra& m)
{
    if (m.dim() != h.dim()) throw PreconditionError("module and algebra have different dimensions");
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (m.basis.degree(i) != h.degree(i)) throw PreconditionError("module and algebra have different degrees");
    if (!m.minimal()) throw PreconditionError("structure is not minimal (m_1 != 0)");
    const auto mu = cochain_to_table(HCochain::multiplication(h), h.dim(), 2);
    if (m.ops.size() < 2 || m.ops[1] != mu) throw PreconditionError("m_2 differs from the product of H");
    TwistV1 t;
    t.T = std::max<std::size_t>(m.max_arity(), 3);
    for (std::size_t i = 3; i <= t.T; ++i)
        t.m.push_back(i <= m.ops.size() && !m.ops[i - 1].empty() ? table_to_cochain(m.ops[i - 1], i, 2 - static_cast<int>(i))
                                                               : HCochain(i, 2 - static_cast<int>(i)));
    return t;
}

AinfAlgebra twist_to_stasheff(const GradedAlgebra& h, const TwistV1& m)
{
    AinfAlgebra out{h.basis(), {}};
    out.ops.push_back(zero_table(h.dim(), 1));
    out.ops.push_back(cochain_to_table(HCochain::multiplication(h), h.dim(), 2));
    for (std::size_t p = 3; p <= m.T; ++p) {
        const HCochain& c = p - 3 < m.m.size() ? m.m[p - 3] : HCochain();
        out.ops.push_back(cochain_to_table(c, h.dim(), p));
    }
    return out;
}

GaugeV1 morphism_to_gauge(const GradedAlgebra& h, const AinfMorphism& f)
{
    if (f.maps.empty()) throw PreconditionError("morphism has no f_1");
    for (std::size_t x = 0; x < h.dim(); ++x)
        if (f.maps[0][x] != (Mask{1} << x)) throw PreconditionError("f_1 is not the identity");
    GaugeV1 g;
    g.T = std::max<std::size_t>(f.max_arity(), 2);
    for (std::size_t i = 2; i <= g.T; ++i)
        g.g.push_back(i <= f.maps.size() && !f.maps[i - 1].empty() ? table_to_cochain(f.maps[i - 1], i, 1 - static_cast<int>(i))
                                                                  : HCochain(i, 1 - static_cast<int>(i)));
    return g;
}

AinfAlgebra transport(const AinfAlgebra& m, const AinfMorphism& f)
{
    if (f.maps.empty()) throw PreconditionError("morphism has no f_1");
    for (std::size_t x = 0; x < m.dim(); ++x)
        if (f.maps[0][x] != (Mask{1} << x)) throw PreconditionError("f_1 is not the identity");
    AinfAlgebra out{m.basis, {}};
    for (std::size_t n = 1; n <= m.max_arity(); ++n) {
        out.ops.push_back(zero_table(m.dim(), n));
        auto& table = out.ops.back();
        std::uint64_t row = 0;
        for_each_basis_tuple(m.dim(), n, [&](const std::vector<std::uint32_t>& t) {
            const auto a = to_masks(t);
            table[row++] = composite(f.maps, m.ops, m.dim(), a) ^ composite_after(out.ops, m.dim(), f.maps, m.dim(), a, true);
        });
    }
    return out;
}

AinfAlgebra random_deformation(const GradedAlgebra& h, std::size_t max_arity, std::mt19937_64& rng)
{
    AinfAlgebra out = twist_to_stasheff(h, TwistV1{std::max<std::size_t>(max_arity, 2), {}});
    out.ops.resize(std::max<std::size_t>(max_arity, 2));
    for (std::size_t i = 3; i <= max_arity; ++i)
        out.ops[i - 1] = cochain_to_table(CochainSpace(h, i, 2 - static_cast<int>(i)).random(rng), h.dim(), i);
    return out;
}

FormalityResult intrinsic_formality(HochschildComplex& c, std::size_t nmax)
{
    FormalityResult r;
    r.nmax = nmax;
    for (std::size_t n = 3; n <= nmax; ++n) {
        const auto d = c.cohomology(n, 2 - static_cast<int>(n)).dimension();
        r.dimensions.emplace_back(n, d);
        if (d) r.nonzero.push_back(n);
    }
    r.certified = r.nonzero.empty();
    return r;
}

Report verify_homology_model(const DgAlgebra& a, const AinfAlgebra& h, const AinfMorphism& f, std::size_t window)
{
    Report r;
    const auto target = ainf_from_dga(a);
    r.count_check(4);
    if (!h.minimal()) r.add({"minimal", {}, "m_1 != 0"});
    if (const auto c = check_ainf(h, window); !c.ok) r.add({"A(infinity) relations", c.witness, "arity " + std::to_string(*c.failing_arity)});
    if (const auto c = check_ainf_morphism(f, h, target, window); !c.ok)
        r.add({"morphism relations", c.witness, "arity " + std::to_string(*c.failing_arity)});
    const auto k = classify_morphism(f, h, target);
    if (k.kind == MorphismClass::neither) r.add({"weak equivalence", {}, "f_1 is not a quasi-isomorphism"});
    r.note("relations checked up to arity " + std::to_string(window));
    return r;
}

}  // namespace hgt
