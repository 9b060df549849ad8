#pragma once

// Homotopy G-algebras: a carrier interface, exhaustive axiom sweeps, the low
// dimensional identities, the commutator bracket and the B(infinity) bar bialgebra.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hgt/common.hpp"
#include "hgt/graded.hpp"
#include "hgt/hochschild.hpp"

namespace hgt {

/// A dga with brace operations. Elements are added with + and compared with ==;
/// letters are basis elements that the sweeps enumerate, each with a weight.
template <class S>
concept HgaCarrier = requires(const S& s, const typename S::Element& x, std::span<const typename S::Element> xs,
                              typename S::Letter l, std::size_t w) {
    { s.zero() } -> std::same_as<typename S::Element>;
    { s.d(x) } -> std::same_as<typename S::Element>;
    { s.mul(x, x) } -> std::same_as<typename S::Element>;
    { s.brace(x, xs) } -> std::same_as<typename S::Element>;
    { s.is_zero(x) } -> std::same_as<bool>;
    { s.letters(w) } -> std::same_as<std::vector<typename S::Letter>>;
    { s.letter(l) } -> std::same_as<typename S::Element>;
    { s.weight(l) } -> std::same_as<std::size_t>;
    { s.expand(x) } -> std::same_as<std::vector<typename S::Letter>>;
    { s.describe(l) } -> std::same_as<std::string>;
    { x + x } -> std::same_as<typename S::Element>;
    { x == x } -> std::same_as<bool>;
};

/// The Hochschild complex of a graded algebra with cup product, delta and braces.
/// Letters are elementary cochains e_{t -> o}; their weight is the arity.
class HochschildHga {
public:
    using Element = HCochain;
    using Letter = std::uint64_t;

    explicit HochschildHga(const GradedAlgebra& h) : h_(&h) {}
    const GradedAlgebra& algebra() const { return *h_; }

    Element zero() const { return HCochain(); }
    Element d(const Element& x) const { return delta(*h_, x); }
    Element mul(const Element& x, const Element& y) const { return cup(*h_, x, y); }
    Element brace(const Element& x, std::span<const Element> ys) const { return hgt::brace(*h_, x, ys); }
    bool is_zero(const Element& x) const { return x.is_zero(); }

    /// Elementary cochains of arity <= max_weight, by arity then row then output.
    std::vector<Letter> letters(std::size_t max_weight) const;
    Element letter(Letter l) const;
    std::size_t weight(Letter l) const { return static_cast<std::size_t>(l >> 58); }
    std::vector<Letter> expand(const Element& x) const;
    std::string describe(Letter l) const;

    /// E_{1,k}(l; ...) vanishes for k > brace_bound(l).
    std::size_t brace_bound(Letter l) const { return weight(l); }

    static Letter pack(std::size_t arity, std::uint64_t row, std::size_t output);

private:
    const GradedAlgebra* h_;
};

/// Explicit brace tables on a finite dga. E_{1,k} for k > max_brace is zero.
class TableHga {
public:
    using Element = F2Vector;
    using Letter = std::uint32_t;
    /// Key (a, b_1..b_k) of basis indices, k >= 1; absent keys are zero.
    using BraceTable = std::map<std::vector<std::uint32_t>, F2Vector>;

    TableHga(DgAlgebra a, std::size_t max_brace, BraceTable braces);
    const DgAlgebra& algebra() const { return a_; }
    std::size_t max_brace() const { return max_brace_; }
    const BraceTable& table() const { return braces_; }

    Element zero() const { return F2Vector(a_.dim()); }
    Element d(const Element& x) const { return a_.d(x); }
    Element mul(const Element& x, const Element& y) const { return a_.multiply(x, y); }
    Element brace(const Element& x, std::span<const Element> ys) const;
    bool is_zero(const Element& x) const { return x.is_zero(); }

    /// Every basis element; weights are zero so windows never cut.
    std::vector<Letter> letters(std::size_t) const;
    Element letter(Letter l) const { return a_.element(l); }
    std::size_t weight(Letter) const { return 0; }
    std::vector<Letter> expand(const Element& x) const;
    std::string describe(Letter l) const { return a_.basis().name(l); }

    /// Degree law deg E_{1,k}(a;b) = deg a + sum deg b_i - k on every table entry.
    Report check_degrees() const;

private:
    DgAlgebra a_;
    std::size_t max_brace_;
    BraceTable braces_;
};

static_assert(HgaCarrier<HochschildHga>);
static_assert(HgaCarrier<TableHga>);

struct SweepWindow {
    std::size_t max_brace = 3;   // K
    std::size_t max_weight = 5;  // bound on the total weight of the letters of one tuple
};

namespace detail {

template <class S>
struct LetterPool {
    std::vector<typename S::Letter> letters;
    std::vector<typename S::Element> elements;
    std::vector<std::size_t> weights;  // nondecreasing

    LetterPool(const S& s, std::size_t max_weight)
    {
        letters = s.letters(max_weight);
        std::stable_sort(letters.begin(), letters.end(),
                         [&](const auto& a, const auto& b) { return s.weight(a) < s.weight(b); });
        for (const auto& l : letters) {
            elements.push_back(s.letter(l));
            weights.push_back(s.weight(l));
        }
    }
};

// Calls fn(indices) for every tuple of `count` letters with total weight <= budget.
template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& weights, std::size_t count, std::size_t budget,
                    std::vector<std::size_t>& current, Fn&& fn)
{
    if (current.size() == count) {
        fn(current);
        return;
    }
    for (std::size_t i = 0; i < weights.size() && weights[i] <= budget; ++i) {
        current.push_back(i);
        for_each_tuple(weights, count, budget - weights[i], current, fn);
        current.pop_back();
    }
}

template <class S>
std::vector<std::string> witness(const S& s, const LetterPool<S>& pool, const std::vector<std::size_t>& idx)
{
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(s.describe(pool.letters[i]));
    return out;
}

template <class S>
typename S::Element brace_of(const S& s, const typename S::Element& a, std::vector<typename S::Element> bs)
{
    if (bs.empty()) return a;
    return s.brace(a, std::span<const typename S::Element>(bs));
}

// Largest k with E_{1,k}(l; ...) possibly nonzero.
template <class S>
std::size_t brace_bound(const S& s, const typename S::Letter& l)
{
    if constexpr (requires { s.brace_bound(l); })
        return s.brace_bound(l);
    else
        return std::numeric_limits<std::size_t>::max() / 4;
}

template <class E>
std::vector<E> slice(const std::vector<E>& v, std::size_t from, std::size_t to)
{
    return std::vector<E>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace detail

/// Both sides of the derivation condition for E_{1,k}.
template <HgaCarrier S>
std::pair<typename S::Element, typename S::Element> derivation_sides(const S& s, const typename S::Element& a,
                                                                     const std::vector<typename S::Element>& b)
{
    using detail::brace_of;
    const std::size_t k = b.size();
    auto lhs = s.d(brace_of(s, a, b)) + brace_of(s, s.d(a), b);
    for (std::size_t i = 0; i < k; ++i) {
        auto bi = b;
        bi[i] = s.d(b[i]);
        lhs = lhs + brace_of(s, a, bi);
    }
    auto rhs = s.mul(b.front(), brace_of(s, a, detail::slice(b, 1, k))) +
               s.mul(brace_of(s, a, detail::slice(b, 0, k - 1)), b.back());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        std::vector<typename S::Element> bi = detail::slice(b, 0, i);
        bi.push_back(s.mul(b[i], b[i + 1]));
        for (std::size_t j = i + 2; j < k; ++j) bi.push_back(b[j]);
        rhs = rhs + brace_of(s, a, bi);
    }
    return {lhs, rhs};
}

/// Both sides of the condition for E_{1,k} on a product a1.a2.
template <HgaCarrier S>
std::pair<typename S::Element, typename S::Element> product_sides(const S& s, const typename S::Element& a1,
                                                                  const typename S::Element& a2,
                                                                  const std::vector<typename S::Element>& b)
{
    using detail::brace_of;
    const std::size_t k = b.size();
    auto lhs = brace_of(s, s.mul(a1, a2), b);
    auto rhs = s.mul(a1, brace_of(s, a2, b)) + s.mul(brace_of(s, a1, b), a2);
    for (std::size_t p = 1; p < k; ++p)
        rhs = rhs + s.mul(brace_of(s, a1, detail::slice(b, 0, p)), brace_of(s, a2, detail::slice(b, p, k)));
    return {lhs, rhs};
}

/// Both sides of the associativity condition for nested braces, with the right side
/// summed over the interval choices 0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n.
template <HgaCarrier S>
std::pair<typename S::Element, typename S::Element> nesting_sides(const S& s, const typename S::Element& a,
                                                                  const std::vector<typename S::Element>& b,
                                                                  const std::vector<typename S::Element>& c)
{
    using Element = typename S::Element;
    const std::size_t m = b.size(), n = c.size();
    auto lhs = detail::brace_of(s, detail::brace_of(s, a, b), c);
    Element rhs = s.zero();
    std::vector<Element> args;
    // Chooses the interval of b_t starting at or after position `from` of c.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t from) {
        if (t == m) {
            const auto mark = args.size();
            for (std::size_t p = from; p < n; ++p) args.push_back(c[p]);
            rhs = rhs + detail::brace_of(s, a, args);
            args.resize(mark);
            return;
        }
        for (std::size_t i = from; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j) {
                const auto mark = args.size();
                for (std::size_t p = from; p < i; ++p) args.push_back(c[p]);
                args.push_back(detail::brace_of(s, b[t], detail::slice(c, i, j)));
                rec(t + 1, j);
                args.resize(mark);
            }
    };
    rec(0, 0);
    return {lhs, rhs};
}

/// Exhaustive check of the four axiom families on letter tuples within the window.
template <HgaCarrier S>
Report verify_axioms(const S& s, SweepWindow w)
{
    Report r;
    detail::LetterPool<S> pool(s, w.max_weight);
    using Element = typename S::Element;
    std::vector<std::size_t> cur;
    auto pick = [&](const std::vector<std::size_t>& idx, std::size_t from, std::size_t to) {
        std::vector<Element> out;
        for (std::size_t i = from; i < to; ++i) out.push_back(pool.elements[idx[i]]);
        return out;
    };

    for (std::size_t i = 0; i < pool.letters.size(); ++i) {
        r.count_check();
        if (!(detail::brace_of(s, pool.elements[i], {}) == pool.elements[i]))
            r.add({"E10", {s.describe(pool.letters[i])}, "E_{1,0} is not the identity"});
    }
    // Tuples on which both sides vanish because every brace has too many arguments.
    std::size_t structural = 0;
    auto bound = [&](std::size_t i) { return detail::brace_bound(s, pool.letters[i]); };
    for (std::size_t k = 1; k <= w.max_brace; ++k) {
        detail::for_each_tuple(pool.weights, k + 1, w.max_weight, cur, [&](const std::vector<std::size_t>& idx) {
            r.count_check();
            if (bound(idx[0]) + 1 < k) {
                ++structural;
                return;
            }
            auto [lhs, rhs] = derivation_sides(s, pool.elements[idx[0]], pick(idx, 1, k + 1));
            if (!(lhs == rhs)) r.add({"E1n", detail::witness(s, pool, idx), "k=" + std::to_string(k)});
        });
        detail::for_each_tuple(pool.weights, k + 2, w.max_weight, cur, [&](const std::vector<std::size_t>& idx) {
            r.count_check();
            if (bound(idx[0]) + bound(idx[1]) < k) {
                ++structural;
                return;
            }
            auto [lhs, rhs] = product_sides(s, pool.elements[idx[0]], pool.elements[idx[1]], pick(idx, 2, k + 2));
            if (!(lhs == rhs)) r.add({"E2n", detail::witness(s, pool, idx), "k=" + std::to_string(k)});
        });
    }
    for (std::size_t m = 1; m < w.max_brace; ++m)
        for (std::size_t n = 1; m + n <= w.max_brace; ++n)
            detail::for_each_tuple(pool.weights, 1 + m + n, w.max_weight, cur, [&](const std::vector<std::size_t>& idx) {
                r.count_check();
                if (bound(idx[0]) < m) {
                    ++structural;
                    return;
                }
                auto [lhs, rhs] = nesting_sides(s, pool.elements[idx[0]], pick(idx, 1, 1 + m), pick(idx, 1 + m, 1 + m + n));
                if (!(lhs == rhs))
                    r.add({"E1assoc", detail::witness(s, pool, idx), "m=" + std::to_string(m) + " n=" + std::to_string(n)});
            });
    if (structural) r.note(std::to_string(structural) + " tuples vanish on both sides by arity");
    r.note("brace arity <= " + std::to_string(w.max_brace) + ", total weight <= " + std::to_string(w.max_weight));
    return r;
}

/// The four low dimensional identities written out directly with cup_1 = E_{1,1}:
/// the cup_1 homotopy, the left Hirsch formula, the right Hirsch formula up to E_{1,2},
/// and the associator of cup_1.
template <HgaCarrier S>
Report verify_low_dim(const S& s, std::size_t max_weight)
{
    using Element = typename S::Element;
    Report r;
    detail::LetterPool<S> pool(s, max_weight);
    auto c1 = [&](const Element& x, const Element& y) { return s.brace(x, std::span<const Element>(&y, 1)); };
    auto e12 = [&](const Element& x, const Element& y, const Element& z) {
        const Element yz[2] = {y, z};
        return s.brace(x, std::span<const Element>(yz, 2));
    };
    std::vector<std::size_t> cur;
    detail::for_each_tuple(pool.weights, 2, max_weight, cur, [&](const std::vector<std::size_t>& idx) {
        const auto& a = pool.elements[idx[0]];
        const auto& b = pool.elements[idx[1]];
        r.count_check();
        if (!(s.d(c1(a, b)) + c1(s.d(a), b) + c1(a, s.d(b)) == s.mul(a, b) + s.mul(b, a)))
            r.add({"cup1 homotopy", detail::witness(s, pool, idx), ""});
    });
    detail::for_each_tuple(pool.weights, 3, max_weight, cur, [&](const std::vector<std::size_t>& idx) {
        const auto& a = pool.elements[idx[0]];
        const auto& b = pool.elements[idx[1]];
        const auto& c = pool.elements[idx[2]];
        r.count_check(3);
        if (!s.is_zero(c1(s.mul(a, b), c) + s.mul(a, c1(b, c)) + s.mul(c1(a, c), b)))
            r.add({"left Hirsch", detail::witness(s, pool, idx), ""});
        const auto lhs = s.d(e12(a, b, c)) + e12(s.d(a), b, c) + e12(a, s.d(b), c) + e12(a, b, s.d(c));
        if (!(lhs == c1(a, s.mul(b, c)) + s.mul(c1(a, b), c) + s.mul(b, c1(a, c))))
            r.add({"right Hirsch", detail::witness(s, pool, idx), ""});
        if (!(c1(c1(a, b), c) + c1(a, c1(b, c)) == e12(a, b, c) + e12(a, c, b)))
            r.add({"cup1 associator", detail::witness(s, pool, idx), ""});
    });
    r.note("total weight <= " + std::to_string(max_weight));
    return r;
}

/// [a,b] = a cup_1 b + b cup_1 a.
template <HgaCarrier S>
typename S::Element bracket(const S& s, const typename S::Element& a, const typename S::Element& b)
{
    using Element = typename S::Element;
    return s.brace(a, std::span<const Element>(&b, 1)) + s.brace(b, std::span<const Element>(&a, 1));
}

/// Pre-Jacobi identity, Jacobi identity, chain map property of the bracket, and the
/// biderivation property up to the E_{1,2} homotopy.
template <HgaCarrier S>
Report verify_lie(const S& s, std::size_t max_weight)
{
    using Element = typename S::Element;
    Report r;
    detail::LetterPool<S> pool(s, max_weight);
    auto c1 = [&](const Element& x, const Element& y) { return s.brace(x, std::span<const Element>(&y, 1)); };
    auto br = [&](const Element& x, const Element& y) { return bracket(s, x, y); };
    std::vector<std::size_t> cur;
    detail::for_each_tuple(pool.weights, 2, max_weight, cur, [&](const std::vector<std::size_t>& idx) {
        const auto& a = pool.elements[idx[0]];
        const auto& b = pool.elements[idx[1]];
        r.count_check(2);
        if (!s.is_zero(br(a, a))) r.add({"alternating", detail::witness(s, pool, idx), ""});
        if (!(s.d(br(a, b)) == br(s.d(a), b) + br(a, s.d(b)))) r.add({"chain map", detail::witness(s, pool, idx), ""});
    });
    detail::for_each_tuple(pool.weights, 3, max_weight, cur, [&](const std::vector<std::size_t>& idx) {
        const auto& a = pool.elements[idx[0]];
        const auto& b = pool.elements[idx[1]];
        const auto& c = pool.elements[idx[2]];
        r.count_check(3);
        if (!(c1(a, c1(b, c)) + c1(c1(a, b), c) == c1(a, c1(c, b)) + c1(c1(a, c), b)))
            r.add({"pre-Jacobi", detail::witness(s, pool, idx), ""});
        if (!s.is_zero(br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)))
            r.add({"Jacobi", detail::witness(s, pool, idx), ""});
        const Element bc[2] = {b, c};
        const Element dbc[2] = {s.d(b), c};
        const Element bdc[2] = {b, s.d(c)};
        auto e = [&](const Element& x, const Element* ys) { return s.brace(x, std::span<const Element>(ys, 2)); };
        const auto homotopy = s.d(e(a, bc)) + e(s.d(a), bc) + e(a, dbc) + e(a, bdc);
        if (!(br(a, s.mul(b, c)) + s.mul(br(a, b), c) + s.mul(b, br(a, c)) == homotopy))
            r.add({"biderivation up to homotopy", detail::witness(s, pool, idx), ""});
    });
    r.note("total weight <= " + std::to_string(max_weight));
    return r;
}

/// On Hochschild cohomology the bracket of cocycles is a cocycle and the Poisson
/// identity holds exactly, checked on basis classes of HH^{m,n} for m <= max_arity and
/// the given internal degrees.
Report verify_lie_on_cohomology(HochschildComplex& c, std::size_t max_arity, std::span<const int> degrees);

/// The bar bialgebra B(A) = (T^c(s^{-1}A), d_B, deconcatenation, mu_E) of an hGa,
/// evaluated on words of letters.
template <HgaCarrier S>
class BarBialgebra {
public:
    using Letter = typename S::Letter;
    using Element = typename S::Element;
    using BWord = std::vector<Letter>;
    using BSum = F2Combination<BWord>;

    explicit BarBialgebra(const S& s) : s_(&s) {}
    const S& carrier() const { return *s_; }

    Element element_of(const BWord& w, std::size_t i) const { return s_->letter(w[i]); }

    /// E([a_1..a_p] (x) [b_1..b_q]): b for (0,1), a for (1,0), E_{1,q}(a;b) for p = 1,
    /// zero otherwise.
    Element E(const BWord& u, const BWord& v) const
    {
        if (u.empty()) return v.size() == 1 ? s_->letter(v[0]) : s_->zero();
        if (u.size() > 1) return s_->zero();
        const Element a = s_->letter(u[0]);
        if (v.empty()) return a;
        std::vector<Element> bs;
        for (auto l : v) bs.push_back(s_->letter(l));
        return s_->brace(a, std::span<const Element>(bs));
    }

    /// Bar differential: internal differentials plus adjacent products.
    BSum d(const BWord& w) const
    {
        F2Accumulator<BWord> acc;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (auto l : s_->expand(s_->d(s_->letter(w[i])))) {
                BWord v = w;
                v[i] = l;
                acc.toggle(std::move(v));
            }
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            for (auto l : s_->expand(s_->mul(s_->letter(w[i]), s_->letter(w[i + 1])))) {
                BWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                v.push_back(l);
                v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
                acc.toggle(std::move(v));
            }
        return acc.finish();
    }
    BSum d(const BSum& x) const
    {
        F2Accumulator<BWord> acc;
        for (const auto& w : x.terms()) acc.add(d(w));
        return acc.finish();
    }

    /// mu_E(u (x) v): sum over factorisations into factors that are either a single
    /// b_j, or a_i together with a consecutive (possibly empty) block of b's.
    BSum mu(const BWord& u, const BWord& v) const
    {
        F2Accumulator<BWord> acc;
        std::vector<std::vector<Letter>> factors;
        mu_rec(u, v, 0, 0, factors, acc);
        return acc.finish();
    }
    BSum mu(const BSum& x, const BSum& y) const
    {
        F2Accumulator<BWord> acc;
        for (const auto& u : x.terms())
            for (const auto& v : y.terms()) acc.add(mu(u, v));
        return acc.finish();
    }

    std::vector<std::pair<BWord, BWord>> deconcatenate(const BWord& w) const
    {
        std::vector<std::pair<BWord, BWord>> out;
        for (std::size_t k = 0; k <= w.size(); ++k)
            out.emplace_back(BWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                             BWord(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
        return out;
    }

    std::string describe(const BWord& w) const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + s_->describe(w[i]);
        return out + "]";
    }

private:
    // Each factor expands to a sum of letters; words multiply out.
    void mu_rec(const BWord& u, const BWord& v, std::size_t i, std::size_t j, std::vector<std::vector<Letter>>& factors,
                F2Accumulator<BWord>& acc) const
    {
        if (i == u.size() && j == v.size()) {
            BWord w;
            expand_rec(factors, 0, w, acc);
            return;
        }
        if (j < v.size()) {
            factors.push_back({v[j]});
            mu_rec(u, v, i, j + 1, factors, acc);
            factors.pop_back();
        }
        if (i < u.size()) {
            for (std::size_t q = 0; j + q <= v.size(); ++q) {
                auto letters = s_->expand(E(BWord{u[i]}, BWord(v.begin() + static_cast<std::ptrdiff_t>(j),
                                                                v.begin() + static_cast<std::ptrdiff_t>(j + q))));
                if (letters.empty()) continue;
                factors.push_back(std::move(letters));
                mu_rec(u, v, i + 1, j + q, factors, acc);
                factors.pop_back();
            }
        }
    }
    void expand_rec(const std::vector<std::vector<Letter>>& factors, std::size_t pos, BWord& w,
                    F2Accumulator<BWord>& acc) const
    {
        if (pos == factors.size()) {
            acc.toggle(w);
            return;
        }
        for (const auto& l : factors[pos]) {
            w.push_back(l);
            expand_rec(factors, pos + 1, w, acc);
            w.pop_back();
        }
    }

    const S* s_;
};

struct BarWindow {
    std::size_t max_length = 4;  // L, bound on the total length of the input words
    std::size_t max_weight = 3;  // bound on the total letter weight of the input words
};

/// Checks within the window: (a) E is a twisting cochain, (b) mu_E is a chain map and a
/// coalgebra map, (c) associativity, both E(mu_E (x) 1) = E(1 (x) mu_E) and for mu_E
/// itself, (d) the empty word is a two-sided unit.
template <HgaCarrier S>
Report check_bar_bialgebra(const BarBialgebra<S>& b, BarWindow w)
{
    using BWord = typename BarBialgebra<S>::BWord;
    using BSum = typename BarBialgebra<S>::BSum;
    using Element = typename S::Element;
    const S& s = b.carrier();
    Report r;
    detail::LetterPool<S> pool(s, w.max_weight);

    // All words of length <= L with weight <= max_weight, with their weights.
    std::vector<std::pair<BWord, std::size_t>> words;
    std::vector<std::size_t> cur;
    for (std::size_t len = 0; len <= w.max_length; ++len)
        detail::for_each_tuple(pool.weights, len, w.max_weight, cur, [&](const std::vector<std::size_t>& idx) {
            BWord word;
            std::size_t wt = 0;
            for (auto i : idx) {
                word.push_back(pool.letters[i]);
                wt += pool.weights[i];
            }
            words.emplace_back(std::move(word), wt);
        });

    auto E_of_sums = [&](const BSum& x, const BSum& y) {
        Element out = s.zero();
        for (const auto& u : x.terms())
            for (const auto& v : y.terms()) out = out + b.E(u, v);
        return out;
    };

    for (const auto& [u, wu] : words)
        for (const auto& [v, wv] : words) {
            if (u.size() + v.size() > w.max_length || wu + wv > w.max_weight) continue;
            const auto wit = std::vector<std::string>{b.describe(u), b.describe(v)};
            // (a) dE + E(d_B (x) 1 + 1 (x) d_B) = E cup E
            r.count_check();
            Element lhs = s.d(b.E(u, v)) + E_of_sums(b.d(u), BSum(v)) + E_of_sums(BSum(u), b.d(v));
            Element rhs = s.zero();
            for (const auto& [u1, u2] : b.deconcatenate(u))
                for (const auto& [v1, v2] : b.deconcatenate(v)) rhs = rhs + s.mul(b.E(u1, v1), b.E(u2, v2));
            if (!(lhs == rhs)) r.add({"E twisting cochain", wit, ""});

            const BSum m = b.mu(u, v);
            // (b) chain map
            r.count_check(2);
            BSum dm = b.d(m);
            BSum md = b.mu(b.d(u), BSum(v)) + b.mu(BSum(u), b.d(v));
            if (!(dm == md)) r.add({"mu_E chain map", wit, ""});
            // (b) coalgebra map: Delta mu = (mu (x) mu)(1 (x) T (x) 1)(Delta (x) Delta)
            F2Accumulator<std::pair<BWord, BWord>> left, right;
            for (const auto& t : m.terms())
                for (auto& p : b.deconcatenate(t)) left.toggle(std::move(p));
            for (const auto& [u1, u2] : b.deconcatenate(u))
                for (const auto& [v1, v2] : b.deconcatenate(v)) {
                    const auto m1 = b.mu(u1, v1), m2 = b.mu(u2, v2);
                    for (const auto& x : m1.terms())
                        for (const auto& y : m2.terms()) right.toggle({x, y});
                }
            if (!(left.finish() == right.finish())) r.add({"mu_E coalgebra map", wit, ""});
        }

    for (const auto& [u, wu] : words) {
        r.count_check();
        if (!(b.mu(u, BWord{}) == BSum(u)) || !(b.mu(BWord{}, u) == BSum(u)))
            r.add({"unit", {b.describe(u)}, ""});
    }

    for (const auto& [u, wu] : words)
        for (const auto& [v, wv] : words) {
            if (u.size() + v.size() > w.max_length || wu + wv > w.max_weight) continue;
            for (const auto& [x, wx] : words) {
                if (u.size() + v.size() + x.size() > w.max_length || wu + wv + wx > w.max_weight) continue;
                const auto wit = std::vector<std::string>{b.describe(u), b.describe(v), b.describe(x)};
                r.count_check(2);
                const BSum uv = b.mu(u, v), vx = b.mu(v, x);
                if (!(E_of_sums(uv, BSum(x)) == E_of_sums(BSum(u), vx))) r.add({"E associativity", wit, ""});
                if (!(b.mu(uv, BSum(x)) == b.mu(BSum(u), vx))) r.add({"mu_E associativity", wit, ""});
            }
        }
    r.note("words of total length <= " + std::to_string(w.max_length) + ", total weight <= " +
           std::to_string(w.max_weight));
    return r;
}

}  // namespace hgt
