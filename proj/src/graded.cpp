#include "hgt/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgt {

GradedBasis::GradedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements))
{
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i].name, i).second)
            throw std::invalid_argument("duplicate basis element '" + elements_[i].name + "'");
    }
}

std::optional<std::size_t> GradedBasis::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedBasis::index_of(const std::string& name) const
{
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown basis element '" + name + "'");
}

std::optional<int> GradedBasis::degree_of(const F2Vector& v) const
{
    std::optional<int> deg;
    for (auto i : v.support()) {
        if (deg && *deg != degree(i)) return std::nullopt;
        deg = degree(i);
    }
    return deg;
}

std::string GradedBasis::format(const F2Vector& v) const
{
    if (v.is_zero()) return "0";
    std::string s;
    for (auto i : v.support()) {
        if (!s.empty()) s += "+";
        s += name(i);
    }
    return s;
}

DgAlgebra::DgAlgebra(GradedBasis basis, std::size_t unit, std::vector<std::vector<F2Vector>> mult,
                     std::vector<F2Vector> diff)
    : basis_(std::move(basis)), unit_(unit), mult_(std::move(mult)), diff_(std::move(diff))
{
    const auto n = basis_.size();
    if (unit_ >= n) throw std::invalid_argument("DgAlgebra: unit index out of range");
    if (mult_.size() != n || diff_.size() != n) throw std::invalid_argument("DgAlgebra: table size");
    for (std::size_t i = 0; i < n; ++i) {
        if (mult_[i].size() != n || diff_[i].size() != n)
            throw std::invalid_argument("DgAlgebra: table size");
        for (const auto& v : mult_[i])
            if (v.size() != n) throw std::invalid_argument("DgAlgebra: table size");
    }
}

DgAlgebra::DgAlgebra(GradedBasis basis, std::size_t unit, std::vector<std::vector<F2Vector>> mult)
    : DgAlgebra(basis, unit, std::move(mult), std::vector<F2Vector>(basis.size(), F2Vector(basis.size())))
{
}

bool DgAlgebra::has_zero_differential() const
{
    return std::all_of(diff_.begin(), diff_.end(), [](const F2Vector& v) { return v.is_zero(); });
}

F2Vector DgAlgebra::multiply(const F2Vector& x, const F2Vector& y) const
{
    F2Vector out(dim());
    const auto ys = y.support();
    for (auto i : x.support())
        for (auto j : ys) out ^= mult_[i][j];
    return out;
}

F2Vector DgAlgebra::d(const F2Vector& x) const
{
    F2Vector out(dim());
    for (auto i : x.support()) out ^= diff_[i];
    return out;
}

DgCoalgebra::DgCoalgebra(GradedBasis basis, F2Vector counit, std::vector<F2Vector> comult,
                         std::vector<F2Vector> diff)
    : basis_(std::move(basis)), counit_(std::move(counit)), comult_(std::move(comult)), diff_(std::move(diff))
{
    const auto n = basis_.size();
    if (counit_.size() != n || comult_.size() != n || diff_.size() != n)
        throw std::invalid_argument("DgCoalgebra: table size");
    for (std::size_t i = 0; i < n; ++i)
        if (comult_[i].size() != n * n || diff_[i].size() != n)
            throw std::invalid_argument("DgCoalgebra: table size");
}

std::vector<std::pair<std::size_t, std::size_t>> DgCoalgebra::coproduct_terms(std::size_t i) const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = dim();
    for (auto k : comult_[i].support()) out.emplace_back(k / n, k % n);
    return out;
}

F2Vector DgCoalgebra::d(const F2Vector& x) const
{
    F2Vector out(dim());
    for (auto i : x.support()) out ^= diff_[i];
    return out;
}

std::optional<std::size_t> DgCoalgebra::coaugmentation() const
{
    if (counit_.popcount() != 1) return std::nullopt;
    const auto one = counit_.first_set();
    if (basis_.degree(one) != 0 || !diff_[one].is_zero()) return std::nullopt;
    if (comult_[one] != F2Vector::unit(dim() * dim(), one * dim() + one)) return std::nullopt;
    return one;
}

bool DgCoalgebra::is_connected() const
{
    const auto one = coaugmentation();
    if (!one) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (i != *one && basis_.degree(i) <= 0) return false;
    return true;
}

bool DgCoalgebra::is_reduced(int n) const
{
    if (!is_connected()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_.degree(i) >= 1 && basis_.degree(i) <= n) return false;
    return true;
}

bool is_connected(const DgAlgebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const int deg = a.basis().degree(i);
        if (deg < 0 || (deg == 0 && i != a.unit())) return false;
    }
    return a.basis().degree(a.unit()) == 0;
}

bool is_reduced(const DgAlgebra& a, int n)
{
    if (!is_connected(a)) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis().degree(i) >= 1 && a.basis().degree(i) <= n) return false;
    return true;
}

namespace {

std::vector<std::string> names(const GradedBasis& b, std::initializer_list<std::size_t> idx)
{
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(b.name(i));
    return out;
}

bool degree_matches(const GradedBasis& b, const F2Vector& v, int expected)
{
    for (auto i : v.support())
        if (b.degree(i) != expected) return false;
    return true;
}

}  // namespace

Report validate_dga(const DgAlgebra& a)
{
    Report r;
    const auto& b = a.basis();
    const auto n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        r.count_check();
        if (!degree_matches(b, a.differential(i), b.degree(i) + 1))
            r.add({"degree", names(b, {i}), "d raises degree by 1, got " + b.format(a.differential(i))});
        if (!a.d(a.differential(i)).is_zero())
            r.add({"dd", names(b, {i}), "dd = " + b.format(a.d(a.differential(i)))});
        for (std::size_t j = 0; j < n; ++j) {
            r.count_check();
            const auto& xy = a.product(i, j);
            if (!degree_matches(b, xy, b.degree(i) + b.degree(j)))
                r.add({"degree", names(b, {i, j}), "product " + b.format(xy) + " has the wrong degree"});
            const auto lhs = a.d(xy);
            const auto rhs = a.multiply(a.differential(i), a.element(j)) + a.multiply(a.element(i), a.differential(j));
            if (lhs != rhs)
                r.add({"leibniz", names(b, {i, j}), "d(xy) = " + b.format(lhs) + ", dx.y + x.dy = " + b.format(rhs)});
            for (std::size_t k = 0; k < n; ++k) {
                r.count_check();
                const auto left = a.multiply(xy, a.element(k));
                const auto right = a.multiply(a.element(i), a.product(j, k));
                if (left != right)
                    r.add({"associativity", names(b, {i, j, k}),
                           "(xy)z = " + b.format(left) + ", x(yz) = " + b.format(right)});
            }
        }
        r.count_check();
        if (a.product(a.unit(), i) != a.element(i) || a.product(i, a.unit()) != a.element(i))
            r.add({"unit", names(b, {i}), "1.x = " + b.format(a.product(a.unit(), i)) +
                                              ", x.1 = " + b.format(a.product(i, a.unit()))});
    }
    return r;
}

Report validate_dgc(const DgCoalgebra& c)
{
    Report r;
    const auto& b = c.basis();
    const auto n = c.dim();
    auto tensor_format = [&](const F2Vector& t) {
        if (t.is_zero()) return std::string("0");
        std::string s;
        for (auto k : t.support()) {
            if (!s.empty()) s += "+";
            s += b.name(k / n) + "|" + b.name(k % n);
        }
        return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
        r.count_check(5);
        if (!degree_matches(b, c.differential(i), b.degree(i) + 1))
            r.add({"degree", names(b, {i}), "d raises degree by 1, got " + b.format(c.differential(i))});
        for (auto [x, y] : c.coproduct_terms(i))
            if (b.degree(x) + b.degree(y) != b.degree(i))
                r.add({"degree", {b.name(i), b.name(x), b.name(y)}, "coproduct term has the wrong degree"});
        if (!c.d(c.differential(i)).is_zero())
            r.add({"dd", names(b, {i}), "dd = " + b.format(c.d(c.differential(i)))});

        // Delta d = (d (x) 1 + 1 (x) d) Delta
        F2Vector lhs(n * n);
        for (auto k : c.differential(i).support()) lhs ^= c.coproduct(k);
        F2Vector rhs(n * n);
        for (auto [x, y] : c.coproduct_terms(i)) {
            for (auto dx : c.differential(x).support()) rhs.flip(dx * n + y);
            for (auto dy : c.differential(y).support()) rhs.flip(x * n + dy);
        }
        if (lhs != rhs)
            r.add({"coderivation", names(b, {i}), "Delta d = " + tensor_format(lhs) + ", (d1+1d)Delta = " + tensor_format(rhs)});

        // (Delta (x) 1) Delta = (1 (x) Delta) Delta, as vectors on triples
        F2Vector left(n * n * n), right(n * n * n);
        for (auto [x, y] : c.coproduct_terms(i)) {
            for (auto [u, v] : c.coproduct_terms(x)) left.flip((u * n + v) * n + y);
            for (auto [u, v] : c.coproduct_terms(y)) right.flip((x * n + u) * n + v);
        }
        if (left != right) r.add({"coassociativity", names(b, {i}), ""});

        F2Vector eps_left(n), eps_right(n);
        for (auto [x, y] : c.coproduct_terms(i)) {
            if (c.counit().get(x)) eps_left.flip(y);
            if (c.counit().get(y)) eps_right.flip(x);
        }
        const auto e = F2Vector::unit(n, i);
        if (eps_left != e || eps_right != e)
            r.add({"counit", names(b, {i}),
                   "(eps 1)Delta = " + b.format(eps_left) + ", (1 eps)Delta = " + b.format(eps_right)});
    }
    for (auto k : c.counit().support())
        if (b.degree(k) != 0) r.add({"degree", names(b, {k}), "counit is nonzero off degree 0"});
    return r;
}

std::string format_word(const GradedBasis& basis, const Word& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += basis.name(w[i]);
    }
    return s + "]";
}

namespace {

std::vector<Word> all_words(const std::vector<std::size_t>& letters, std::size_t max_length)
{
    std::vector<Word> words{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t end = words.size();
        for (std::size_t k = begin; k < end; ++k)
            for (auto l : letters) {
                Word w = words[k];
                w.push_back(static_cast<std::uint32_t>(l));
                words.push_back(std::move(w));
            }
        begin = end;
    }
    return words;
}

std::optional<std::size_t> find_word(const std::vector<Word>& words, const Word& w)
{
    auto less = [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    auto it = std::lower_bound(words.begin(), words.end(), w, less);
    if (it == words.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words.begin());
}

}  // namespace

std::optional<std::size_t> TruncatedBar::find(const Word& w) const { return find_word(words, w); }
std::optional<std::size_t> TruncatedCobar::find(const Word& w) const { return find_word(words, w); }

WordSum bar_differential(const DgAlgebra& a, const Word& w)
{
    F2Accumulator<Word> acc;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (auto k : a.differential(w[i]).support()) {
            Word v = w;
            v[i] = static_cast<std::uint32_t>(k);
            acc.toggle(std::move(v));
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        for (auto k : a.product(w[i], w[i + 1]).support()) {
            Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            v.push_back(static_cast<std::uint32_t>(k));
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
            acc.toggle(std::move(v));
        }
    }
    return acc.finish();
}

TruncatedBar bar(const DgAlgebra& a, std::size_t max_length, BarMode mode)
{
    TruncatedBar out;
    out.max_length = max_length;
    if (mode == BarMode::reduced) {
        if (!is_reduced(a, 1))
            throw PreconditionError("bar: algebra is not connected and 1-reduced; use the relaxed mode");
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a.basis().degree(i) > 0) out.letters.push_back(i);
    } else {
        for (std::size_t i = 0; i < a.dim(); ++i) out.letters.push_back(i);
    }
    out.words = all_words(out.letters, max_length);
    for (const auto& w : out.words) {
        int deg = 0;
        for (auto l : w) deg += a.basis().degree(l) - 1;
        out.degrees.push_back(deg);
        out.differential.push_back(bar_differential(a, w));
    }
    return out;
}

DgCoalgebra TruncatedBar::coalgebra(const GradedBasis& algebra_basis) const
{
    const auto n = words.size();
    std::vector<BasisElement> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back({format_word(algebra_basis, words[i]), degrees[i]});
    F2Vector counit(n);
    counit.set(0);
    std::vector<F2Vector> comult, diff;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& w = words[i];
        F2Vector delta(n * n);
        for (std::size_t k = 0; k <= w.size(); ++k) {
            const auto l = *find(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
            const auto r = *find(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
            delta.flip(l * n + r);
        }
        comult.push_back(std::move(delta));
        F2Vector dv(n);
        for (const auto& t : differential[i].terms()) {
            auto j = find(t);
            if (!j) throw std::logic_error("bar differential leaves the letter set");
            dv.flip(*j);
        }
        diff.push_back(std::move(dv));
    }
    return DgCoalgebra(GradedBasis(std::move(elems)), std::move(counit), std::move(comult), std::move(diff));
}

WordSum cobar_differential(const DgCoalgebra& c, const Word& w)
{
    const auto one = c.coaugmentation();
    F2Accumulator<Word> acc;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto splice = [&](std::initializer_list<std::size_t> mid) {
            Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            for (auto m : mid) v.push_back(static_cast<std::uint32_t>(m));
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
            acc.toggle(std::move(v));
        };
        for (auto k : c.differential(w[i]).support())
            if (!one || k != *one) splice({k});
        // Reduced coproduct: drop the terms with the coaugmentation on either side.
        for (auto [x, y] : c.coproduct_terms(w[i])) {
            if (one && (x == *one || y == *one)) continue;
            splice({x, y});
        }
    }
    return acc.finish();
}

TruncatedCobar cobar(const DgCoalgebra& c, std::size_t max_length, CobarMode mode)
{
    if (mode == CobarMode::connected && !c.is_connected())
        throw PreconditionError("cobar: coalgebra is not connected");
    const auto one = c.coaugmentation();
    if (!one) throw PreconditionError("cobar: coalgebra has no coaugmentation");
    TruncatedCobar out;
    out.max_length = max_length;
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (i != *one) out.letters.push_back(i);
    out.words = all_words(out.letters, max_length);
    for (const auto& w : out.words) {
        int deg = 0;
        for (auto l : w) deg += c.basis().degree(l) + 1;
        out.degrees.push_back(deg);
        auto dw = cobar_differential(c, w);
        for (const auto& t : dw.terms())
            if (t.size() > max_length) ++out.overflow_terms;
        out.differential.push_back(std::move(dw));
    }
    return out;
}

DgAlgebra TruncatedCobar::algebra(const GradedBasis& coalgebra_basis) const
{
    const auto n = words.size();
    std::vector<BasisElement> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back({format_word(coalgebra_basis, words[i]), degrees[i]});
    std::vector<std::vector<F2Vector>> mult(n, std::vector<F2Vector>(n, F2Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (words[i].size() + words[j].size() > max_length) continue;
            Word w = words[i];
            w.insert(w.end(), words[j].begin(), words[j].end());
            mult[i][j].set(*find(w));
        }
    std::vector<F2Vector> diff;
    for (std::size_t i = 0; i < n; ++i) {
        F2Vector dv(n);
        for (const auto& t : differential[i].terms())
            if (auto j = find(t)) dv.flip(*j);
        diff.push_back(std::move(dv));
    }
    return DgAlgebra(GradedBasis(std::move(elems)), 0, std::move(mult), std::move(diff));
}

Report check_bar_square_zero(const DgAlgebra& a, const TruncatedBar& b)
{
    Report r;
    for (std::size_t i = 0; i < b.words.size(); ++i) {
        r.count_check();
        F2Accumulator<Word> acc;
        for (const auto& t : b.differential[i].terms()) acc.add(bar_differential(a, t));
        auto dd = acc.finish();
        if (!dd.is_zero())
            r.add({"bar dd", {format_word(a.basis(), b.words[i])},
                   std::to_string(dd.size()) + " surviving terms"});
    }
    return r;
}

Report check_cobar_square_zero(const DgCoalgebra& c, const TruncatedCobar& b)
{
    Report r;
    for (std::size_t i = 0; i < b.words.size(); ++i) {
        r.count_check();
        F2Accumulator<Word> acc;
        for (const auto& t : b.differential[i].terms()) acc.add(cobar_differential(c, t));
        auto dd = acc.finish();
        if (!dd.is_zero())
            r.add({"cobar dd", {format_word(c.basis(), b.words[i])},
                   std::to_string(dd.size()) + " surviving terms"});
    }
    return r;
}

Report check_brown(const DgCoalgebra& c, const DgAlgebra& a, const TwistingCochainMap& tau)
{
    Report r;
    if (tau.values.size() != c.dim()) throw std::invalid_argument("check_brown: tau has the wrong length");
    auto apply_tau = [&](const F2Vector& x) {
        F2Vector out(a.dim());
        for (auto i : x.support()) out ^= tau.values[i];
        return out;
    };
    for (std::size_t i = 0; i < c.dim(); ++i) {
        r.count_check();
        for (auto k : tau.values[i].support())
            if (a.basis().degree(k) != c.basis().degree(i) + 1) {
                r.add({"degree", {c.basis().name(i)}, "tau must raise degree by 1"});
                break;
            }
        const auto lhs = a.d(tau.values[i]) + apply_tau(c.differential(i));
        F2Vector rhs(a.dim());
        for (auto [x, y] : c.coproduct_terms(i)) rhs ^= a.multiply(tau.values[x], tau.values[y]);
        if (lhs != rhs)
            r.add({"brown", {c.basis().name(i)},
                   "d tau + tau d = " + a.basis().format(lhs) + ", tau cup tau = " + a.basis().format(rhs)});
    }
    return r;
}

TwistingCochainMap universal_bar_cochain(const DgAlgebra& a, const TruncatedBar& b)
{
    TwistingCochainMap tau;
    for (const auto& w : b.words) {
        F2Vector v(a.dim());
        if (w.size() == 1) v.set(w[0]);
        tau.values.push_back(std::move(v));
    }
    return tau;
}

TwistingCochainMap universal_cobar_cochain(const DgCoalgebra& c, const TruncatedCobar& b)
{
    TwistingCochainMap tau;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        F2Vector v(b.words.size());
        if (auto w = b.find(Word{static_cast<std::uint32_t>(i)})) v.set(*w);
        tau.values.push_back(std::move(v));
    }
    return tau;
}

MultiplicativeExtension multiplicative_extension(const DgCoalgebra& c, const DgAlgebra& a,
                                                 const TwistingCochainMap& tau, std::size_t max_length)
{
    if (!check_brown(c, a, tau).ok()) throw PreconditionError("multiplicative_extension: tau fails Brown's condition");
    const auto cob = cobar(c, max_length);
    MultiplicativeExtension out;
    out.verified_length = max_length;
    out.words = cob.words;
    auto f = [&](const Word& w) {
        F2Vector v = a.element(a.unit());
        for (auto l : w) v = a.multiply(v, tau.values[l]);
        return v;
    };
    for (const auto& w : cob.words) out.values.push_back(f(w));
    for (std::size_t i = 0; i < cob.words.size(); ++i) {
        out.report.count_check();
        F2Vector lhs(a.dim());
        for (const auto& t : cob.differential[i].terms()) lhs ^= f(t);
        const auto rhs = a.d(out.values[i]);
        if (lhs != rhs)
            out.report.add({"chain map", {format_word(c.basis(), cob.words[i])},
                            "f d = " + a.basis().format(lhs) + ", d f = " + a.basis().format(rhs)});
        for (std::size_t j = 0; j < cob.words.size(); ++j) {
            if (cob.words[i].size() + cob.words[j].size() > max_length) continue;
            out.report.count_check();
            Word w = cob.words[i];
            w.insert(w.end(), cob.words[j].begin(), cob.words[j].end());
            if (f(w) != a.multiply(out.values[i], out.values[j]))
                out.report.add({"multiplicative", {format_word(c.basis(), cob.words[i]), format_word(c.basis(), cob.words[j])}, ""});
        }
    }
    out.report.note("verified to length " + std::to_string(max_length));
    return out;
}

namespace {

// Tensor powers of basis elements of C as words of basis indices.
std::vector<WordSum> iterated_diagonals(const DgCoalgebra& c, std::size_t i, std::size_t max_factors)
{
    std::vector<WordSum> powers;  // powers[n-1] = Delta^n(e_i)
    powers.emplace_back(Word{static_cast<std::uint32_t>(i)});
    for (std::size_t n = 2; n <= max_factors; ++n) {
        F2Accumulator<Word> acc;
        for (const auto& w : powers.back().terms()) {
            for (auto [x, y] : c.coproduct_terms(w.front())) {
                Word v{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
                v.insert(v.end(), w.begin() + 1, w.end());
                acc.toggle(std::move(v));
            }
        }
        powers.push_back(acc.finish());
    }
    return powers;
}

// Multilinear expansion of [v_1,...,v_n] into words of basis letters.
void expand_word(const std::vector<F2Vector>& factors, std::size_t pos, Word& current, F2Accumulator<Word>& acc)
{
    if (pos == factors.size()) {
        acc.toggle(current);
        return;
    }
    for (auto k : factors[pos].support()) {
        current.push_back(static_cast<std::uint32_t>(k));
        expand_word(factors, pos + 1, current, acc);
        current.pop_back();
    }
}

}  // namespace

ComultiplicativeCoextension comultiplicative_coextension(const DgCoalgebra& c, const DgAlgebra& a,
                                                         const TwistingCochainMap& tau, std::size_t max_length)
{
    if (!check_brown(c, a, tau).ok())
        throw PreconditionError("comultiplicative_coextension: tau fails Brown's condition");
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (c.basis().degree(i) == 0 && !tau.values[i].is_zero())
            throw PreconditionError("comultiplicative_coextension: tau is nonzero in degree 0");

    ComultiplicativeCoextension out;
    out.verified_length = max_length;
    const std::size_t computed = max_length + 1;
    auto coext = [&](std::size_t i) {
        F2Accumulator<Word> acc;
        if (c.counit().get(i)) acc.toggle(Word{});
        const auto powers = iterated_diagonals(c, i, computed);
        for (const auto& p : powers)
            for (const auto& w : p.terms()) {
                std::vector<F2Vector> factors;
                for (auto l : w) factors.push_back(tau.values[l]);
                Word cur;
                expand_word(factors, 0, cur, acc);
            }
        return acc.finish();
    };
    std::vector<WordSum> full;
    for (std::size_t i = 0; i < c.dim(); ++i) full.push_back(coext(i));
    auto truncate = [](const WordSum& s, std::size_t len) {
        std::vector<Word> keep;
        for (const auto& w : s.terms())
            if (w.size() <= len) keep.push_back(w);
        return WordSum::from_terms(std::move(keep));
    };
    for (std::size_t i = 0; i < c.dim(); ++i) out.values.push_back(truncate(full[i], max_length));

    auto tensor_len_ok = [&](const Word& u, const Word& v) { return u.size() + v.size() <= max_length; };
    for (std::size_t i = 0; i < c.dim(); ++i) {
        out.report.count_check(2);
        // d_B g = g d on components of length <= L.
        F2Accumulator<Word> lhs, rhs;
        for (const auto& w : full[i].terms()) lhs.add(bar_differential(a, w));
        for (auto k : c.differential(i).support()) rhs.add(full[k]);
        if (truncate(lhs.finish(), max_length) != truncate(rhs.finish(), max_length))
            out.report.add({"chain map", {c.basis().name(i)}, "d_B g != g d"});
        // Deconcatenation of g(c) against (g (x) g) Delta(c).
        F2Accumulator<std::pair<Word, Word>> dl, dr;
        for (const auto& w : full[i].terms())
            for (std::size_t k = 0; k <= w.size(); ++k) {
                Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
                Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
                if (tensor_len_ok(u, v)) dl.toggle({std::move(u), std::move(v)});
            }
        for (auto [x, y] : c.coproduct_terms(i))
            for (const auto& u : full[x].terms())
                for (const auto& v : full[y].terms())
                    if (tensor_len_ok(u, v)) dr.toggle({u, v});
        if (dl.finish() != dr.finish()) out.report.add({"coalgebra map", {c.basis().name(i)}, ""});
    }
    out.report.note("verified to length " + std::to_string(max_length));
    return out;
}

bool check_dga_twisting(const DgAlgebra& a, const F2Vector& t)
{
    if (!t.is_zero() && a.basis().degree_of(t) != 1)
        throw PreconditionError("check_dga_twisting: t is not homogeneous of degree 1");
    return a.d(t) == a.multiply(t, t);
}

std::optional<F2Vector> invert(const DgAlgebra& a, const F2Vector& g)
{
    const auto n = a.dim();
    std::vector<F2Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(a.multiply(g, a.element(j)));
    const auto sol = solve(F2Matrix::from_columns(n, cols), a.element(a.unit()));
    if (!sol.solvable()) return std::nullopt;
    const auto& x = *sol.particular;
    if (a.multiply(x, g) != a.element(a.unit())) return std::nullopt;
    return x;
}

F2Vector berikashvili_act(const DgAlgebra& a, const F2Vector& g, const F2Vector& t)
{
    if (a.basis().degree_of(g) != 0) throw PreconditionError("berikashvili_act: g must lie in degree 0");
    const auto ginv = invert(a, g);
    if (!ginv) throw PreconditionError("berikashvili_act: g is not invertible");
    return a.multiply(a.multiply(g, t), *ginv) + a.multiply(a.d(g), *ginv);
}

}  // namespace hgt
