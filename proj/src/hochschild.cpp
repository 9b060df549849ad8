#include "hgt/hochschild.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace hgt {

GradedAlgebra::GradedAlgebra(DgAlgebra a) : a_(std::move(a)), n_(a_.dim())
{
    if (n_ == 0 || n_ > max_dim) throw PreconditionError("graded algebra must have dimension 1..64");
    if (!a_.has_zero_differential()) throw PreconditionError("graded algebra must have zero differential");
    if (auto r = validate_dga(a_); !r.ok())
        throw PreconditionError("graded algebra fails " + r.violations().front().identity);
    for (std::size_t i = 0; i < n_; ++i) degrees_.push_back(a_.basis().degree(i));
    prod_.resize(n_ * n_);
    pre_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            prod_[i * n_ + j] = to_mask(a_.product(i, j));
            for (auto k : a_.product(i, j).support())
                pre_[k].emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
        }
    pow_.push_back(1);
    while (pow_.size() <= max_arity) {
        const auto last = pow_.back();
        if (last > (std::uint64_t{1} << 62) / n_) break;
        pow_.push_back(last * n_);
    }
    arity_limit_ = pow_.size() - 1;
}

Mask GradedAlgebra::multiply(Mask x, Mask y) const
{
    Mask out = 0;
    while (x) {
        const auto i = static_cast<std::size_t>(std::countr_zero(x));
        x &= x - 1;
        Mask yy = y;
        while (yy) {
            out ^= prod_[i * n_ + static_cast<std::size_t>(std::countr_zero(yy))];
            yy &= yy - 1;
        }
    }
    return out;
}

Mask GradedAlgebra::degree_mask(int deg) const
{
    Mask m = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (degrees_[i] == deg) m |= Mask{1} << i;
    return m;
}

bool GradedAlgebra::ungraded() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

std::uint64_t GradedAlgebra::encode(std::span<const std::uint8_t> tuple) const
{
    std::uint64_t row = 0;
    for (auto t : tuple) row = row * n_ + t;
    return row;
}

void GradedAlgebra::decode(std::uint64_t row, std::size_t arity, std::uint8_t* out) const
{
    for (std::size_t i = arity; i-- > 0;) {
        out[i] = static_cast<std::uint8_t>(row % n_);
        row /= n_;
    }
}

std::vector<std::uint8_t> GradedAlgebra::decode(std::uint64_t row, std::size_t arity) const
{
    std::vector<std::uint8_t> out(arity);
    decode(row, arity, out.data());
    return out;
}

int GradedAlgebra::tuple_degree(std::uint64_t row, std::size_t arity) const
{
    int deg = 0;
    for (std::size_t i = 0; i < arity; ++i) {
        deg += degrees_[row % n_];
        row /= n_;
    }
    return deg;
}

F2Vector GradedAlgebra::to_vector(Mask m) const
{
    F2Vector v(n_);
    while (m) {
        v.set(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return v;
}

Mask GradedAlgebra::to_mask(const F2Vector& v) const
{
    Mask m = 0;
    for (auto i : v.support()) m |= Mask{1} << i;
    return m;
}

std::string GradedAlgebra::format(Mask m) const { return basis().format(to_vector(m)); }

namespace {

// Sorts entries by row and adds repeated rows.
std::vector<CochainEntry> normalize(std::vector<CochainEntry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const CochainEntry& a, const CochainEntry& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        Mask v = 0;
        const auto row = entries[i].row;
        for (; i < entries.size() && entries[i].row == row; ++i) v ^= entries[i].value;
        if (v) entries[out++] = {row, v};
    }
    entries.resize(out);
    return entries;
}

int mask_degree(const GradedAlgebra& h, Mask m)
{
    if (!m) throw std::invalid_argument("zero element has no degree");
    const int deg = h.degree(static_cast<std::size_t>(std::countr_zero(m)));
    if ((m & h.degree_mask(deg)) != m) throw PreconditionError("element " + h.format(m) + " is not homogeneous");
    return deg;
}

void check_arity(const GradedAlgebra& h, std::size_t arity)
{
    if (arity > h.arity_limit()) throw std::length_error("cochain arity exceeds the row index range");
}

}  // namespace

HCochain::HCochain(std::size_t arity, int degree, std::vector<CochainEntry> entries)
    : arity_(arity), degree_(degree), entries_(normalize(std::move(entries)))
{
}

HCochain HCochain::element(const GradedAlgebra& h, Mask value)
{
    if (!value) return HCochain(0, 0);
    return HCochain(0, mask_degree(h, value), {{0, value}});
}

HCochain HCochain::elementary(const GradedAlgebra& h, std::span<const std::uint8_t> tuple, std::size_t output)
{
    check_arity(h, tuple.size());
    int deg = h.degree(output);
    for (auto t : tuple) deg -= h.degree(t);
    return HCochain(tuple.size(), deg, {{h.encode(tuple), Mask{1} << output}});
}

HCochain HCochain::identity(const GradedAlgebra& h)
{
    std::vector<CochainEntry> e;
    for (std::size_t i = 0; i < h.dim(); ++i) e.push_back({i, Mask{1} << i});
    return HCochain(1, 0, std::move(e));
}

HCochain HCochain::multiplication(const GradedAlgebra& h)
{
    std::vector<CochainEntry> e;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (auto p = h.product(i, j)) e.push_back({i * h.dim() + j, p});
    return HCochain(2, 0, std::move(e));
}

Mask HCochain::value(std::uint64_t row) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), row,
                               [](const CochainEntry& e, std::uint64_t r) { return e.row < r; });
    return it != entries_.end() && it->row == row ? it->value : 0;
}

HCochain& HCochain::operator+=(const HCochain& other)
{
    if (other.is_zero()) return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    if (arity_ != other.arity_ || degree_ != other.degree_)
        throw std::invalid_argument("adding cochains of different bidegree");
    std::vector<CochainEntry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.cbegin();
    auto b = other.entries_.cbegin();
    while (a != entries_.cend() || b != other.entries_.cend()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->row < b->row)) {
            out.push_back(*a++);
        } else if (a == entries_.end() || b->row < a->row) {
            out.push_back(*b++);
        } else {
            if (auto v = a->value ^ b->value) out.push_back({a->row, v});
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
    return *this;
}

bool operator==(const HCochain& a, const HCochain& b)
{
    if (a.is_zero() && b.is_zero()) return true;
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
}

bool HCochain::well_typed(const GradedAlgebra& h) const
{
    for (const auto& e : entries_) {
        if (arity_ > 0 && e.row >= h.rows(arity_)) return false;
        if (arity_ == 0 && e.row != 0) return false;
        const int target = h.tuple_degree(e.row, arity_) + degree_;
        if ((e.value & h.degree_mask(target)) != e.value) return false;
    }
    return true;
}

std::string HCochain::to_string(const GradedAlgebra& h) const
{
    std::string s = "C^{" + std::to_string(arity_) + "," + std::to_string(degree_) + "}";
    if (is_zero()) return s + " 0";
    std::vector<std::uint8_t> t(arity_);
    for (const auto& e : entries_) {
        h.decode(e.row, arity_, t.data());
        s += " (";
        for (std::size_t i = 0; i < arity_; ++i) s += (i ? "," : "") + h.basis().name(t[i]);
        s += ")->" + h.format(e.value);
    }
    return s;
}

Mask evaluate(const GradedAlgebra& h, const HCochain& f, std::span<const Mask> args)
{
    if (args.size() != f.arity()) throw std::invalid_argument("evaluate: wrong number of arguments");
    Mask out = 0;
    // Only rows whose every digit lies in the corresponding argument contribute.
    std::vector<std::uint8_t> t(f.arity());
    for (const auto& e : f.entries()) {
        h.decode(e.row, f.arity(), t.data());
        bool hit = true;
        for (std::size_t i = 0; i < t.size() && hit; ++i) hit = (args[i] >> t[i]) & 1;
        if (hit) out ^= e.value;
    }
    return out;
}

HCochain delta(const GradedAlgebra& h, const HCochain& f)
{
    const std::size_t m = f.arity();
    check_arity(h, m + 1);
    const std::size_t n = h.dim();
    const auto& fe = f.entries();
    std::vector<CochainEntry> acc;
    std::array<std::uint8_t, GradedAlgebra::max_arity + 1> t{};
    const std::uint64_t top = h.rows(m);
    for (const auto& e : fe) {
        h.decode(e.row, m, t.data());
        for (std::size_t a = 0; a < n; ++a) {
            if (auto v = h.multiply(Mask{1} << a, e.value)) acc.push_back({a * top + e.row, v});
            if (auto v = h.multiply(e.value, Mask{1} << a)) acc.push_back({e.row * n + a, v});
        }
        // f(.., a_k a_{k+1}, ..): the k-th argument is split into preimage pairs.
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t high = e.row / h.rows(m - k);          // digits before k
            const std::uint64_t low = e.row % h.rows(m - k - 1);        // digits after k
            for (auto [x, y] : h.preimages(t[k])) {
                const std::uint64_t row = ((high * n + x) * n + y) * h.rows(m - k - 1) + low;
                acc.push_back({row, e.value});
            }
        }
    }
    return HCochain(m + 1, f.degree(), std::move(acc));
}

HCochain cup(const GradedAlgebra& h, const HCochain& f, const HCochain& g)
{
    check_arity(h, f.arity() + g.arity());
    std::vector<CochainEntry> acc;
    acc.reserve(f.entries().size() * g.entries().size());
    const std::uint64_t shift = h.rows(g.arity());
    for (const auto& a : f.entries())
        for (const auto& b : g.entries())
            if (auto v = h.multiply(a.value, b.value)) acc.push_back({a.row * shift + b.row, v});
    return HCochain(f.arity() + g.arity(), f.degree() + g.degree(), std::move(acc));
}

namespace {

struct BraceInput {
    std::size_t arity;
    std::uint64_t width;  // dim^arity
    // Rows of entries whose value contains basis element b, for each b.
    std::vector<std::vector<std::uint64_t>> by_output;
};

struct BraceState {
    const GradedAlgebra* h;
    const std::vector<BraceInput>* inputs;
    std::array<std::uint8_t, GradedAlgebra::max_arity> t;
    std::size_t m;
    std::vector<CochainEntry>* acc;
    Mask value;
};

// Places g_j at a position >= pos; `row` holds the output digits produced so far.
void insert_rec(BraceState& s, std::size_t j, std::size_t pos, std::uint64_t row)
{
    const auto& inputs = *s.inputs;
    const std::uint64_t n = s.h->dim();
    if (j == inputs.size()) {
        for (std::size_t p = pos; p < s.m; ++p) row = row * n + s.t[p];
        s.acc->push_back({row, s.value});
        return;
    }
    const std::size_t remaining = inputs.size() - j;
    std::uint64_t prefix = row;
    for (std::size_t p = pos; p + remaining <= s.m; ++p) {
        const auto& rows = inputs[j].by_output[s.t[p]];
        for (auto r : rows) insert_rec(s, j + 1, p + 1, prefix * inputs[j].width + r);
        prefix = prefix * n + s.t[p];
    }
}

}  // namespace

HCochain brace(const GradedAlgebra& h, const HCochain& f, std::span<const HCochain> gs)
{
    if (gs.empty()) return f;
    const std::size_t m = f.arity();
    std::size_t arity = m;
    int degree = f.degree();
    for (const auto& g : gs) {
        arity += g.arity();
        degree += g.degree();
    }
    if (gs.size() > m) return HCochain(arity >= gs.size() ? arity - gs.size() : 0, degree);
    arity -= gs.size();
    check_arity(h, arity);
    std::vector<BraceInput> inputs;
    inputs.reserve(gs.size());
    for (const auto& g : gs) {
        if (g.is_zero()) return HCochain(arity, degree);
        BraceInput in{g.arity(), h.rows(g.arity()), std::vector<std::vector<std::uint64_t>>(h.dim())};
        for (const auto& e : g.entries()) {
            Mask v = e.value;
            while (v) {
                in.by_output[static_cast<std::size_t>(std::countr_zero(v))].push_back(e.row);
                v &= v - 1;
            }
        }
        inputs.push_back(std::move(in));
    }
    std::vector<CochainEntry> acc;
    BraceState s{&h, &inputs, {}, m, &acc, 0};
    for (const auto& e : f.entries()) {
        h.decode(e.row, m, s.t.data());
        s.value = e.value;
        insert_rec(s, 0, 0, 0);
    }
    return HCochain(arity, degree, std::move(acc));
}

CochainSpace::CochainSpace(const GradedAlgebra& h, std::size_t arity, int degree) : arity_(arity), degree_(degree)
{
    check_arity(h, arity);
    const auto rows = h.rows(arity);
    for (std::uint64_t r = 0; r < rows; ++r) {
        const Mask out = h.degree_mask(h.tuple_degree(r, arity) + degree);
        for (std::size_t o = 0; o < h.dim(); ++o)
            if ((out >> o) & 1) basis_.emplace_back(r, static_cast<std::uint8_t>(o));
    }
}

HCochain CochainSpace::element(std::size_t i) const
{
    return HCochain(arity_, degree_, {{basis_[i].first, Mask{1} << basis_[i].second}});
}

std::optional<std::size_t> CochainSpace::index_of(std::uint64_t row, std::size_t output) const
{
    const std::pair<std::uint64_t, std::uint8_t> key{row, static_cast<std::uint8_t>(output)};
    auto it = std::lower_bound(basis_.begin(), basis_.end(), key);
    if (it == basis_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - basis_.begin());
}

F2Vector CochainSpace::to_vector(const HCochain& f) const
{
    F2Vector v(dimension());
    if (f.is_zero()) return v;
    if (f.arity() != arity_ || f.degree() != degree_)
        throw std::invalid_argument("cochain of bidegree (" + std::to_string(f.arity()) + "," +
                                    std::to_string(f.degree()) + ") is not in C^{" + std::to_string(arity_) + "," +
                                    std::to_string(degree_) + "}");
    for (const auto& e : f.entries()) {
        Mask val = e.value;
        while (val) {
            const auto o = static_cast<std::size_t>(std::countr_zero(val));
            val &= val - 1;
            auto i = index_of(e.row, o);
            if (!i) throw std::invalid_argument("cochain violates the degree law");
            v.set(*i);
        }
    }
    return v;
}

HCochain CochainSpace::from_vector(const F2Vector& v) const
{
    if (v.size() != dimension()) throw std::invalid_argument("CochainSpace::from_vector: length mismatch");
    std::vector<CochainEntry> e;
    for (auto i : v.support()) e.push_back({basis_[i].first, Mask{1} << basis_[i].second});
    return HCochain(arity_, degree_, std::move(e));
}

HCochain CochainSpace::random(std::mt19937_64& rng) const
{
    std::vector<CochainEntry> e;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i % 64 == 0) bits = rng();
        if ((bits >> (i % 64)) & 1) e.push_back({basis_[i].first, Mask{1} << basis_[i].second});
    }
    return HCochain(arity_, degree_, std::move(e));
}

F2Matrix delta_matrix(const GradedAlgebra& h, const CochainSpace& source, const CochainSpace& target)
{
    std::vector<F2Vector> cols;
    cols.reserve(source.dimension());
    for (std::size_t i = 0; i < source.dimension(); ++i) cols.push_back(target.to_vector(delta(h, source.element(i))));
    return F2Matrix::from_columns(target.dimension(), cols);
}

AffineSolutionSet HHGroup::lift(const HCochain& z) const { return solve(incoming, space.to_vector(z)); }

std::vector<HCochain> HHGroup::class_basis() const
{
    std::vector<HCochain> out;
    for (const auto& v : quotient.transversal()) out.push_back(space.from_vector(v));
    return out;
}

const CochainSpace& HochschildComplex::space(std::size_t m, int n)
{
    auto& slot = spaces_[{m, n}];
    if (!slot) slot = std::make_unique<CochainSpace>(h_, m, n);
    return *slot;
}

const HHGroup& HochschildComplex::cohomology(std::size_t m, int n)
{
    auto& slot = groups_[{m, n}];
    if (slot) return *slot;
    auto g = std::make_unique<HHGroup>();
    g->space = space(m, n);
    const auto& next = space(m + 1, n);
    const auto outgoing = delta_matrix(h_, g->space, next);
    const auto cycles = kernel(outgoing);
    std::vector<F2Vector> boundaries;
    if (m > 0) {
        g->previous = space(m - 1, n);
        g->incoming = delta_matrix(h_, g->previous, g->space);
        for (std::size_t c = 0; c < g->incoming.cols(); ++c) boundaries.push_back(g->incoming.column(c));
    } else {
        g->incoming = F2Matrix(g->space.dimension(), 0);
    }
    g->quotient = QuotientSpace(g->space.dimension(), cycles, boundaries);
    slot = std::move(g);
    return *slot;
}

}  // namespace hgt
