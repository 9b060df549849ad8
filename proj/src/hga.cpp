#include "hgt/hga.hpp"

#include <bit>
#include <stdexcept>

namespace hgt {

HochschildHga::Letter HochschildHga::pack(std::size_t arity, std::uint64_t row, std::size_t output)
{
    if (arity >= 64 || output >= 64 || row >= (std::uint64_t{1} << 52))
        throw std::length_error("elementary cochain does not fit a letter");
    return (std::uint64_t{arity} << 58) | (std::uint64_t{output} << 52) | row;
}

std::vector<HochschildHga::Letter> HochschildHga::letters(std::size_t max_weight) const
{
    std::vector<Letter> out;
    const std::size_t top = std::min(max_weight, h_->arity_limit());
    for (std::size_t a = 0; a <= top; ++a)
        for (std::uint64_t row = 0; row < h_->rows(a); ++row)
            for (std::size_t o = 0; o < h_->dim(); ++o) out.push_back(pack(a, row, o));
    return out;
}

HCochain HochschildHga::letter(Letter l) const
{
    const std::size_t arity = weight(l);
    const std::size_t output = (l >> 52) & 63;
    const auto tuple = h_->decode(l & ((std::uint64_t{1} << 52) - 1), arity);
    return HCochain::elementary(*h_, tuple, output);
}

std::vector<HochschildHga::Letter> HochschildHga::expand(const HCochain& x) const
{
    std::vector<Letter> out;
    for (const auto& e : x.entries())
        for (Mask v = e.value; v; v &= v - 1) out.push_back(pack(x.arity(), e.row, std::countr_zero(v)));
    return out;
}

std::string HochschildHga::describe(Letter l) const
{
    const std::size_t arity = weight(l);
    const auto tuple = h_->decode(l & ((std::uint64_t{1} << 52) - 1), arity);
    std::string s = "e(";
    for (std::size_t i = 0; i < arity; ++i) s += (i ? "," : "") + h_->basis().name(tuple[i]);
    return s + "->" + h_->basis().name((l >> 52) & 63) + ")";
}

TableHga::TableHga(DgAlgebra a, std::size_t max_brace, BraceTable braces)
    : a_(std::move(a)), max_brace_(max_brace), braces_(std::move(braces))
{
    for (auto it = braces_.begin(); it != braces_.end();) {
        const auto& key = it->first;
        if (key.size() < 2 || key.size() > max_brace_ + 1)
            throw std::invalid_argument("brace table key must have between 2 and K+1 entries");
        for (auto i : key)
            if (i >= a_.dim()) throw std::invalid_argument("brace table key out of range");
        if (it->second.size() != a_.dim()) throw std::invalid_argument("brace table value has the wrong length");
        it = it->second.is_zero() ? braces_.erase(it) : std::next(it);
    }
}

F2Vector TableHga::brace(const F2Vector& x, std::span<const F2Vector> ys) const
{
    if (ys.empty()) return x;
    F2Vector out(a_.dim());
    if (ys.size() > max_brace_ || braces_.empty()) return out;
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& y : ys) supports.push_back(y.support());
    std::vector<std::uint32_t> key(ys.size() + 1);
    for (auto a : x.support()) {
        key[0] = static_cast<std::uint32_t>(a);
        // Odometer over the supports of the arguments.
        std::vector<std::size_t> pos(ys.size(), 0);
        bool empty = false;
        for (const auto& s : supports) empty = empty || s.empty();
        if (empty) return out;
        while (true) {
            for (std::size_t i = 0; i < ys.size(); ++i) key[i + 1] = static_cast<std::uint32_t>(supports[i][pos[i]]);
            if (auto it = braces_.find(key); it != braces_.end()) out ^= it->second;
            std::size_t i = 0;
            while (i < pos.size() && ++pos[i] == supports[i].size()) pos[i++] = 0;
            if (i == pos.size()) break;
        }
    }
    return out;
}

std::vector<TableHga::Letter> TableHga::letters(std::size_t) const
{
    std::vector<Letter> out(a_.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Letter>(i);
    return out;
}

std::vector<TableHga::Letter> TableHga::expand(const F2Vector& x) const
{
    std::vector<Letter> out;
    for (auto i : x.support()) out.push_back(static_cast<Letter>(i));
    return out;
}

Report TableHga::check_degrees() const
{
    Report r;
    for (const auto& [key, value] : braces_) {
        r.count_check();
        int deg = -static_cast<int>(key.size() - 1);
        for (auto i : key) deg += a_.basis().degree(i);
        for (auto o : value.support())
            if (a_.basis().degree(o) != deg) {
                std::vector<std::string> wit;
                for (auto i : key) wit.push_back(a_.basis().name(i));
                r.add({"brace degree", wit, "output " + a_.basis().name(o) + " has the wrong degree"});
                break;
            }
    }
    return r;
}

Report verify_lie_on_cohomology(HochschildComplex& c, std::size_t max_arity, std::span<const int> degrees)
{
    const auto& h = c.algebra();
    HochschildHga s(h);
    Report r;
    struct Cls {
        HCochain z;
        std::string name;
    };
    std::vector<Cls> classes;
    for (std::size_t m = 0; m <= max_arity; ++m)
        for (int n : degrees) {
            const auto basis = c.cohomology(m, n).class_basis();
            for (std::size_t i = 0; i < basis.size(); ++i)
                classes.push_back({basis[i], "HH^{" + std::to_string(m) + "," + std::to_string(n) + "}#" +
                                                 std::to_string(i)});
        }
    for (const auto& a : classes)
        for (const auto& b : classes) {
            r.count_check();
            if (!delta(h, bracket(s, a.z, b.z)).is_zero()) r.add({"bracket of cocycles", {a.name, b.name}, ""});
        }
    for (const auto& a : classes)
        for (const auto& b : classes)
            for (const auto& x : classes) {
                r.count_check();
                const auto lhs = bracket(s, a.z, cup(h, b.z, x.z)) + cup(h, bracket(s, a.z, b.z), x.z) +
                                 cup(h, b.z, bracket(s, a.z, x.z));
                if (lhs.is_zero()) continue;
                if (!c.cohomology(lhs.arity(), lhs.degree()).is_coboundary(lhs))
                    r.add({"Poisson identity on HH", {a.name, b.name, x.name}, ""});
            }
    r.note("classes of arity <= " + std::to_string(max_arity));
    return r;
}

}  // namespace hgt
