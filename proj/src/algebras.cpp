#include "hgt/algebras.hpp"

#include <stdexcept>

namespace hgt {

DgAlgebra algebra_from_products(const std::vector<BasisElement>& elements, const std::string& unit,
                                const std::vector<ProductEntry>& products,
                                const std::vector<DifferentialEntry>& diff)
{
    GradedBasis basis(elements);
    const auto n = basis.size();
    const auto u = basis.index_of(unit);
    std::vector<std::vector<F2Vector>> mult(n, std::vector<F2Vector>(n, F2Vector(n)));
    for (std::size_t i = 0; i < n; ++i) {
        mult[u][i] = F2Vector::unit(n, i);
        mult[i][u] = F2Vector::unit(n, i);
    }
    auto vec = [&](const std::vector<std::string>& terms) {
        F2Vector v(n);
        for (const auto& t : terms) v.flip(basis.index_of(t));
        return v;
    };
    for (const auto& p : products) mult[basis.index_of(p.left)][basis.index_of(p.right)] = vec(p.terms);
    std::vector<F2Vector> d(n, F2Vector(n));
    for (const auto& e : diff) d[basis.index_of(e.source)] = vec(e.terms);
    return DgAlgebra(std::move(basis), u, std::move(mult), std::move(d));
}

DgAlgebra ground_field() { return algebra_from_products({{"1", 0}}, "1", {}); }

DgAlgebra truncated_polynomial(int n, int degree_of_x)
{
    if (n < 1) throw std::invalid_argument("truncated_polynomial: n must be positive");
    auto name = [](int i) { return i == 0 ? std::string("1") : i == 1 ? std::string("x") : "x" + std::to_string(i); };
    std::vector<BasisElement> basis;
    for (int i = 0; i < n; ++i) basis.push_back({name(i), i * degree_of_x});
    std::vector<ProductEntry> products;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            ProductEntry e{name(i), name(j), {}};
            if (i + j < n) e.terms.push_back(name(i + j));
            products.push_back(std::move(e));
        }
    return algebra_from_products(basis, "1", products);
}

DgAlgebra upper_triangular()
{
    return algebra_from_products({{"one", 0}, {"e11", 0}, {"e12", 0}}, "one",
                                 {{"e11", "e11", {"e11"}},
                                  {"e11", "e12", {"e12"}},
                                  {"e12", "e11", {}},
                                  {"e12", "e12", {}}});
}

DgAlgebra endomorphism_dga(const std::vector<int>& degrees, const std::vector<std::vector<std::size_t>>& differential)
{
    const std::size_t v = degrees.size();
    if (v == 0 || differential.size() != v) throw std::invalid_argument("endomorphism_dga: bad complex");
    const std::size_t n = v * v;
    // Elementary basis: index i*v+j is the map sending v_j to v_i.
    auto elem = [&](std::size_t i, std::size_t j) { return i * v + j; };
    // Coordinates in the basis where e00 is replaced by the identity: e00 = 1 + sum_{i>0} e_ii.
    auto convert = [&](F2Vector x) {
        if (x.get(0))
            for (std::size_t i = 1; i < v; ++i) x.flip(elem(i, i));
        return x;
    };
    auto to_elementary = [&](std::size_t k) {
        F2Vector x = F2Vector::unit(n, k);
        if (k == 0)
            for (std::size_t i = 1; i < v; ++i) x.flip(elem(i, i));
        return x;
    };
    auto compose = [&](const F2Vector& f, const F2Vector& g) {
        F2Vector out(n);
        for (auto a : f.support())
            for (auto b : g.support())
                if (a % v == b / v) out.flip(elem(a / v, b % v));
        return out;
    };
    F2Vector dv(n);
    for (std::size_t j = 0; j < v; ++j)
        for (auto i : differential[j]) dv.flip(elem(i, j));

    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
            basis.push_back({i == 0 && j == 0 ? std::string("1") : "e" + std::to_string(i) + std::to_string(j),
                             degrees[i] - degrees[j]});
    std::vector<std::vector<F2Vector>> mult(n, std::vector<F2Vector>(n));
    std::vector<F2Vector> d(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mult[a][b] = convert(compose(to_elementary(a), to_elementary(b)));
        const auto f = to_elementary(a);
        d[a] = convert(compose(dv, f) + compose(f, dv));
    }
    return DgAlgebra(GradedBasis(std::move(basis)), 0, std::move(mult), std::move(d));
}

DgCoalgebra dual_coalgebra(const DgAlgebra& a, bool negate_degrees)
{
    const auto n = a.dim();
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back({a.basis().name(i) + "*", negate_degrees ? -a.basis().degree(i) : a.basis().degree(i)});
    std::vector<F2Vector> comult(n, F2Vector(n * n)), diff(n, F2Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (auto k : a.product(i, j).support()) comult[k].flip(i * n + j);
        }
    for (std::size_t j = 0; j < n; ++j)
        for (auto i : a.differential(j).support()) diff[i].flip(j);
    return DgCoalgebra(GradedBasis(std::move(basis)), F2Vector::unit(n, a.unit()), std::move(comult), std::move(diff));
}

}  // namespace hgt
