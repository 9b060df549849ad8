#pragma once

// Builders for the small algebras used throughout: truncated polynomial
// algebras, upper triangular matrices, endomorphism dgas and linear duals.

#include <string>
#include <tuple>
#include <vector>

#include "hgt/graded.hpp"

namespace hgt {

struct ProductEntry {
    std::string left, right;
    std::vector<std::string> terms;
};

struct DifferentialEntry {
    std::string source;
    std::vector<std::string> terms;
};

/// Algebra from named structure constants. Products not listed are zero, except that
/// products with the unit default to the unit law.
DgAlgebra algebra_from_products(const std::vector<BasisElement>& basis, const std::string& unit,
                                const std::vector<ProductEntry>& products,
                                const std::vector<DifferentialEntry>& diff = {});

/// The ground field in degree 0.
DgAlgebra ground_field();
/// F2[x]/(x^n) with basis 1, x, ..., x^{n-1} named "1", "x", "x2", ...
DgAlgebra truncated_polynomial(int n, int degree_of_x = 0);
/// Upper triangular 2x2 matrices with basis one = I, e11, e12.
DgAlgebra upper_triangular();
/// End(V) for a finite complex V with d f = d_V f + f d_V. The identity replaces
/// e00 in the elementary basis; the other basis elements are "e<i><j>".
DgAlgebra endomorphism_dga(const std::vector<int>& degrees, const std::vector<std::vector<std::size_t>>& differential);

/// Linear dual coalgebra. With negate_degrees the dual of A^i sits in degree -i and
/// the transposed differential still raises degree; otherwise degrees are kept,
/// which is only consistent when d = 0.
DgCoalgebra dual_coalgebra(const DgAlgebra& a, bool negate_degrees = true);

}  // namespace hgt
