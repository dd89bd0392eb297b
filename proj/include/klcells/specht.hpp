#pragma once

#include "klcells/multipoly.hpp"
#include "klcells/tableau.hpp"

#include <vector>

namespace klcells {

// A filling of a Young diagram: rows of a valid shape whose entries are a
// permutation of 1..n, with no standardness requirement.
struct Filling {
    std::vector<std::vector<int>> rows;
    explicit Filling(std::vector<std::vector<int>> r);
    Filling(const Tableau& t) : rows(t.rows()) {}
    int n() const;
    Partition shape() const;
    Filling applyPermutation(const Permutation& w) const;  // relabel boxes
};

// g_T: product of (x_i - x_j) over pairs with i above j in one column.
MultiPoly gPolynomial(const Filling& T);

// {g_T : T standard of shape lambda}; verified linearly independent.
std::vector<MultiPoly> spechtBasis(const Partition& lambda);
long spechtDimension(const Partition& lambda);

// Exact membership of a homogeneous degree-r(lambda) polynomial in the span.
bool membershipInSpan(const MultiPoly& p, const Partition& lambda);

// Product of (x_i - x_j) over i < j inside consecutive blocks.
MultiPoly positiveRootsProduct(const std::vector<int>& blockSizes);

// Exact rank of the coefficient matrix of a family of polynomials.
long polySpanRank(const std::vector<MultiPoly>& polys);

// Dimension of the algebra of matrices commuting with the symmetric group
// action on the span of the standard-tableau basis.
long spechtCommutantDimension(const Partition& lambda);

}  // namespace klcells
