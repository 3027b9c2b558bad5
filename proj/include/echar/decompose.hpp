#pragma once

#include "echar/groebner.hpp"

namespace echar {

/// Radical equidimensional pieces with strictly decreasing dimension; their
/// intersection is the radical of the decomposed ideal.
struct ComponentList {
  std::vector<Ideal> components;
};

/// Seidenberg: add the squarefree part of the univariate eliminant of each
/// variable. Requires dimension(I) <= 0.
Ideal radical_zero_dim(const Ideal& I);

/// Radical in any dimension: zero-dimensional reduction over the function
/// field of a maximal independent set, contraction by saturation at the
/// leading-coefficient product, recursion on the cut-off part.
Ideal radical(const Ideal& I);

/// Equidimensional radical decomposition; stands in for associated primes.
ComponentList components(const Ideal& I);

/// Same split for an ideal already known to be radical.
ComponentList components_of_radical(const Ideal& R);

/// Number of distinct geometric points of a zero-dimensional ideal: the
/// count of standard monomials of its radical.
std::int64_t count_points_zero_dim(const Ideal& I);

}  // namespace echar
