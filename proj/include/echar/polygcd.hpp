#pragma once

#include "echar/multipoly.hpp"

namespace echar {

/// Quotient f/g when the division is exact; throws ZeroPolynomial for g = 0
/// and an internal error when g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g);
bool try_exact_divide(const Poly& f, const Poly& g, Poly* quotient);

/// View f as a univariate polynomial in `var`: coefficients (free of `var`),
/// low degree first. Empty vector for the zero polynomial.
std::vector<Poly> univariate_coeffs(const Poly& f, std::size_t var);
Poly from_univariate_coeffs(const RingPtr& ring,
                            const std::vector<Poly>& coeffs, std::size_t var);

/// Pseudo-remainder of f by g with respect to `var`:
/// lc_var(g)^(deg f - deg g + 1) * f = q*g + r with deg_var r < deg_var g.
Poly pseudo_rem(const Poly& f, const Poly& g, std::size_t var);

/// Content of f as a univariate polynomial in `var` (gcd of coefficients).
Poly poly_content(const Poly& f, std::size_t var);
Poly primitive_part(const Poly& f, std::size_t var);

/// Multivariate gcd over the coefficient field, by subresultant PRS with
/// recursive contents. Result is normalized monic under grevlex.
Poly poly_gcd(const Poly& f, const Poly& g);

/// f / gcd(f, df/dvar), content-stripped in `var`. In characteristic p a
/// vanishing derivative of a polynomial that still involves `var` raises
/// InseparableEliminant; it is never silently repaired.
Poly squarefree_part(const Poly& f, std::size_t var);

}  // namespace echar
