#pragma once

#include "fresco/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fresco {

// Univariate rational polynomial, coefficients low to high, no trailing zeros (zero = {0}).
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);
Poly poly_mul(const Poly& p, const Poly& q);
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q);
Poly poly_gcd(const Poly& p, const Poly& q);  // monic
Poly poly_derivative(const Poly& p);
Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_monic(Poly p);

// Exact rational roots with multiplicity, ascending; the rest of the
// polynomial (irreducible factors of degree > 1) is reported through `rest`.
std::vector<std::pair<Scalar, int>> rational_roots(const Poly& p, Poly* rest = nullptr);

Poly minpoly(const QMatrix& m);

// "z^2 + 5/2*z + 1"
std::string format_poly(const Poly& p, const std::string& var = "z");

}  // namespace fresco
