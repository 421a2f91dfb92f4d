#pragma once

#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

/* Sylvester matrix of a and b with respect to `var`: the first deg_v(b)
 * rows carry a's coefficients, the remaining deg_v(a) rows carry b's.
 * Entries are polynomials in the other variables. */
std::vector<std::vector<Polynomial>>
sylvester_matrix(const Polynomial& a, const Polynomial& b, std::size_t var);

/* Resultant as the determinant of the Sylvester matrix, computed by
 * cofactor expansion.  Exponentially slow; this is the reference path the
 * production resultant is checked against, kept free of any code shared
 * with it. */
Polynomial sylvester_resultant(const Polynomial& a, const Polynomial& b,
                               std::size_t var);

} // namespace cremona
