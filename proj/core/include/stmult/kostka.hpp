#pragma once

#include "stmult/bigint.hpp"
#include "stmult/partition.hpp"

namespace stmult {

// Number of semistandard Young tableaux of the given shape and content,
// counted by exhaustive enumeration (nested horizontal strips, one per
// content value). Zero when the sizes differ or the shape does not dominate
// the content.
long long kostka_number(const Partition& shape, const Partition& content);

// Coefficient a_{nu,mu} in the expansion of the product of elementary
// symmetric polynomials e_nu into monomial symmetric polynomials,
// e_nu = sum_{mu <= nu'} a_{nu,mu} m_mu. Computed by expanding the product
// as an actual multivariate polynomial in enough variables and reading off
// the coefficient of x^mu. Zero outside the support; a_{nu,nu'} = 1.
Int elem_to_monomial_coeff(const Partition& nu, const Partition& mu);

} // namespace stmult
