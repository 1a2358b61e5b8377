#pragma once

#include <vector>

#include "borderline/polynomial.hpp"

namespace borderline {

// Greatest common divisor over Q via primitive pseudo-remainder sequences,
// recursing over the variables.  Results are monic in the canonical order;
// the gcd of coprime inputs is the constant 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd_list(const std::vector<Polynomial>& fs);

}  // namespace borderline
