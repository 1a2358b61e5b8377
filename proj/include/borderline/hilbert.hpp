#pragma once

#include <optional>

#include "borderline/groebner.hpp"

namespace borderline {

// dim_Q (S/I)_u, counted as the standard monomials of multidegree u for a
// (possibly degree-truncated) basis; the truncation must cover |u|.
long hilbert_function(const GroebnerBasis& gb, const Multidegree& u);
long hilbert_function(const Ideal& I, const Multidegree& u);

// Monomials of multidegree u outside the initial ideal: a basis of the
// degree-u piece of the quotient ring, in descending canonical order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb,
                                         const Multidegree& u);

// Hilbert function of a generic arrangement of r points: min(r, dim S_u).
long generic_hilbert_function(const Ring& R, long r, const Multidegree& u);

struct GenericHFCheck {
  bool ok = true;
  Multidegree first_failure;  // meaningful when !ok
  long expected = 0, actual = 0;
};

// Compares HF(S/I, u) with min(r, dim S_u) for every u in the box
// 0 <= u <= hi, scanning by increasing total degree then lexicographically.
GenericHFCheck has_generic_hf(const Ideal& I, long r, const Multidegree& hi);

// Eventual constant value of the Hilbert function along the diagonal after
// saturating by the irrelevant ideal.  The walk stops once the value agrees
// with all its coordinate successors twice in a row; it gives up (error)
// past diagonal degree 60 or when the function keeps growing.
long stable_value(const Ideal& I, int diagonal_cap = 60);

// True when the saturated Hilbert function stabilizes exactly at r; early
// abort (false) as soon as it exceeds r.
bool has_stable_value(const Ideal& I, long r, int diagonal_cap = 60);

// Macaulay's bound: the largest value HF(A, d+1) can take for a standard
// graded algebra A with HF(A, d) = h   (h and the result as long).
long macaulay_upper(long h, long d);

}  // namespace borderline
