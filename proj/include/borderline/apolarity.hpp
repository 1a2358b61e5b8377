#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borderline/ideal.hpp"
#include "borderline/linalg.hpp"
#include "borderline/polynomial.hpp"

namespace borderline {

// Differentiation action of the operator ring on forms: the i-th operator
// variable acts as d/dx_i on the i-th form variable, so an operator monomial
// y^a sends x^b to (b falling-factorial a) * x^(b-a), and to 0 unless a <= b.
// `psi` lives in R or R->dual() of F's ring; the result lives in F's ring.
Polynomial apolar_action(const Polynomial& psi, const Polynomial& F);

// Matrix of the pairing (operators of degree u) x (form F): rows are indexed
// by the degree-u monomial basis of the operator ring, columns by the
// monomial basis of F's ring in degree deg(F) - u, both in canonical order.
// Entry (m, m') = coefficient of m' in m applied to F.
QMatrix catalecticant(const Polynomial& F, const Multidegree& u);
long catalecticant_rank(const Polynomial& F, const Multidegree& u);

// Minimal generators of the annihilator { psi : psi applied to F = 0 }.
// Scans all degrees u <= deg(F) + (1,...,1): inside the degree box the
// kernel of the catalecticant is completed against multiples of previously
// found generators; outside it every monomial not already in the ideal is a
// generator.  The result is certified by comparing the Hilbert function of
// the returned ideal with the catalecticant ranks over the whole box; a
// certification failure raises inconclusive_error.
Ideal annihilator(const Polynomial& F);

// Block-by-block conciseness: block b is concise when the catalecticant in
// the unit degree of block b has rank equal to the block's variable count.
std::vector<bool> concise_blocks(const Polynomial& F);
bool is_concise(const Polynomial& F);

// Determinant of a square polynomial matrix (Laplace expansion with
// column-subset memoisation; intended for small matrices).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// Determinant of the matrix of second partial derivatives (single block).
Polynomial hessian(const Polynomial& F);

// For a single-block form of even degree 2p-2: true when every
// catalecticant in degrees 1..p-1 has full rank (no operator of degree
// < p annihilates F).  Degree mismatch is rejected.
bool is_nondegenerate_even(const Polynomial& F, long p);

// Greatest common divisor of a basis of the degree-u kernel (operators of
// degree u annihilating F); nullopt when the kernel is zero or the gcd is
// constant.  Used to detect a shared factor among middle-degree kernels of
// plane forms.
std::optional<Polynomial> kernel_common_factor(const Polynomial& F,
                                               const Multidegree& u);

// Rewrite F in a minimal number of variables: a linear change of form
// variables after which F involves only the first k = HF(S/Ann(F), (1,..))
// of them.  Single-block rings only.  The returned form lives in a k-variable
// single-block ring and is concise there (certified).
struct EssentialForm {
  Polynomial form;
  int essential_count = 0;
};
EssentialForm essential_form(const Polynomial& F);

// Dense tensor input: {"shape":[m1,...,ms],"entries":[...]} with entries in
// row-major order (integers or "p/q" strings).  Produces the associated
// multilinear form of degree (1,...,1) on P^{m1-1} x ... x P^{ms-1}.
Polynomial tensor_from_json(const std::string& json_text);
Polynomial tensor_from_json_file(const std::string& path);

}  // namespace borderline
