#pragma once

#include <optional>
#include <vector>

#include "borderline/ideal.hpp"
#include "borderline/order.hpp"

namespace borderline {

// Reduced Groebner basis.  Elements are monic; when degree_cap >= 0 the
// basis is only complete through that total degree (valid for homogeneous
// input, used for Hilbert-function queries below the cap).
struct GroebnerBasis {
  RingPtr R;
  MonomialOrder order;
  int degree_cap = -1;
  std::vector<Polynomial> g;
  std::vector<Monomial> lead;  // leading monomials of g under `order`

  bool is_monomial_basis() const {
    for (const Polynomial& p : g)
      if (p.nterms() > 1) return false;
    return true;
  }
};

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       int degree_cap = -1);
GroebnerBasis groebner(const Ideal& I);

// Full normal form with respect to gb (tail-reduced); idempotent, and zero
// exactly on ideal members (through the cap when truncated).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);

// Verifies Buchberger's criterion outright (no shortcuts).
bool is_groebner_basis(const std::vector<Polynomial>& g,
                       const MonomialOrder& order);

// Monomial ideal of leading terms of the reduced basis.
Ideal initial_ideal(const Ideal& I, const MonomialOrder& order);

// Flat-limit initial forms for a weight vector: for homogeneous I, the ideal
// generated by the terms of *minimal* w-weight of the elements (the limit of
// the one-parameter substitution x_v -> t^{w_v} x_v as t -> 0).
Ideal w_initial_forms(const Ideal& I, const std::vector<long>& w);
Polynomial w_initial_form(const Polynomial& f, const std::vector<long>& w);

bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& f);   // (I : f)
Ideal colon_ideal(const Ideal& I, const Ideal& J);  // (I : J)
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal saturate_ideal(const Ideal& I, const Ideal& J);
// (I : B^infinity) for the irrelevant ideal B of the product of projective
// spaces (one generator per choice of a variable from each block).
Ideal saturate_irrelevant(const Ideal& I);
bool is_irrelevant_saturated(const Ideal& I);

// Minimal generators of a homogeneous ideal (degree-by-degree completion).
Ideal minimalize(const Ideal& I);

// --- modules -----------------------------------------------------------

// Generating set (a Groebner basis) of the syzygy module of the given
// vectors in S^t, using position-over-term with lower components larger.
// Every input vector must be homogeneous for the component shifts implied by
// its own degrees; shifts are supplied explicitly.
struct ModuleElement {
  std::vector<Polynomial> coord;
};

std::vector<ModuleElement> module_syzygies(
    const std::vector<ModuleElement>& vecs, const MonomialOrder& order);

std::vector<ModuleElement> ideal_syzygies(const std::vector<Polynomial>& f,
                                          const MonomialOrder& order);

}  // namespace borderline
