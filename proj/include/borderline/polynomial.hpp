#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borderline/basics.hpp"
#include "borderline/monomial.hpp"

namespace borderline {

struct Term {
  Monomial m;
  Q c;
};

// A polynomial with exact rational coefficients.  Terms are kept sorted
// strictly descending in the canonical order, with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr R) : R_(std::move(R)) {}
  Polynomial(RingPtr R, std::vector<Term> terms);

  static Polynomial zero(RingPtr R) { return Polynomial(std::move(R)); }
  static Polynomial constant(RingPtr R, const Q& c);
  static Polynomial monomial(RingPtr R, Monomial m, Q c = 1);
  static Polynomial variable(RingPtr R, int v);

  const RingPtr& ring() const { return R_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t nterms() const { return t_.size(); }

  // Leading data in the canonical order.
  const Term& leading_term() const;

  int total_degree() const;  // max over terms; -1 for 0
  // Multidegree when homogeneous, nullopt otherwise.
  std::optional<Multidegree> multidegree() const;
  bool is_homogeneous() const { return is_zero() || multidegree().has_value(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Q& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Multiply by a single term.
  Polynomial times_term(const Monomial& m, const Q& c) const;

  // Coefficient of a monomial (0 if absent).
  Q coeff(const Monomial& m) const;

  // Divide by the leading coefficient (error on zero polynomial).
  Polynomial monic() const;

  // Exact division by a polynomial with a single term; error when any term
  // is not divisible.
  Polynomial divide_by_term(const Monomial& m, const Q& c) const;

  // Substitute images[v] for variable v; images live in ring S2.
  Polynomial substitute(const RingPtr& S2,
                        const std::vector<Polynomial>& images) const;

  // Split into homogeneous parts, keyed by multidegree.
  std::vector<Polynomial> homogeneous_components() const;

  std::string str() const;

 private:
  RingPtr R_;
  std::vector<Term> t_;  // sorted descending, canonical order
  void normalize();
};

Polynomial operator*(const Q& c, const Polynomial& p);

// Exact polynomial quotient g / f (nullopt when f does not divide g).
std::optional<Polynomial> try_divide_exact(const Polynomial& g,
                                           const Polynomial& f);

// Parse a polynomial in the ring's variables.  Grammar: sums/differences of
// products of powers of variables, integer or rational literals, and
// parenthesised subexpressions.
Polynomial parse_polynomial(const RingPtr& R, const std::string& text);
std::vector<Polynomial> parse_polynomial_list(const RingPtr& R,
                                              const std::string& text);

std::string monomial_str(const Ring& R, const Monomial& m);

}  // namespace borderline
