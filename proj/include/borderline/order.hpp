#pragma once

#include <string>
#include <vector>

#include "borderline/monomial.hpp"
#include "borderline/ring.hpp"

namespace borderline {

// A global monomial order.  Optionally a weight vector is compared first
// (larger weight = larger monomial), then ties fall through to the base
// comparison (graded reverse lexicographic or lexicographic over an explicit
// variable ranking).
class MonomialOrder {
 public:
  enum class Base { grevlex, lex };

  // rank_to_var lists the variables from largest to smallest.
  static MonomialOrder grevlex(std::vector<int> rank_to_var);
  static MonomialOrder lex(std::vector<int> rank_to_var);
  static MonomialOrder weighted(std::vector<long> weights, MonomialOrder tie);
  // Canonical order: grevlex with variable 0 largest.
  static MonomialOrder canonical(const Ring& R);
  // Grevlex with the given variable smallest, others in canonical ranking.
  static MonomialOrder grevlex_with_smallest(const Ring& R, int var);

  // Descriptor syntax (variables listed ascending, so the last is largest):
  //   "grevlex:y0<y1<y2"  "lex:c3<c2<c1<b3<b2<b1<a3<a2<a1"
  //   "weight:[1,2,3,1,2,3,1,2,3]"
  static MonomialOrder from_descriptor(const Ring& R, const std::string& d);

  // Returns <0, 0, >0 when a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool has_weights() const { return !weights_.empty(); }
  const std::vector<long>& weights() const { return weights_; }
  Base base() const { return base_; }
  const std::vector<int>& rank_to_var() const { return rank_to_var_; }
  std::string descriptor(const Ring& R) const;

 private:
  Base base_ = Base::grevlex;
  std::vector<int> rank_to_var_;  // rank r -> variable index
  std::vector<int> var_to_rank_;
  std::vector<long> weights_;
  void finish();
};

}  // namespace borderline
