#pragma once

#include <string>
#include <vector>

#include "borderline/polynomial.hpp"

namespace borderline {

// A finitely generated ideal, kept as an explicit generator list.  Most
// operations require the generators to be homogeneous for the ring grading.
struct Ideal {
  RingPtr R;
  std::vector<Polynomial> gens;

  Ideal() = default;
  explicit Ideal(RingPtr ring) : R(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> g)
      : R(std::move(ring)), gens(std::move(g)) {
    drop_zeros();
  }

  bool is_zero() const { return gens.empty(); }
  bool all_homogeneous() const {
    for (const Polynomial& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }
  void drop_zeros() {
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  }
  Ideal operator+(const Ideal& o) const {
    Ideal r = *this;
    r.gens.insert(r.gens.end(), o.gens.begin(), o.gens.end());
    r.drop_zeros();
    return r;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ", ";
      s += gens[i].str();
    }
    return s + ")";
  }
};

inline Ideal parse_ideal(const RingPtr& R, const std::string& text) {
  return Ideal(R, parse_polynomial_list(R, text));
}

}  // namespace borderline
