#pragma once

#include <cstddef>
#include <vector>

#include "borderline/ring.hpp"

namespace borderline {

// Exponent vector; the owning polynomial knows the ring.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  int total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  Multidegree degree(const Ring& R) const {
    Multidegree d(R.grading_rank(), 0);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) {
        const Multidegree& dv = R.var_degree(static_cast<int>(v));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += e[v] * dv[i];
      }
    return d;
  }
  bool is_one() const {
    for (int x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Canonical comparison used for storage and printing: graded reverse
// lexicographic with variable 0 largest.  Returns true when a < b.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // a < b  iff the last nonzero entry of a-b is positive.
  for (std::size_t i = a.e.size(); i > 0;) {
    --i;
    int d = a.e[i] - b.e[i];
    if (d) return d > 0;
  }
  return false;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.e) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// All monomials of the ring of multidegree u, sorted descending in the
// canonical order (deterministic basis used for matrices and printing).
std::vector<Monomial> monomial_basis(const Ring& R, const Multidegree& u);

// All monomials of total degree <= cap (every multidegree), canonical order.
std::vector<Monomial> monomials_up_to_total_degree(const Ring& R, int cap);

}  // namespace borderline
