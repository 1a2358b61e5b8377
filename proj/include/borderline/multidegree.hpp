#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace borderline {

// Element of the grading group Z^s (s = number of factors of the ambient
// product of projective spaces).  Comparisons are componentwise.
struct Multidegree {
  std::vector<int> v;

  Multidegree() = default;
  explicit Multidegree(std::size_t s, int fill = 0) : v(s, fill) {}
  Multidegree(std::initializer_list<int> init) : v(init) {}

  std::size_t size() const { return v.size(); }
  int operator[](std::size_t i) const { return v[i]; }
  int& operator[](std::size_t i) { return v[i]; }

  int total() const { return std::accumulate(v.begin(), v.end(), 0); }

  bool operator==(const Multidegree& o) const { return v == o.v; }
  bool operator!=(const Multidegree& o) const { return v != o.v; }

  // Componentwise partial order.
  bool leq(const Multidegree& o) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] > o.v[i]) return false;
    return true;
  }
  bool nonnegative() const {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
  }

  Multidegree operator+(const Multidegree& o) const {
    Multidegree r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }
  Multidegree operator-(const Multidegree& o) const {
    Multidegree r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
  }

  // Lexicographic order on the underlying vectors; used only to give
  // deterministic orderings of degree lists, not as a monomial order.
  bool lex_less(const Multidegree& o) const { return v < o.v; }

  static Multidegree unit(std::size_t s, std::size_t i) {
    Multidegree r(s);
    r.v[i] = 1;
    return r;
  }
  static Multidegree ones(std::size_t s) { return Multidegree(s, 1); }

  std::string str() const {
    if (v.size() == 1) return std::to_string(v[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ')';
    return os.str();
  }
};

struct MultidegreeHash {
  std::size_t operator()(const Multidegree& d) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : d.v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// All u with 0 <= u <= hi componentwise, emitted in lexicographic order.
inline std::vector<Multidegree> degree_box(const Multidegree& hi) {
  std::vector<Multidegree> out;
  Multidegree u(hi.size(), 0);
  while (true) {
    out.push_back(u);
    std::size_t i = hi.size();
    while (i > 0) {
      --i;
      if (u[i] < hi[i]) {
        ++u[i];
        for (std::size_t j = i + 1; j < hi.size(); ++j) u[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (hi.size() == 0) return out;
  }
}

}  // namespace borderline
