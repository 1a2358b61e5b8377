#include "borderline/gcd.hpp"

#include <algorithm>
#include <map>

namespace borderline {

namespace {

int deg_in_var(const Polynomial& p, int v) {
  int d = -1;
  for (const Term& t : p.terms()) d = std::max(d, t.m.e[v]);
  return d;
}

int max_var_present(const Polynomial& p) {
  int v = -1;
  for (const Term& t : p.terms())
    for (int i = static_cast<int>(t.m.e.size()) - 1; i > v; --i)
      if (t.m.e[i] > 0) {
        v = i;
        break;
      }
  return v;
}

// p viewed in R[other vars][x_v]: coefficient of x_v^e for each e present.
std::map<int, Polynomial> coeffs_in_var(const Polynomial& p, int v) {
  std::map<int, Polynomial> out;
  for (const Term& t : p.terms()) {
    Monomial m = t.m;
    int e = m.e[v];
    m.e[v] = 0;
    auto it = out.find(e);
    if (it == out.end())
      it = out.emplace(e, Polynomial::zero(p.ring())).first;
    it->second = it->second + Polynomial::monomial(p.ring(), std::move(m), t.c);
  }
  return out;
}

Polynomial content_in_var(const Polynomial& p, int v) {
  Polynomial g = Polynomial::zero(p.ring());
  for (const auto& [e, c] : coeffs_in_var(p, v)) g = poly_gcd(g, c);
  return g;
}

// Classical pseudo-remainder of a by b in the variable x_v; requires b to
// involve x_v.  Each step multiplies through by b's leading x_v-coefficient,
// so the result is only meaningful up to content.
Polynomial prem(Polynomial a, const Polynomial& b, int v) {
  int db = deg_in_var(b, v);
  Polynomial lb = coeffs_in_var(b, v).rbegin()->second;
  while (!a.is_zero()) {
    int da = deg_in_var(a, v);
    if (da < db) break;
    Polynomial la = coeffs_in_var(a, v).rbegin()->second;
    Monomial shift(static_cast<std::size_t>(a.ring()->nvars()));
    shift.e[v] = da - db;
    a = a * lb - la.times_term(shift, Q(1)) * b;
    if (!a.is_zero() && deg_in_var(a, v) >= da)
      throw inconclusive_error("pseudo-division failed to reduce the degree");
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero()) return b0.is_zero() ? b0 : b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (!same_ring(a0.ring(), b0.ring()))
    throw input_error("gcd of polynomials in different rings");

  int v = std::max(max_var_present(a0), max_var_present(b0));
  if (v < 0) return Polynomial::constant(a0.ring(), Q(1));

  Polynomial ca = content_in_var(a0, v);
  Polynomial cb = content_in_var(b0, v);
  Polynomial d = poly_gcd(ca, cb);
  std::optional<Polynomial> A = try_divide_exact(a0, ca);
  std::optional<Polynomial> B = try_divide_exact(b0, cb);
  if (!A || !B)
    throw inconclusive_error("content division failed in gcd computation");
  if (deg_in_var(*A, v) < deg_in_var(*B, v)) std::swap(A, B);
  while (true) {
    if (deg_in_var(*B, v) <= 0) {
      // Primitive and free of x_v: coprime to A in R[x_v] unless constant.
      return d;
    }
    Polynomial r = prem(*A, *B, v);
    if (r.is_zero()) return (d * *B).monic();
    if (deg_in_var(r, v) == 0) return d;
    A = B;
    Polynomial cr = content_in_var(r, v);
    B = try_divide_exact(r, cr);
    if (!B)
      throw inconclusive_error("content division failed in gcd computation");
  }
}

Polynomial poly_gcd_list(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw input_error("gcd of an empty list");
  Polynomial g = Polynomial::zero(fs.front().ring());
  for (const Polynomial& f : fs) g = poly_gcd(g, f);
  return g;
}

}  // namespace borderline
