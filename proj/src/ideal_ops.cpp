#include <algorithm>
#include <map>

#include "borderline/groebner.hpp"
#include "borderline/linalg.hpp"

namespace borderline {

namespace {

// Index of the single variable when f is a scalar multiple of one variable.
int single_variable(const Polynomial& f) {
  if (f.nterms() != 1) return -1;
  const Monomial& m = f.leading_term().m;
  int var = -1;
  for (std::size_t v = 0; v < m.e.size(); ++v) {
    if (m.e[v] == 0) continue;
    if (var != -1 || m.e[v] != 1) return -1;
    var = static_cast<int>(v);
  }
  return var;
}

Polynomial strip_variable_power(const Polynomial& g, int var) {
  int k = 0;
  bool first = true;
  for (const Term& t : g.terms()) {
    if (first || t.m.e[var] < k) k = t.m.e[var];
    first = false;
  }
  if (k == 0) return g;
  Monomial m(g.terms().front().m.e.size());
  m.e[var] = k;
  return g.divide_by_term(m, Q(1));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.R, J.R)) throw input_error("intersect: ring mismatch");
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;
  if (!I.all_homogeneous() || !J.all_homogeneous())
    throw input_error("intersect requires homogeneous ideals");
  const RingPtr& R = I.R;
  int n = R->nvars();
  RingPtr H = Ring::product({n + 1}, R->side());

  auto lift = [&](const Polynomial& p, int tpow) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
      Monomial m(static_cast<std::size_t>(n + 1));
      m.e[0] = tpow;
      std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin() + 1);
      terms.push_back({std::move(m), t.c});
    }
    return Polynomial(H, std::move(terms));
  };

  Ideal helper(H);
  for (const Polynomial& f : I.gens) helper.gens.push_back(lift(f, 1));
  for (const Polynomial& g : J.gens)
    helper.gens.push_back(lift(g, 0) - lift(g, 1));

  // Eliminate the auxiliary variable: weight it first, grevlex ties.
  std::vector<long> w(n + 1, 0);
  w[0] = 1;
  MonomialOrder ord = MonomialOrder::weighted(std::move(w), MonomialOrder::canonical(*H));
  GroebnerBasis gb = groebner(helper, ord);

  Ideal out(R);
  for (const Polynomial& g : gb.g) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                 [](const Term& t) { return t.m.e[0] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Monomial m(static_cast<std::size_t>(n));
      std::copy(t.m.e.begin() + 1, t.m.e.end(), m.e.begin());
      terms.push_back({std::move(m), t.c});
    }
    Polynomial mapped(R, std::move(terms));
    // The eliminated generators need not be homogeneous; their homogeneous
    // parts generate the same (homogeneous) intersection.
    for (Polynomial& part : mapped.homogeneous_components())
      out.gens.push_back(std::move(part));
  }
  out.drop_zeros();
  return out;
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw input_error("colon by the zero polynomial");
  Ideal cut = intersect(I, Ideal(I.R, {f}));
  Ideal out(I.R);
  for (const Polynomial& g : cut.gens) {
    std::optional<Polynomial> q = try_divide_exact(g, f);
    if (!q) throw input_error("internal: intersection element not divisible");
    out.gens.push_back(std::move(*q));
  }
  out.drop_zeros();
  return out;
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  if (J.is_zero())
    return Ideal(I.R, {Polynomial::constant(I.R, 1)});
  bool first = true;
  Ideal acc(I.R);
  for (const Polynomial& g : J.gens) {
    Ideal piece = colon(I, g);
    acc = first ? piece : intersect(acc, piece);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw input_error("saturation by the zero polynomial");
  if (I.is_zero()) return I;
  int var = single_variable(f);
  if (var >= 0 && I.all_homogeneous()) {
    // Reverse-lex shortcut: with the variable smallest, dividing every basis
    // element by its largest power of the variable saturates the ideal.
    MonomialOrder ord = MonomialOrder::grevlex_with_smallest(*I.R, var);
    GroebnerBasis gb = groebner(I, ord);
    Ideal J(I.R);
    for (const Polynomial& g : gb.g)
      J.gens.push_back(strip_variable_power(g, var));
    // Certify the shortcut; fall back to the generic route if it failed.
    if (ideal_equal(colon(J, f), J)) return J;
  }
  Ideal cur = I;
  while (true) {
    Ideal next = colon(cur, f);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J) {
  if (I.is_zero()) return I;
  Ideal cur = I;
  while (true) {
    Ideal next = colon_ideal(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
}

Ideal saturate_irrelevant(const Ideal& I) {
  if (!I.R->is_standard_product())
    throw input_error("irrelevant saturation needs a product ring");
  if (I.is_zero()) return I;
  Ideal cur = I;
  for (int b = 0; b < I.R->nblocks(); ++b) {
    // (cur : B_b^infinity) with B_b the ideal of the block's variables.
    Ideal acc(I.R);
    bool first = true;
    for (int v = I.R->first_var_of_block(b);
         v < I.R->first_var_of_block(b) + I.R->block_size(b); ++v) {
      Ideal piece = saturate(cur, Polynomial::variable(I.R, v));
      acc = first ? piece : intersect(acc, piece);
      first = false;
    }
    cur = std::move(acc);
  }
  return cur;
}

bool is_irrelevant_saturated(const Ideal& I) {
  return ideal_equal(saturate_irrelevant(I), I);
}

Ideal minimalize(const Ideal& I) {
  if (!I.all_homogeneous())
    throw input_error("minimalize requires homogeneous generators");
  // Group the generators by multidegree.
  std::map<std::vector<int>, std::vector<Polynomial>> by_degree;
  for (const Polynomial& g : I.gens)
    if (!g.is_zero()) by_degree[g.multidegree()->v].push_back(g);
  std::vector<std::vector<int>> degrees;
  for (auto& [d, _] : by_degree) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end(), [](const auto& a, const auto& b) {
    int ta = 0, tb = 0;
    for (int x : a) ta += x;
    for (int x : b) tb += x;
    if (ta != tb) return ta < tb;
    return a < b;
  });

  Ideal out(I.R);
  for (const auto& dv : degrees) {
    Multidegree u;
    u.v = dv;
    std::vector<Monomial> basis = monomial_basis(*I.R, u);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = i;
    auto vec = [&](const Polynomial& p) {
      std::vector<Q> v(basis.size(), Q(0));
      for (const Term& t : p.terms()) v[index.at(t.m.e)] = t.c;
      return v;
    };
    RowSpace span(basis.size());
    for (const Polynomial& g : out.gens) {
      Multidegree dg = *g.multidegree();
      Multidegree shift = u - dg;
      if (!shift.nonnegative() || shift.total() == 0) continue;
      for (const Monomial& m : monomial_basis(*I.R, shift))
        span.insert(vec(g.times_term(m, Q(1))));
    }
    for (const Polynomial& cand : by_degree[dv])
      if (span.insert(vec(cand))) out.gens.push_back(cand);
  }
  return out;
}

}  // namespace borderline
