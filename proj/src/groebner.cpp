#include "borderline/groebner.hpp"

#include <algorithm>
#include <set>

namespace borderline {

namespace {

// Working representation: terms sorted descending under the active order.
struct OP {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Q& lc() const { return t.front().c; }
};

OP to_op(const Polynomial& p, const MonomialOrder& o) {
  OP r;
  r.t = p.terms();
  std::sort(r.t.begin(), r.t.end(),
            [&o](const Term& a, const Term& b) { return o.cmp(a.m, b.m) > 0; });
  return r;
}

Polynomial from_op(const RingPtr& R, const OP& f) {
  return Polynomial(R, f.t);
}

// a - c * x^m * g   (merge of sorted lists)
OP sub_scaled(const OP& a, const Q& c, const Monomial& m, const OP& g,
              const MonomialOrder& o) {
  OP r;
  r.t.reserve(a.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < g.t.size()) {
    Monomial gm = g.t[j].m * m;
    int cmp = o.cmp(a.t[i].m, gm);
    if (cmp > 0) {
      r.t.push_back(a.t[i]);
      ++i;
    } else if (cmp < 0) {
      r.t.push_back({std::move(gm), -c * g.t[j].c});
      ++j;
    } else {
      Q coeff = a.t[i].c - c * g.t[j].c;
      if (coeff != 0) r.t.push_back({a.t[i].m, std::move(coeff)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < g.t.size(); ++j)
    r.t.push_back({g.t[j].m * m, -c * g.t[j].c});
  return r;
}

OP make_monic(OP f) {
  if (f.zero()) return f;
  Q inv = Q(1) / f.lc();
  for (Term& t : f.t) t.c *= inv;
  return f;
}

// Full normal form against `basis` (tail reduced).
OP reduce_full(OP f, const std::vector<OP>& basis, const MonomialOrder& o) {
  OP out;
  std::size_t cursor = 0;  // index of current lead within f.t
  while (cursor < f.t.size()) {
    const Monomial& lm = f.t[cursor].m;
    const OP* red = nullptr;
    for (const OP& g : basis)
      if (!g.zero() && g.lm().divides(lm)) {
        red = &g;
        break;
      }
    if (!red) {
      out.t.push_back(f.t[cursor]);
      ++cursor;
      continue;
    }
    OP rest;
    rest.t.assign(f.t.begin() + cursor, f.t.end());
    rest = sub_scaled(rest, rest.t.front().c / red->lc(), lm / red->lm(), *red, o);
    f.t.resize(cursor);
    f.t.insert(f.t.end(), rest.t.begin(), rest.t.end());
  }
  return out;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

struct PairLess {
  const MonomialOrder* o;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = o->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       int degree_cap) {
  if (degree_cap >= 0 && !I.all_homogeneous())
    throw input_error("degree-truncated bases need homogeneous generators");
  std::vector<OP> G;
  for (const Polynomial& p : I.gens) {
    if (p.is_zero()) continue;
    if (degree_cap >= 0 && p.total_degree() > degree_cap) continue;
    G.push_back(make_monic(to_op(p, order)));
  }

  std::set<Pair, PairLess> pairs(PairLess{&order});
  std::set<std::pair<int, int>> pending;  // unordered index pairs still queued
  auto push_pair = [&](int i, int j) {
    Pair p{i, j, Monomial::lcm(G[i].lm(), G[j].lm()), 0};
    p.deg = p.lcm.total_degree();
    pairs.insert(p);
    pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (degree_cap >= 0 && p.deg > degree_cap) break;
    pending.erase({p.i, p.j});
    // Buchberger's first criterion: coprime leading monomials.
    if (G[p.i].lm().coprime(G[p.j].lm())) continue;
    // Chain criterion: some third element divides the lcm and both side
    // pairs have already left the queue.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lm().divides(p.lcm)) continue;
      auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;
    const OP& f = G[p.i];
    const OP& g = G[p.j];
    OP fs;
    fs.t.reserve(f.t.size());
    Monomial mf = p.lcm / f.lm();
    for (const Term& t : f.t) fs.t.push_back({t.m * mf, t.c / f.lc()});
    OP s = sub_scaled(fs, Q(1) / g.lc(), p.lcm / g.lm(), g, order);
    s = reduce_full(std::move(s), G, order);
    if (s.zero()) continue;
    s = make_monic(std::move(s));
    G.push_back(std::move(s));
    int n = static_cast<int>(G.size()) - 1;
    for (int i = 0; i < n; ++i) push_pair(i, n);
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(G.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm())) {
        // Tie-break equal leads by index so exactly one survives.
        if (G[i].lm() == G[j].lm())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<OP> M;
  for (int i : keep) M.push_back(G[i]);
  // Inter-reduce tails.
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<OP> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    M[i] = make_monic(reduce_full(M[i], others, order));
  }
  std::sort(M.begin(), M.end(), [&order](const OP& a, const OP& b) {
    return order.cmp(a.lm(), b.lm()) < 0;
  });

  GroebnerBasis gb;
  gb.R = I.R;
  gb.order = order;
  gb.degree_cap = degree_cap;
  for (const OP& m : M) {
    gb.lead.push_back(m.lm());
    gb.g.push_back(from_op(I.R, m));
  }
  return gb;
}

GroebnerBasis groebner(const Ideal& I) {
  return groebner(I, MonomialOrder::canonical(*I.R));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.degree_cap >= 0 && f.total_degree() > gb.degree_cap)
    throw input_error("normal form beyond the truncation cap");
  std::vector<OP> basis;
  basis.reserve(gb.g.size());
  for (const Polynomial& g : gb.g) basis.push_back(to_op(g, gb.order));
  return from_op(f.ring() ? f.ring() : gb.R,
                 reduce_full(to_op(f, gb.order), basis, gb.order));
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool is_groebner_basis(const std::vector<Polynomial>& gens,
                       const MonomialOrder& order) {
  std::vector<OP> G;
  for (const Polynomial& p : gens) {
    if (p.is_zero()) return false;
    G.push_back(to_op(p, order));
  }
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Monomial lcm = Monomial::lcm(G[i].lm(), G[j].lm());
      OP fs;
      Monomial mf = lcm / G[i].lm();
      for (const Term& t : G[i].t) fs.t.push_back({t.m * mf, t.c / G[i].lc()});
      OP s = sub_scaled(fs, Q(1), lcm / G[j].lm(),
                        make_monic(G[j]), order);
      if (!reduce_full(std::move(s), G, order).zero()) return false;
    }
  return true;
}

Ideal initial_ideal(const Ideal& I, const MonomialOrder& order) {
  GroebnerBasis gb = groebner(I, order);
  Ideal r(I.R);
  for (const Monomial& m : gb.lead)
    r.gens.push_back(Polynomial::monomial(I.R, m));
  return r;
}

Polynomial w_initial_form(const Polynomial& f, const std::vector<long>& w) {
  if (f.is_zero()) return f;
  long best = 0;
  bool first = true;
  for (const Term& t : f.terms()) {
    long wt = 0;
    for (std::size_t v = 0; v < w.size(); ++v) wt += w[v] * t.m.e[v];
    if (first || wt < best) best = wt, first = false;
  }
  std::vector<Term> keep;
  for (const Term& t : f.terms()) {
    long wt = 0;
    for (std::size_t v = 0; v < w.size(); ++v) wt += w[v] * t.m.e[v];
    if (wt == best) keep.push_back(t);
  }
  return Polynomial(f.ring(), std::move(keep));
}

Ideal w_initial_forms(const Ideal& I, const std::vector<long>& w) {
  if (static_cast<int>(w.size()) != I.R->nvars())
    throw input_error("weight vector needs one entry per variable");
  if (!I.all_homogeneous())
    throw input_error("w-initial forms need homogeneous generators");
  long maxw = *std::max_element(w.begin(), w.end());
  std::vector<long> comp(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) comp[v] = maxw + 1 - w[v];
  MonomialOrder ord =
      MonomialOrder::weighted(std::move(comp), MonomialOrder::canonical(*I.R));
  GroebnerBasis gb = groebner(I, ord);
  Ideal r(I.R);
  for (const Polynomial& g : gb.g) r.gens.push_back(w_initial_form(g, w));
  return r;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  GroebnerBasis gb = groebner(I);
  for (const Polynomial& g : J.gens)
    if (!in_ideal(g, gb)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  GroebnerBasis a = groebner(I);
  GroebnerBasis b = groebner(J);
  if (a.g.size() != b.g.size()) return false;
  for (std::size_t i = 0; i < a.g.size(); ++i)
    if (a.g[i] != b.g[i]) return false;
  return true;
}

}  // namespace borderline
