#include <algorithm>
#include <set>

#include "borderline/groebner.hpp"

namespace borderline {

namespace {

// Free-module term: component, monomial, coefficient.  Position-over-term
// with lower component indices larger, ties by the monomial order.
struct MTerm {
  int comp;
  Monomial m;
  Q c;
};

struct MOP {
  std::vector<MTerm> t;  // sorted descending
  bool zero() const { return t.empty(); }
  const MTerm& lt() const { return t.front(); }
};

int cmp_mterm(const MTerm& a, const MTerm& b, const MonomialOrder& o) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return o.cmp(a.m, b.m);
}

bool mdivides(const MTerm& a, const MTerm& b) {
  return a.comp == b.comp && a.m.divides(b.m);
}

// a - c * x^m * g
MOP msub_scaled(const MOP& a, const Q& c, const Monomial& m, const MOP& g,
                const MonomialOrder& o) {
  MOP r;
  r.t.reserve(a.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < g.t.size()) {
    MTerm shifted{g.t[j].comp, g.t[j].m * m, -c * g.t[j].c};
    int cmp = cmp_mterm(a.t[i], shifted, o);
    if (cmp > 0) {
      r.t.push_back(a.t[i]);
      ++i;
    } else if (cmp < 0) {
      r.t.push_back(std::move(shifted));
      ++j;
    } else {
      Q coeff = a.t[i].c + shifted.c;
      if (coeff != 0) r.t.push_back({a.t[i].comp, a.t[i].m, std::move(coeff)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < g.t.size(); ++j)
    r.t.push_back({g.t[j].comp, g.t[j].m * m, -c * g.t[j].c});
  return r;
}

MOP mmonic(MOP f) {
  if (f.zero()) return f;
  Q inv = Q(1) / f.lt().c;
  for (MTerm& t : f.t) t.c *= inv;
  return f;
}

MOP mreduce(MOP f, const std::vector<MOP>& basis, const MonomialOrder& o) {
  MOP out;
  std::size_t cursor = 0;
  while (cursor < f.t.size()) {
    const MTerm& lead = f.t[cursor];
    const MOP* red = nullptr;
    for (const MOP& g : basis)
      if (!g.zero() && mdivides(g.lt(), lead)) {
        red = &g;
        break;
      }
    if (!red) {
      out.t.push_back(lead);
      ++cursor;
      continue;
    }
    MOP rest;
    rest.t.assign(f.t.begin() + cursor, f.t.end());
    rest = msub_scaled(rest, lead.c / red->lt().c, lead.m / red->lt().m, *red, o);
    f.t.resize(cursor);
    f.t.insert(f.t.end(), rest.t.begin(), rest.t.end());
  }
  return out;
}

struct MPair {
  int i, j, comp;
  Monomial lcm;
  int deg;
};

std::vector<MOP> module_groebner(std::vector<MOP> G, const MonomialOrder& order) {
  std::erase_if(G, [](const MOP& g) { return g.zero(); });
  for (MOP& g : G) g = mmonic(std::move(g));

  auto pair_less = [&order](const MPair& a, const MPair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.comp != b.comp) return a.comp < b.comp;
    int c = order.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<MPair, decltype(pair_less)> pairs(pair_less);
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    if (G[i].lt().comp != G[j].lt().comp) return;
    MPair p{i, j, G[i].lt().comp,
            Monomial::lcm(G[i].lt().m, G[j].lt().m), 0};
    p.deg = p.lcm.total_degree();
    pairs.insert(p);
    pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!pairs.empty()) {
    MPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({p.i, p.j});
    // Chain criterion (same-component divisor with both side pairs done).
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].lt().comp != p.comp || !G[k].lt().m.divides(p.lcm)) continue;
      auto key = [](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;
    const MOP& f = G[p.i];
    const MOP& g = G[p.j];
    MOP fs;
    fs.t.reserve(f.t.size());
    Monomial mf = p.lcm / f.lt().m;
    for (const MTerm& t : f.t) fs.t.push_back({t.comp, t.m * mf, t.c / f.lt().c});
    MOP s = msub_scaled(fs, Q(1) / g.lt().c, p.lcm / g.lt().m, g, order);
    s = mreduce(std::move(s), G, order);
    if (s.zero()) continue;
    G.push_back(mmonic(std::move(s)));
    int n = static_cast<int>(G.size()) - 1;
    for (int i = 0; i < n; ++i) push_pair(i, n);
  }

  // Minimalize and inter-reduce for a deterministic output.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(G.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
      if (i == j) continue;
      if (mdivides(G[j].lt(), G[i].lt())) {
        if (G[j].lt().comp == G[i].lt().comp && G[j].lt().m == G[i].lt().m)
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<MOP> M;
  for (int i : keep) M.push_back(G[i]);
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<MOP> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    M[i] = mmonic(mreduce(M[i], others, order));
  }
  std::sort(M.begin(), M.end(), [&order](const MOP& a, const MOP& b) {
    return cmp_mterm(a.lt(), b.lt(), order) < 0;
  });
  return M;
}

}  // namespace

std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& vecs,
                                           const MonomialOrder& order) {
  if (vecs.empty()) return {};
  const std::size_t t = vecs[0].coord.size();
  RingPtr R;
  for (const ModuleElement& v : vecs)
    for (const Polynomial& p : v.coord)
      if (p.ring()) R = p.ring();
  if (!R) throw input_error("module_syzygies: cannot infer the ring");

  const std::size_t s = vecs.size();
  std::vector<MOP> rows;
  for (std::size_t k = 0; k < s; ++k) {
    if (vecs[k].coord.size() != t)
      throw input_error("module_syzygies: ragged input");
    MOP row;
    for (std::size_t c = 0; c < t; ++c)
      for (const Term& term : vecs[k].coord[c].terms())
        row.t.push_back({static_cast<int>(c), term.m, term.c});
    Monomial one(static_cast<std::size_t>(R->nvars()));
    row.t.push_back({static_cast<int>(t + k), one, Q(1)});
    std::sort(row.t.begin(), row.t.end(), [&order](const MTerm& a, const MTerm& b) {
      return cmp_mterm(a, b, order) > 0;
    });
    rows.push_back(std::move(row));
  }

  std::vector<MOP> gb = module_groebner(std::move(rows), order);
  std::vector<ModuleElement> out;
  for (const MOP& g : gb) {
    bool front_zero = std::all_of(g.t.begin(), g.t.end(), [&](const MTerm& mt) {
      return mt.comp >= static_cast<int>(t);
    });
    if (!front_zero) continue;
    ModuleElement e;
    e.coord.assign(s, Polynomial::zero(R));
    std::vector<std::vector<Term>> parts(s);
    for (const MTerm& mt : g.t)
      parts[mt.comp - t].push_back({mt.m, mt.c});
    for (std::size_t k = 0; k < s; ++k)
      e.coord[k] = Polynomial(R, std::move(parts[k]));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ModuleElement> ideal_syzygies(const std::vector<Polynomial>& f,
                                          const MonomialOrder& order) {
  std::vector<ModuleElement> vecs;
  for (const Polynomial& p : f) vecs.push_back(ModuleElement{{p}});
  return module_syzygies(vecs, order);
}

}  // namespace borderline
