#include "borderline/border_tools.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

namespace borderline {

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RingPtr operator_ring_of(const Polynomial& F) {
  if (!F.ring()) throw input_error("form without a ring");
  return F.ring()->side() == Ring::Side::apolar ? F.ring() : F.ring()->dual();
}

// Deterministic sort key for an ideal: the printed generators, sorted.
std::vector<std::string> ideal_key(const Ideal& I) {
  std::vector<std::string> key;
  key.reserve(I.gens.size());
  for (const Polynomial& g : I.gens) key.push_back(g.str());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

// ---------------------------------------------------------------------------
// Degree pieces and truncations.
// ---------------------------------------------------------------------------

std::vector<Polynomial> degree_piece_basis(const Ideal& I,
                                           const Multidegree& u) {
  if (!I.R) throw input_error("ideal without a ring");
  if (!I.all_homogeneous())
    throw input_error("degree_piece_basis needs homogeneous generators");
  std::vector<Monomial> cols = monomial_basis(*I.R, u);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
  RowSpace space(cols.size());
  std::vector<Polynomial> out;
  for (const Polynomial& g : I.gens) {
    if (g.is_zero()) continue;
    Multidegree shift = u - *g.multidegree();
    if (!shift.nonnegative()) continue;
    for (const Monomial& m : monomial_basis(*I.R, shift)) {
      Polynomial p = g.times_term(m, 1);
      std::vector<Q> v(cols.size(), Q(0));
      for (const Term& t : p.terms()) v[index.at(t.m)] = t.c;
      if (space.insert(std::move(v))) out.push_back(std::move(p));
    }
  }
  return out;
}

long degree_piece_dim(const Ideal& I, const Multidegree& u) {
  return static_cast<long>(degree_piece_basis(I, u).size());
}

Ideal truncate_ideal(const Ideal& I, int d) {
  if (!I.R) throw input_error("ideal without a ring");
  if (I.R->nblocks() != 1)
    throw input_error("truncate_ideal expects a single-block ring");
  Ideal out(I.R);
  out.gens = degree_piece_basis(I, Multidegree{d});
  for (const Polynomial& g : I.gens)
    if (!g.is_zero() && g.total_degree() > d) out.gens.push_back(g);
  return out;
}

Ideal annihilator_piece(const Polynomial& F, const Multidegree& u) {
  RingPtr S = operator_ring_of(F);
  QMatrix C = catalecticant(F, u);
  // Operators are indexed by rows; a combination annihilates F exactly when
  // it lies in the left kernel, i.e. the kernel of the transpose.
  QMatrix T(C.cols(), C.rows());
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) T.at(j, i) = C.at(i, j);
  std::vector<Monomial> basis = monomial_basis(*S, u);
  Ideal out(S);
  for (const std::vector<Q>& v : T.kernel()) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v[i] != 0) terms.push_back({basis[i], v[i]});
    out.gens.push_back(Polynomial(S, std::move(terms)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Guided enumeration.
// ---------------------------------------------------------------------------

int default_enumeration_cap(const Polynomial& F) {
  if (F.is_zero()) throw input_error("zero form has no annihilator profile");
  int k = 0;
  while (catalecticant_rank(F, Multidegree{k}) > 0) ++k;
  return k + 1;
}

std::vector<Ideal> enumerate_monomial_apolar_ideals(
    const EnumerationConfig& cfg) {
  const RingPtr& R = cfg.J0.R;
  if (!R) throw input_error("enumeration needs a base ring on the ideal");
  if (R->nblocks() != 1)
    throw input_error("enumeration expects a single-block ring");
  if (cfg.r < 1) throw input_error("enumeration target must be positive");
  if (cfg.branch_limit < 1)
    throw input_error("enumeration branch limit must be positive");
  if (!cfg.J0.all_homogeneous())
    throw input_error("enumeration needs homogeneous starting generators");
  if (cfg.filter) {
    if (cfg.filter->is_zero())
      throw input_error("enumeration filter form must be nonzero");
    if (!same_ring(R, operator_ring_of(*cfg.filter)))
      throw input_error("enumeration filter form lives in the wrong ring");
  }
  int cap = cfg.cap;
  if (cap < 0) {
    if (!cfg.filter)
      throw input_error("enumeration needs a cap when no filter form is given");
    cap = default_enumeration_cap(*cfg.filter);
  }
  for (const Polynomial& g : cfg.J0.gens)
    if (g.total_degree() > cap)
      throw input_error("enumeration cap is below a starting generator degree");

  MonomialOrder ord = MonomialOrder::canonical(*R);
  std::vector<Ideal> level{cfg.J0};
  for (int i = 0; i <= cap && !level.empty(); ++i) {
    long h_i = generic_hilbert_function(*R, cfg.r, Multidegree{i});
    long h_i1 = generic_hilbert_function(*R, cfg.r, Multidegree{i + 1});
    std::vector<Ideal> next;
    auto keep_if_marked = [&](Ideal&& cand, const GroebnerBasis& gb) {
      if (hilbert_function(gb, Multidegree{i}) != h_i) return;
      if (hilbert_function(gb, Multidegree{i + 1}) < h_i1) return;
      next.push_back(std::move(cand));
      if (static_cast<long>(next.size()) > cfg.branch_limit)
        throw inconclusive_error("enumeration branch limit exceeded");
    };
    for (Ideal& I : level) {
      GroebnerBasis gb = groebner(I, ord, i + 1);
      long need = hilbert_function(gb, Multidegree{i}) - h_i;
      if (need < 0) continue;  // already below the target: prune
      if (need == 0) {
        keep_if_marked(std::move(I), gb);
        continue;
      }
      std::vector<Monomial> allowed = standard_monomials(gb, Multidegree{i});
      if (cfg.filter) {
        std::erase_if(allowed, [&](const Monomial& m) {
          return !apolar_action(Polynomial::monomial(R, m), *cfg.filter)
                      .is_zero();
        });
      }
      long n = static_cast<long>(allowed.size());
      if (n < need) continue;
      // All `need`-subsets of the allowed monomials, in lexicographic
      // position order.
      std::vector<long> pick(need);
      for (long j = 0; j < need; ++j) pick[j] = j;
      while (true) {
        Ideal cand = I;
        for (long j : pick)
          cand.gens.push_back(Polynomial::monomial(R, allowed[j]));
        GroebnerBasis gb2 = groebner(cand, ord, i + 1);
        keep_if_marked(std::move(cand), gb2);
        long j = need - 1;
        while (j >= 0 && pick[j] == n - need + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (long k = j + 1; k < need; ++k) pick[k] = pick[k - 1] + 1;
      }
    }
    level = std::move(next);
  }

  std::vector<Ideal> out;
  for (Ideal& I : level)
    if (has_stable_value(I, cfg.r)) out.push_back(std::move(I));
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return ideal_key(a) < ideal_key(b);
  });
  return out;
}

std::vector<Ideal> monomial_apolar_search(const Polynomial& F, long r) {
  if (r < 1) throw input_error("search target must be positive");
  EnumerationConfig cfg;
  cfg.J0 = Ideal(operator_ring_of(F));
  cfg.r = r;
  cfg.filter = F;
  // Any monomial ideal whose quotient matches r generic points everywhere
  // is generated in degrees <= r (Macaulay growth keeps the function flat
  // past degree r), so this cap makes the search complete.
  cfg.cap = static_cast<int>(r);
  return enumerate_monomial_apolar_ideals(cfg);
}

// ---------------------------------------------------------------------------
// First-order obstruction filter.
// ---------------------------------------------------------------------------

SlipFilterResult slip_ext_filter(const std::vector<Ideal>& candidates) {
  SlipFilterResult res;
  for (const Ideal& I : candidates) {
    SlipFilterEntry e;
    e.ideal = I;
    e.saturation = saturate_irrelevant(I);
    e.saturated = ideal_equal(e.saturation, I);
    if (e.saturated) {
      res.kept.push_back(std::move(e));
      continue;
    }
    e.ext1 = ext1_degree0_dim(e.saturation, I);
    (e.ext1 == 0 ? res.excluded : res.kept).push_back(std::move(e));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Border rank of monomials.
// ---------------------------------------------------------------------------

MonomialBorderRank monomial_border_rank(const Polynomial& F) {
  Stopwatch clock;
  if (F.is_zero() || F.nterms() != 1)
    throw input_error("border rank routine expects a single monomial");
  std::vector<int> exps;
  for (int e : F.leading_term().m.e)
    if (e > 0) exps.push_back(e);
  if (exps.empty())
    throw input_error("constant forms have no monomial border rank");
  std::sort(exps.begin(), exps.end());

  int n = static_cast<int>(exps.size()) - 1;
  RingPtr T = Ring::product({n + 1}, Ring::Side::forms);
  Monomial mono(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) mono.e[i] = exps[i];
  Polynomial G = Polynomial::monomial(T, mono);

  MonomialBorderRank out;
  out.exponents = exps;
  long sum_rest = 0;
  out.upper_bound = 1;
  for (int i = 0; i < n; ++i) {
    out.upper_bound *= exps[i] + 1;
    sum_rest += exps[i];
  }
  out.closed_form = exps[n] >= sum_rest - 2;
  out.plateau_hf = catalecticant_rank(G, Multidegree{exps[n] + 1});
  out.search_empty =
      out.upper_bound <= 1 ||
      monomial_apolar_search(G, out.upper_bound - 1).empty();
  out.certified = out.closed_form || out.search_empty;
  out.value = out.upper_bound;
  out.elapsed_ms = clock.elapsed_ms();
  return out;
}

Json MonomialBorderRank::to_json() const {
  Json in;
  in["exponents"] = exponents;
  Json r = make_report("monomial_border_rank", std::move(in));
  set_verdict(r, "border rank = " + std::to_string(value));
  add_certificate(r, "upper_bound", Json(upper_bound));
  add_check(r, "closed_form_regime", closed_form);
  add_check(r, "search_at_one_less_empty", search_empty);
  add_check(r, "certified", certified);
  add_certificate(r, "hilbert_value_past_top_exponent", Json(plateau_hf));
  set_timing(r, elapsed_ms);
  return r;
}

// ---------------------------------------------------------------------------
// Wildness of a concise three-factor tensor.
// ---------------------------------------------------------------------------

WildnessReport tensor_wildness(const Polynomial& F, long m) {
  Stopwatch clock;
  if (m < 1) throw input_error("tensor rank bound must be positive");
  const RingPtr& R = F.ring();
  if (!R || R->nblocks() != 3)
    throw input_error("wildness test expects a three-factor tensor");
  for (int b = 0; b < 3; ++b)
    if (R->block_size(b) != m)
      throw input_error("factor " + std::to_string(b + 1) +
                        " does not have dimension " + std::to_string(m));
  auto deg = F.multidegree();
  if (!deg || *deg != Multidegree::ones(3))
    throw input_error("wildness test expects a multilinear form");
  std::vector<bool> concise = concise_blocks(F);
  for (int b = 0; b < 3; ++b)
    if (!concise[b])
      throw input_error("tensor is not concise in factor " +
                        std::to_string(b + 1));

  WildnessReport rep;
  rep.m = m;
  rep.I = annihilator_piece(F, Multidegree{1, 1, 0}) +
          annihilator_piece(F, Multidegree{1, 0, 1}) +
          annihilator_piece(F, Multidegree{0, 1, 1});
  rep.K = Ideal(rep.I.R);
  rep.hf_111 = hilbert_function(rep.I, Multidegree{1, 1, 1});
  if (rep.hf_111 != m) {
    rep.wild = true;
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  }
  rep.K = saturate_irrelevant(rep.I);
  static const std::vector<Multidegree> test_degrees = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
      {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (const Multidegree& w : test_degrees)
    if (hilbert_function(rep.I, w) != hilbert_function(rep.K, w))
      rep.mismatch.push_back(w);
  rep.wild = !rep.mismatch.empty();
  if (!rep.wild) {
    rep.vsp_is_singleton = true;
    rep.k_generic = has_generic_hf(rep.K, m, Multidegree{2, 2, 2}).ok;
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

Json WildnessReport::to_json() const {
  Json in;
  in["ring"] = I.R ? I.R->descriptor() : "";
  in["m"] = m;
  Json r = make_report("tensor_wildness", std::move(in));
  set_verdict(r, wild ? "wild" : "not wild");
  add_certificate(r, "hf_at_unit_degree", Json(hf_111));
  Json mm = Json::array();
  for (const Multidegree& w : mismatch) mm.push_back(multidegree_json(w));
  add_certificate(r, "degrees_where_saturation_differs", std::move(mm));
  if (!wild) {
    add_certificate(r, "unique_candidate", ideal_json(K));
    add_check(r, "candidate_has_generic_hilbert_function", k_generic);
  }
  set_timing(r, elapsed_ms);
  return r;
}

// ---------------------------------------------------------------------------
// Plateau identifiability.
// ---------------------------------------------------------------------------

PlateauReport plateau_identifiability(const Polynomial& F, long r) {
  Stopwatch clock;
  if (F.is_zero()) throw input_error("zero form");
  if (r < 1) throw input_error("rank must be positive");
  auto degF = F.multidegree();
  if (!degF) throw input_error("plateau test expects a homogeneous form");
  const Multidegree v = *degF;
  const Multidegree one = Multidegree::ones(v.size());

  PlateauReport rep;
  rep.r = r;

  std::vector<Multidegree> box = degree_box(v);
  std::stable_sort(box.begin(), box.end(),
                   [](const Multidegree& a, const Multidegree& b) {
                     if (a.total() != b.total()) return a.total() < b.total();
                     return a.lex_less(b);
                   });
  for (const Multidegree& u : box) {
    if (catalecticant_rank(F, u) != r) continue;
    if (catalecticant_rank(F, u + one) != r) continue;
    rep.plateau = u;
    break;
  }
  if (!rep.plateau) {
    rep.verdict = PlateauReport::kNoPlateau;
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  }

  auto is_witness = [&](const Ideal& cand) {
    if (cand.is_zero()) return false;
    for (const Polynomial& g : cand.gens)
      if (!apolar_action(g, F).is_zero()) return false;
    if (!is_irrelevant_saturated(cand)) return false;
    if (!has_stable_value(cand, r)) return false;
    return has_generic_hf(cand, r, v + one).ok;
  };
  for (const Multidegree& u : box) {
    Ideal A = annihilator_piece(F, u);
    if (A.is_zero()) continue;
    if (is_witness(A)) {
      rep.witness = A;
      break;
    }
    Ideal B = saturate_irrelevant(A);
    if (!ideal_equal(B, A) && is_witness(B)) {
      rep.witness = B;
      break;
    }
  }
  rep.verdict = rep.witness ? PlateauReport::kIdentifiable
                            : PlateauReport::kNoWitness;
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

Json PlateauReport::to_json() const {
  Json in;
  in["r"] = r;
  Json rep = make_report("plateau_identifiability", std::move(in));
  set_verdict(rep, verdict);
  if (plateau)
    add_certificate(rep, "plateau_degree", multidegree_json(*plateau));
  if (witness) add_certificate(rep, "witness_ideal", ideal_json(*witness));
  set_timing(rep, elapsed_ms);
  return rep;
}

// ---------------------------------------------------------------------------
// Randomised generic-rank verification.
// ---------------------------------------------------------------------------

bool generic_omega_rank(int a, int e, long rank_target, unsigned seed) {
  static const std::vector<std::array<long, 3>> known = {
      {5, 1, 3}, {6, 1, 3}, {6, 2, 5}, {7, 1, 3},
      {7, 2, 5}, {8, 1, 3}, {8, 2, 5}, {8, 3, 7}};
  bool listed = false;
  for (const auto& t : known)
    listed = listed || (t[0] == a && t[1] == e && t[2] == rank_target);
  if (!listed)
    throw input_error("unsupported (a, e, rank) combination for the "
                      "generic-rank check");

  RingPtr T = Ring::product({3}, Ring::Side::forms);
  RingPtr S = T->dual();
  // Plane monomials of degree a divisible by x0^2 but not x0^4.
  std::vector<Monomial> support;
  for (const Monomial& m : monomial_basis(*T, Multidegree{a}))
    if (m.e[0] >= 2 && m.e[0] <= 3) support.push_back(m);
  std::vector<Monomial> rows;
  for (const Monomial& m : monomial_basis(*T, Multidegree{a - e}))
    if (m.e[0] >= 2) rows.push_back(m);
  std::vector<Monomial> cols = monomial_basis(*S, Multidegree{e});

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (seed * 0x100000001b3ull) ^
                      (static_cast<unsigned long long>(a) << 32) ^
                      (static_cast<unsigned long long>(e) << 16));
  std::uniform_int_distribution<long> coeff(1, 1000);
  std::bernoulli_distribution flip(0.5);

  int successes = 0, failures = 0;
  while (successes < 3 && failures < 3) {
    std::vector<Term> terms;
    for (const Monomial& m : support) {
      long c = coeff(rng);
      terms.push_back({m, Q(flip(rng) ? -c : c)});
    }
    Polynomial w(T, std::move(terms));
    QMatrix M(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Polynomial d = apolar_action(Polynomial::monomial(S, cols[j]), w);
      for (std::size_t i = 0; i < rows.size(); ++i) M.at(i, j) = d.coeff(rows[i]);
    }
    if (static_cast<long>(M.rank()) >= rank_target)
      ++successes;
    else
      ++failures;
  }
  if (successes >= 3) return true;
  throw inconclusive_error("generic-rank sampling fell below the target "
                           "three times");
}

// ---------------------------------------------------------------------------
// Admissible Hilbert functions.
// ---------------------------------------------------------------------------

namespace {

void admissible_rec(const Ring& R, long r, int d_max, std::vector<long>& h,
                    std::vector<std::vector<long>>& out) {
  int d = static_cast<int>(h.size()) - 1;
  if (d == d_max) {
    out.push_back(h);
    return;
  }
  long dim_next = R.graded_piece_dimension(Multidegree{d + 1});
  long hi = std::min(r, dim_next);
  if (d >= 1) hi = std::min(hi, macaulay_upper(h.back(), d));
  for (long v = h.back(); v <= hi; ++v) {
    h.push_back(v);
    admissible_rec(R, r, d_max, h, out);
    h.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> admissible_hilbert_functions(const Ring& R,
                                                            long r,
                                                            int d_max) {
  if (R.nblocks() != 1)
    throw input_error("admissible Hilbert functions need a single block");
  if (r < 1 || d_max < 0)
    throw input_error("admissible Hilbert functions need r >= 1, d >= 0");
  std::vector<std::vector<long>> out;
  std::vector<long> h{1};
  admissible_rec(R, r, d_max, h, out);
  return out;
}

}  // namespace borderline
