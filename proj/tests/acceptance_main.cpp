// Acceptance gate: every numerical claim the library is expected to
// reproduce, one pass/fail line per criterion, all comparisons exact.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "borderline/apolarity.hpp"
#include "borderline/border_tools.hpp"
#include "borderline/gcd.hpp"
#include "borderline/groebner.hpp"
#include "borderline/hilbert.hpp"
#include "borderline/homological.hpp"
#include "borderline/ideal.hpp"
#include "borderline/order.hpp"
#include "borderline/polynomial.hpp"
#include "borderline/ring.hpp"

using namespace borderline;

namespace {

int failures = 0;

#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond))                                                        \
      throw std::runtime_error(std::string("check failed at line ") +  \
                               std::to_string(__LINE__) + ": " #cond);  \
  } while (0)

#define REQUIRE_EQ(a, b)                                                     \
  do {                                                                       \
    auto va = (a);                                                           \
    auto vb = (b);                                                           \
    if (!(va == vb)) {                                                       \
      std::ostringstream os;                                                 \
      os << "check failed at line " << __LINE__ << ": " #a " == " #b " ("    \
         << va << " vs " << vb << ")";                                       \
      throw std::runtime_error(os.str());                                    \
    }                                                                        \
  } while (0)

void criterion(int n, const std::string& label,
               const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0);
    std::printf("PASS: criterion %d - %s (%.1fs)\n", n, label.c_str(),
                dt.count());
  } catch (const std::exception& e) {
    ++failures;
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0);
    std::printf("FAIL: criterion %d - %s (%.1fs): %s\n", n, label.c_str(),
                dt.count(), e.what());
  }
  std::fflush(stdout);
}

std::vector<long> hf_row(const Ideal& I, int lo, int hi) {
  GroebnerBasis gb = groebner(I);
  std::vector<long> row;
  for (int d = lo; d <= hi; ++d)
    row.push_back(hilbert_function(gb, Multidegree{d}));
  return row;
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  Ideal out = A;
  for (const Polynomial& g : B.gens) out.gens.push_back(g);
  return out;
}

// Ideals collected while the criteria run; criterion 11 replays the
// Macaulay growth bound over all of them.
std::vector<Ideal>& growth_corpus() {
  static std::vector<Ideal> corpus;
  return corpus;
}

void remember(const Ideal& I) {
  if (I.R && I.R->nblocks() == 1) growth_corpus().push_back(I);
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long v = 1;
  for (long i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// The ideal of a reduced point with the given nonzero coordinates per
// block: all 2x2 minors of (coords | variables) per block, reduced to the
// standard n generators picked from a pivot.
Ideal point_ideal(const RingPtr& S, const std::vector<std::vector<Q>>& coords) {
  Ideal I(S);
  for (int b = 0; b < S->nblocks(); ++b) {
    const std::vector<Q>& p = coords[b];
    int base = S->first_var_of_block(b);
    int nb = S->block_size(b);
    int pivot = -1;
    for (int j = 0; j < nb; ++j)
      if (p[j] != 0) pivot = j;
    if (pivot < 0) throw input_error("zero coordinate vector");
    for (int j = 0; j < nb; ++j) {
      if (j == pivot) continue;
      // p[pivot] * y_j - p[j] * y_pivot vanishes at the point.
      std::vector<int> ej(S->nvars(), 0), ep(S->nvars(), 0);
      ej[base + j] = 1;
      ep[base + pivot] = 1;
      Polynomial g = Polynomial::monomial(S, Monomial(ej)) * p[pivot] -
                     Polynomial::monomial(S, Monomial(ep)) * p[j];
      I.gens.push_back(g);
    }
  }
  return I;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  RingPtr X = Ring::from_descriptor("P2", Ring::Side::forms);
  Polynomial F = parse_polynomial(X, "x0*x1^2*x2^3");
  Ideal A = annihilator(F);
  Ideal expected = parse_ideal(A.R, "y0^2, y1^3, y2^4");
  REQUIRE(ideal_equal(A, expected));
  REQUIRE_EQ(A.gens.size(), 3u);
  std::vector<long> row = hf_row(A, 0, 6);
  std::vector<long> want{1, 3, 5, 6, 5, 3, 1};
  REQUIRE(row == want);
  remember(A);
}

void criterion_2() {
  RingPtr X = Ring::from_descriptor("P3", Ring::Side::forms);
  Polynomial F = parse_polynomial(X, "x0^3*x1*x2 + x0*x1^3*x3 + x2^3*x3^2");
  Ideal Ann = annihilator(F);
  Ideal J0(Ann.R);
  for (const Polynomial& g : Ann.gens)
    if (g.total_degree() <= 3) J0.gens.push_back(g);
  remember(J0);

  EnumerationConfig cfg;
  cfg.J0 = J0;
  cfg.r = 10;
  cfg.cap = 10;
  std::vector<Ideal> found = enumerate_monomial_apolar_ideals(cfg);
  REQUIRE_EQ(found.size(), 81u);

  SlipFilterResult fr = slip_ext_filter(found);
  REQUIRE_EQ(fr.kept.size(), 8u);
  REQUIRE_EQ(fr.excluded.size(), 73u);
  for (const SlipFilterEntry& e : fr.kept) {
    REQUIRE(!e.saturated);
    REQUIRE(e.ext1 > 0);
  }
  for (const SlipFilterEntry& e : fr.excluded) {
    REQUIRE(!e.saturated);
    REQUIRE_EQ(e.ext1, 0);
  }

  // The survivors are exactly J0 plus one monomial y0^a y1^(7-a).
  for (int a = 0; a <= 7; ++a) {
    std::vector<int> exps{a, 7 - a, 0, 0};
    Ideal expect = J0;
    expect.gens.push_back(Polynomial::monomial(J0.R, Monomial(exps)));
    int matches = 0;
    for (const SlipFilterEntry& e : fr.kept)
      if (ideal_equal(e.ideal, expect)) ++matches;
    REQUIRE_EQ(matches, 1);
  }
  for (const SlipFilterEntry& e : fr.kept)
    REQUIRE_EQ(hom_degree0_dim(e.ideal), 30);
  remember(fr.kept.front().ideal);
}

void criterion_3() {
  RingPtr X = Ring::product({3, 3, 3}, Ring::Side::forms);
  Polynomial F = parse_polynomial(
      X, "a2*b1*c2 + a2*b2*c1 + a1*b1*c3 + a1*b3*c1 + a3*b1*c1");
  WildnessReport w = tensor_wildness(F, 3);
  REQUIRE(w.wild);

  RingPtr S = X->dual();
  std::vector<Polynomial> quadrics = parse_polynomial_list(
      S,
      "c3^2, c2*c3, c2^2, b3*c3, b3*c2, b2*c3, b2*c2, b1*c3 - b3*c1, "
      "b1*c2 - b2*c1, b3^2, b2*b3, b2^2, a3*c3, a3*c2, a3*b3, a3*b2, a2*c3, "
      "a2*c2 - a3*c1, a2*b3, a2*b2 - a3*b1, a1*c3 - a3*c1, a1*c2, "
      "a1*b3 - a3*b1, a1*b2, a3^2, a2*a3, a1*a3");
  REQUIRE_EQ(quadrics.size(), 27u);
  std::vector<Polynomial> cubics =
      parse_polynomial_list(S, "a1^3, a1^2*a2, a1*a2^2, a2^3");

  // Plain lexicographic order: a1 largest, then a2, ..., c3 smallest.
  std::vector<int> rank_to_var(S->nvars());
  std::iota(rank_to_var.begin(), rank_to_var.end(), 0);
  MonomialOrder lex = MonomialOrder::lex(rank_to_var);
  const std::vector<long> wt{1, 2, 3, 1, 2, 3, 1, 2, 3};

  for (int k = 0; k < 4; ++k) {
    // Coefficient pattern: the first k coefficients of the cubic vanish.
    Polynomial cubic = Polynomial::zero(S);
    for (int j = k; j < 4; ++j) cubic = cubic + cubics[j];
    std::vector<Polynomial> basis = quadrics;
    basis.push_back(cubic);
    REQUIRE_EQ(basis.size(), 28u);
    REQUIRE(is_groebner_basis(basis, lex));

    // The weight-vector flat limit keeps the quadrics and degenerates the
    // cubic to its lowest-weight monomial.
    Ideal Jp(S, basis);
    Ideal limit = w_initial_forms(Jp, wt);
    Ideal expected(S, quadrics);
    expected.gens.push_back(cubics[k]);
    REQUIRE(ideal_equal(limit, expected));
  }

  for (int k = 0; k < 4; ++k) {
    Ideal D(S, quadrics);
    D.gens.push_back(cubics[k]);
    REQUIRE_EQ(hom_degree0_dim(D), 18);
    GenericHFCheck chk = has_generic_hf(D, 3, Multidegree{3, 3, 3});
    REQUIRE(chk.ok);
  }
}

void criterion_4() {
  RingPtr X = Ring::product({3, 3, 3}, Ring::Side::forms);
  Polynomial F = parse_polynomial(X, "a1*b1*c1 + a2*b2*c2 + a3*b3*c3");
  WildnessReport w = tensor_wildness(F, 3);
  REQUIRE(!w.wild);
  REQUIRE(w.vsp_is_singleton);
  REQUIRE(w.k_generic);
  REQUIRE_EQ(w.hf_111, 3);
  REQUIRE(w.mismatch.empty());

  RingPtr S = X->dual();
  Ideal P1 = parse_ideal(S, "a2, a3, b2, b3, c2, c3");
  Ideal P2 = parse_ideal(S, "a1, a3, b1, b3, c1, c3");
  Ideal P3 = parse_ideal(S, "a1, a2, b1, b2, c1, c2");
  Ideal points = intersect(intersect(P1, P2), P3);
  REQUIRE(ideal_equal(w.K, points));
}

void criterion_5() {
  struct Row {
    const char* form;
    const char* shape;
    long r;
  };
  const std::vector<Row> table{
      {"x0^3", "point", 1},
      {"x0^2*x1 + x0*x1^2", "point", 2},
      {"x0^2*x1", "point", 2},
      {"x1^2*x2 - x0^3 - x2^3", "point", 3},
      {"x1^2*x2 - x0^3 - x0*x2^2", "P^2", 4},
      {"x1^2*x2 - x0^3", "point", 3},
      {"x0*x1*x2", "P^2", 4},
      {"x0^3 + x0*x1*x2", "P^2", 4},
      {"x1^2*x2 - x0^3 - x0*x2^2 - x2^3", "P^2", 4},
      {"x1^2*x2 - x0^3 - x0^2*x2", "P^2", 4},
      {"x0^2*x1 + x1^2*x2", "point", 3},
  };
  RingPtr X = Ring::from_descriptor("P2", Ring::Side::forms);
  for (const Row& row : table) {
    Polynomial F = parse_polynomial(X, row.form);
    VspBarReport rep = ternary_cubic_vspbar(F);
    if (rep.shape != row.shape || rep.r != row.r)
      throw std::runtime_error(std::string("cubic ") + row.form +
                               ": expected " + row.shape + " r=" +
                               std::to_string(row.r) + ", got " + rep.shape +
                               " r=" + std::to_string(rep.r));
    REQUIRE(!rep.unresolved());
    for (const auto& [name, ok] : rep.certificates)
      if (!ok)
        throw std::runtime_error(std::string("cubic ") + row.form +
                                 ": certificate failed: " + name);
    remember(annihilator(F));
    if (rep.ideal) remember(*rep.ideal);
  }
}

void criterion_6() {
  struct Row {
    const char* form;
    long value;
  };
  const std::vector<Row> table{
      {"x0*x1*x2", 4}, {"x0*x1^2*x2^3", 6}, {"x0^2*x1^2*x2^2", 9}};
  RingPtr X = Ring::from_descriptor("P2", Ring::Side::forms);
  for (const Row& row : table) {
    Polynomial F = parse_polynomial(X, row.form);
    MonomialBorderRank rep = monomial_border_rank(F);
    REQUIRE_EQ(rep.value, row.value);
    REQUIRE(rep.certified);
    REQUIRE(rep.search_empty);
    REQUIRE(monomial_apolar_search(F, row.value - 1).empty());
  }
}

void criterion_7() {
  RingPtr X = Ring::from_descriptor("P2", Ring::Side::forms);
  RingPtr S = X->dual();

  // Shapes for x0 x1^a x2^(a+1): a single point for a <= 2 and a
  // projective space of dimension 2(a-2) for a = 3, 4.
  for (int a = 1; a <= 4; ++a) {
    std::ostringstream form;
    form << "x0*x1^" << a << "*x2^" << (a + 1);
    Polynomial F = parse_polynomial(X, form.str());
    Ideal J = parse_ideal(
        S, "y0^2, y1^" + std::to_string(a + 1));
    VspBarReport rep = ci_vspbar(F, J);
    REQUIRE(!rep.unresolved());
    REQUIRE_EQ(rep.r, 2 * (a + 1));
    if (a <= 2) {
      REQUIRE_EQ(rep.shape, std::string("point"));
    } else {
      REQUIRE_EQ(rep.shape, std::string("P^N"));
      REQUIRE_EQ(rep.dimension, 2 * (a - 2));
    }
    for (const auto& [name, ok] : rep.certificates) REQUIRE(ok);
    remember(J);
  }

  // The closed-form value of the degree-0 Ext^1 obstruction agrees with the
  // resolution-based computation on random complete intersections.
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const std::vector<std::pair<int, int>> degs{{2, 3}, {3, 3}, {2, 4}, {3, 4}};
  int done = 0;
  while (done < 20) {
    auto [d1, d2] = degs[done % degs.size()];
    auto random_form = [&](int d) {
      std::vector<Term> terms;
      for (const Monomial& m : monomial_basis(*S, Multidegree{d})) {
        int c = coeff(rng);
        if (c != 0) terms.push_back({m, Q(c)});
      }
      return Polynomial(S, std::move(terms));
    };
    Polynomial g1 = random_form(d1), g2 = random_form(d2);
    if (g1.is_zero() || g2.is_zero()) continue;
    if (poly_gcd(g1, g2).total_degree() != 0) continue;  // not codim 2
    Ideal J(S, {g1, g2});
    int d = d1 + d2 - 3;
    std::vector<Polynomial> piece = degree_piece_basis(J, Multidegree{d});
    if (piece.empty()) continue;
    std::uniform_int_distribution<std::size_t> pickdist(0, piece.size() - 1);
    std::size_t drop = pickdist(rng);
    Ideal I(S);
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (i != drop) I.gens.push_back(piece[i]);
    Ideal tail = truncate_ideal(J, d + 1);
    for (const Polynomial& g : tail.gens) I.gens.push_back(g);
    long formula = ext1_ci_formula(J, I, d);
    long resolution = ext1_degree0_dim(J, I);
    REQUIRE_EQ(formula, resolution);
    ++done;
  }
}

void criterion_8() {
  RingPtr X = Ring::from_descriptor("P2", Ring::Side::forms);
  RingPtr S = X->dual();

  // Degree-11 form with a 12-point apolar witness.
  Polynomial F = parse_polynomial(X, "x0^11 + x0*x1^6*x2^4 + x2^11");
  REQUIRE_EQ(catalecticant_rank(F, Multidegree{5}), 12);
  REQUIRE_EQ(catalecticant_rank(F, Multidegree{6}), 12);
  Ideal Ann = annihilator(F);
  Ideal J = parse_ideal(S, "y0^2*y1, y0^2*y2, y1*y2^5, y0*y2^5");
  REQUIRE(ideal_contains(Ann, J));
  REQUIRE(is_irrelevant_saturated(J));
  REQUIRE_EQ(stable_value(J), 12);
  remember(J);

  // The distinguished monomial cell is obstructed: Ext^1 vanishes.
  Ideal K = ideal_sum(parse_ideal(S, "y0^2*y1^2, y0^2*y1*y2, y0^2*y2^2"),
                      truncate_ideal(J, 5));
  REQUIRE_EQ(ext1_degree0_dim(J, K), 0);

  // The neighbouring cell has tangent dimension 25 and is a flat limit of
  // an ideal that is saturated in all degrees except 4.
  Ideal Khat = ideal_sum(parse_ideal(S, "y0^2*y1^2, y0^2*y2^2, y0^3*y2"),
                         truncate_ideal(J, 5));
  REQUIRE_EQ(hom_degree0_dim(Khat), 25);
  Ideal Ihat = parse_ideal(S,
                           "y0^2*y1^2 + y0*y2^3, y0^3*y2, y0^2*y2^2, "
                           "y0^4*y1, y1*y2^5, y0*y2^5");
  REQUIRE(ideal_equal(initial_ideal(Ihat, MonomialOrder::canonical(*S)),
                      Khat));
  remember(Khat);

  // Degree-11 binary-plus-power form: two explicit flat-limit witnesses.
  Polynomial F2 = parse_polynomial(X, "x0^11 + x1^5*x2^6");
  Ideal Ann2 = annihilator(F2);
  MonomialOrder ord = MonomialOrder::from_descriptor(*S, "lex:y0<y1<y2");
  Ideal L = parse_ideal(S, "y0*y2^2 + y1^3, y0^2*y2, y0^2*y1");
  Ideal Kc = parse_ideal(S, "y0*y2^2, y0^2*y2, y0^2*y1, y0*y1^3, y1^6");
  REQUIRE(is_irrelevant_saturated(L));
  REQUIRE(ideal_equal(initial_ideal(L, ord), Kc));
  REQUIRE(ideal_contains(Ann2, Kc));
  Ideal Lp = parse_ideal(
      S, "y0^2*y2 + y0*y1^2, y0*y1*y2 + y1^3, y0*y2^2 + y1^2*y2 + y0^2*y1");
  Ideal Kp = parse_ideal(
      S, "y0*y2^2, y0*y1*y2, y0^2*y2, y0^2*y1^2, y0^3*y1, y0*y1^4, y1^6");
  REQUIRE(is_irrelevant_saturated(Lp));
  REQUIRE(ideal_equal(initial_ideal(Lp, ord), Kp));
  REQUIRE(ideal_contains(Ann2, Kp));
  remember(L);
  remember(Lp);
  remember(Kp);
}

void criterion_9() {
  for (int n = 2; n <= 4; ++n) {
    RingPtr S =
        Ring::from_descriptor("P" + std::to_string(n), Ring::Side::apolar);
    // Pairwise products plus the square differences: the point witness for
    // the two non-degenerate reducible-cubic families.
    Ideal witness(S);
    {
      std::vector<int> e(S->nvars(), 0);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> m(S->nvars(), 0);
          m[i] = 1;
          m[j] = 1;
          witness.gens.push_back(Polynomial::monomial(S, Monomial(m)));
        }
      for (int i = 1; i < n; ++i) {
        std::vector<int> mi(S->nvars(), 0), mn(S->nvars(), 0);
        mi[i] = 2;
        mn[n] = 2;
        witness.gens.push_back(Polynomial::monomial(S, Monomial(mi)) -
                               Polynomial::monomial(S, Monomial(mn)));
      }
    }

    for (char kind : {'A', 'B', 'C'}) {
      VspBarReport rep = cw_cubic_vspbar(kind, n);
      REQUIRE(!rep.unresolved());
      for (const auto& [name, ok] : rep.certificates) REQUIRE(ok);
      if (kind == 'C') {
        REQUIRE_EQ(rep.shape, std::string("point"));
        REQUIRE_EQ(rep.r, n + 1);
      } else if (n == 2) {
        REQUIRE_EQ(rep.shape, std::string("P^2"));
        REQUIRE_EQ(rep.r, n + 2);
      } else {
        REQUIRE_EQ(rep.shape, std::string("point"));
        REQUIRE_EQ(rep.r, n + 2);
        REQUIRE(rep.ideal);
        REQUIRE(ideal_equal(*rep.ideal, witness));
      }
      if (rep.ideal) remember(*rep.ideal);
    }
  }
}

void criterion_10() {
  struct Row {
    int a, b, c;
    const char* regime;
    const char* shape;
    long r;
  };
  const std::vector<Row> table{
      {1, 2, 4, "c>=a+b", "point", 6},   {1, 3, 3, "c==a+b-1", "P^1", 8},
      {2, 3, 4, "c==a+b-1", "point", 12}, {2, 2, 2, "c<=a+b-2", "P^2", 9},
      {1, 1, 1, "c==a+b-1", "P^2", 4},
  };
  for (const Row& row : table) {
    MonomialVpsReport rep = monomial_vps_report(row.a, row.b, row.c);
    REQUIRE_EQ(rep.regime, std::string(row.regime));
    REQUIRE_EQ(rep.vps_shape, std::string(row.shape));
    REQUIRE_EQ(rep.r, row.r);
    REQUIRE(rep.fiber_type);
    REQUIRE(!rep.certificates.empty());
    for (const auto& [name, ok] : rep.certificates)
      if (!ok)
        throw std::runtime_error(
            std::string("monomial report certificate failed: ") + name);
    for (const Ideal& member : rep.members) remember(member);
  }
}

void criterion_11() {
  // Memoised Macaulay growth values.
  std::map<std::pair<long, long>, long> memo;
  auto mac = [&memo](long h, long d) {
    auto key = std::make_pair(h, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long v = macaulay_upper(h, d);
    memo.emplace(key, v);
    return v;
  };

  // Superadditivity of the growth bound.
  for (long e = 1; e <= 10; ++e)
    for (long l = e; l <= 10; ++l)
      for (long q = 0; q <= 60; ++q)
        for (long r = 0; r <= 60; ++r)
          if (mac(q, l) + mac(r, e) > mac(q + r, e))
            throw std::runtime_error("superadditivity failed");

  // Splitting dim S_{d-1} strictly undershoots dim S_d (three variables).
  for (long d = 2; d <= 8; ++d) {
    long nd1 = binomial(d + 1, 2), nd = binomial(d + 2, 2);
    for (long s = 1; s < nd1; ++s)
      REQUIRE(mac(s, d - 1) + mac(nd1 - s, d - 1) < nd);
  }

  // Raising the growth index strictly lowers the bound at dim S_{d-1}.
  for (long d = 2; d <= 8; ++d) {
    long v = binomial(d + 1, 2);
    for (long l = d; l <= 12; ++l) REQUIRE(mac(v, l) < mac(v, d - 1));
  }

  // Hilbert-series symmetry of monomial complete intersections with
  // generator degrees at most 6.
  for (int n = 1; n <= 3; ++n) {
    RingPtr S =
        Ring::from_descriptor("P" + std::to_string(n), Ring::Side::apolar);
    std::vector<std::vector<int>> tuples{{}};
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples)
        for (int a = t.empty() ? 1 : t.back(); a <= 6; ++a) {
          auto u = t;
          u.push_back(a);
          next.push_back(u);
        }
      tuples = std::move(next);
    }
    for (const auto& degsel : tuples) {
      Ideal J(S);
      long r = 1;
      int d = -(n + 1);
      for (int i = 0; i < n; ++i) {
        std::vector<int> m(S->nvars(), 0);
        m[i + 1] = degsel[i];
        J.gens.push_back(Polynomial::monomial(S, Monomial(m)));
        r *= degsel[i];
        d += degsel[i];
      }
      GroebnerBasis gb = groebner(J);
      REQUIRE_EQ(hilbert_function(gb, Multidegree{d + 1}), r);
      if (d >= 0) REQUIRE_EQ(hilbert_function(gb, Multidegree{d}), r - 1);
      for (int s = 0; s <= d; ++s)
        REQUIRE_EQ(hilbert_function(gb, Multidegree{s}) +
                       hilbert_function(gb, Multidegree{d - s}),
                   r);
    }
  }

  // Hilbert functions of saturated point ideals on products of projective
  // spaces: monotone along every axis, plateaus propagate, bounded by the
  // number of points.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coord(-2, 2);
  const std::vector<std::vector<int>> ring_shapes{
      {3}, {2, 2}, {2, 2, 2}, {4}, {3, 2}};
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<int>& shape = ring_shapes[trial % ring_shapes.size()];
    RingPtr S = Ring::product(shape, Ring::Side::apolar);
    int npts = 1 + trial % 4;
    std::vector<std::vector<std::vector<Q>>> pts;
    while (static_cast<int>(pts.size()) < npts) {
      std::vector<std::vector<Q>> pt;
      for (int b = 0; b < S->nblocks(); ++b) {
        std::vector<Q> v(shape[b]);
        bool nonzero = false;
        for (int j = 0; j < shape[b]; ++j) {
          v[j] = coord(rng);
          if (v[j] != 0) nonzero = true;
        }
        if (!nonzero) v[0] = 1;
        pt.push_back(std::move(v));
      }
      // Normalise per block so duplicates are recognised.
      bool dup = false;
      for (const auto& other : pts) {
        bool same = true;
        for (int b = 0; b < S->nblocks() && same; ++b) {
          // proportional check via cross products
          for (int i = 0; i < shape[b] && same; ++i)
            for (int j = i + 1; j < shape[b] && same; ++j)
              if (pt[b][i] * other[b][j] != pt[b][j] * other[b][i])
                same = false;
        }
        if (same) dup = true;
      }
      if (!dup) pts.push_back(std::move(pt));
    }
    Ideal I = point_ideal(S, pts[0]);
    for (int k = 1; k < npts; ++k) I = intersect(I, point_ideal(S, pts[k]));
    REQUIRE(is_irrelevant_saturated(I));

    GroebnerBasis gb = groebner(I);
    std::size_t rank = S->grading_rank();
    std::map<std::vector<int>, long> hf;
    std::function<void(std::vector<int>&, std::size_t)> fill =
        [&](std::vector<int>& v, std::size_t pos) {
          if (pos == rank) {
            Multidegree u(rank, 0);
            for (std::size_t i = 0; i < rank; ++i) u[i] = v[i];
            hf[v] = hilbert_function(gb, u);
            return;
          }
          for (int t = 0; t <= 4; ++t) {
            v[pos] = t;
            fill(v, pos + 1);
          }
        };
    std::vector<int> v(rank, 0);
    fill(v, 0);

    for (const auto& [deg, value] : hf) {
      REQUIRE(value <= npts);
      for (std::size_t j = 0; j < rank; ++j) {
        if (deg[j] + 1 > 4) continue;
        auto up = deg;
        ++up[j];
        REQUIRE(value <= hf.at(up));
        if (deg[j] + 2 <= 4 && value == hf.at(up)) {
          auto up2 = up;
          ++up2[j];
          REQUIRE_EQ(hf.at(up), hf.at(up2));
        }
      }
    }
  }

  // Macaulay bound across every single-block ideal the other criteria
  // produced.
  REQUIRE(growth_corpus().size() >= 20u);
  for (const Ideal& I : growth_corpus()) {
    std::vector<long> row = hf_row(I, 0, 10);
    for (int d = 1; d <= 9; ++d)
      REQUIRE(row[d + 1] <= macaulay_upper(row[d], d));
  }
}

void criterion_12() {
  const std::vector<std::array<int, 3>> triples{
      {5, 1, 3}, {6, 1, 3}, {6, 2, 5}, {7, 1, 3},
      {7, 2, 5}, {8, 1, 3}, {8, 2, 5}, {8, 3, 7}};
  for (const auto& t : triples)
    for (unsigned seed = 1; seed <= 3; ++seed)
      if (!generic_omega_rank(t[0], t[1], t[2], seed))
        throw std::runtime_error("genericity witness failed for (" +
                                 std::to_string(t[0]) + "," +
                                 std::to_string(t[1]) + "," +
                                 std::to_string(t[2]) + ") seed " +
                                 std::to_string(seed));
}

}  // namespace

int main() {
  criterion(1, "annihilator and Hilbert function of a plane monomial",
            criterion_1);
  criterion(2, "space-quintic pipeline: 81 candidates, 8 survivors, "
               "tangent dimension 30",
            criterion_2);
  criterion(3, "wild tensor: basis verification, flat limits, tangent "
               "dimension 18",
            criterion_3);
  criterion(4, "diagonal tensor: unique saturated apolar witness",
            criterion_4);
  criterion(5, "ternary cubic classification", criterion_5);
  criterion(6, "monomial border ranks 4, 6, 9 with empty lower searches",
            criterion_6);
  criterion(7, "complete intersections: shapes and the degree-0 Ext "
               "formula",
            criterion_7);
  criterion(8, "degree-11 witnesses: obstruction, tangent dimension 25, "
               "initial ideals",
            criterion_8);
  criterion(9, "reducible cubic families", criterion_9);
  criterion(10, "plane-monomial decision reports", criterion_10);
  criterion(11, "growth bounds, symmetry, and monotonicity suite",
            criterion_11);
  criterion(12, "randomized genericity witnesses", criterion_12);

  if (failures == 0)
    std::printf("all 12 criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
