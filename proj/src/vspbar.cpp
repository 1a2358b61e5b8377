#include "borderline/border_tools.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace borderline {

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool annihilates_all(const Ideal& I, const Polynomial& F) {
  for (const Polynomial& g : I.gens)
    if (!apolar_action(g, F).is_zero()) return false;
  return true;
}

bool is_regular_sequence(const Ideal& J) {
  for (std::size_t i = 0; i < J.gens.size(); ++i) {
    if (J.gens[i].is_zero()) return false;
    if (i == 0) continue;
    Ideal prefix(J.R, std::vector<Polynomial>(J.gens.begin(),
                                              J.gens.begin() + i));
    if (!ideal_equal(colon(prefix, J.gens[i]), prefix)) return false;
  }
  return true;
}

Ideal ideal_square(const Ideal& J) {
  Ideal out(J.R);
  for (std::size_t i = 0; i < J.gens.size(); ++i)
    for (std::size_t j = i; j < J.gens.size(); ++j)
      out.gens.push_back(J.gens[i] * J.gens[j]);
  return out;
}

// Saturated + apolar + stable value r + generic Hilbert function on a box.
bool certified_member(const Ideal& I, const Polynomial& F, long r,
                      const Multidegree& box) {
  return annihilates_all(I, F) && is_irrelevant_saturated(I) &&
         has_stable_value(I, r) && has_generic_hf(I, r, box).ok;
}

}  // namespace

Json VspBarReport::to_json() const {
  Json in;
  in["r"] = r;
  Json rep = make_report(procedure, std::move(in));
  set_verdict(rep, verdict);
  rep["shape"] = shape;
  rep["dimension"] = dimension;
  add_certificate(rep, "criterion", Json(criterion));
  if (ideal) add_certificate(rep, "member", ideal_json(*ideal));
  if (!space.empty())
    add_certificate(rep, "spanning_operators", poly_list_json(space));
  for (const auto& [name, ok] : certificates) add_check(rep, name, ok);
  set_timing(rep, elapsed_ms);
  return rep;
}

// ---------------------------------------------------------------------------
// Binary forms.
// ---------------------------------------------------------------------------

VspBarReport sylvester_binary(const Polynomial& F) {
  Stopwatch clock;
  if (F.is_zero()) throw input_error("zero binary form");
  const RingPtr& T = F.ring();
  if (!T || T->nblocks() != 1 || T->nvars() != 2)
    throw input_error("binary routine expects one block of two variables");
  if (!F.is_homogeneous()) throw input_error("form must be homogeneous");
  int d = F.total_degree();

  Ideal A = annihilator(F);
  if (A.gens.size() != 2)
    throw inconclusive_error("binary annihilator is not a complete "
                             "intersection of two generators");
  Polynomial g1 = A.gens[0], g2 = A.gens[1];
  if (g1.total_degree() > g2.total_degree()) std::swap(g1, g2);
  long r = g1.total_degree();

  VspBarReport rep;
  rep.procedure = "sylvester_binary";
  rep.r = r;
  rep.certificates.emplace_back(
      "annihilator_degrees_sum_to_input_degree_plus_two",
      g1.total_degree() + g2.total_degree() == d + 2);
  rep.certificates.emplace_back("generators_annihilate",
                                apolar_action(g1, F).is_zero() &&
                                    apolar_action(g2, F).is_zero());
  Multidegree box{d + 1};
  if (g1.total_degree() == g2.total_degree()) {
    rep.shape = "P^1";
    rep.dimension = 1;
    rep.space = {g1, g2};
    rep.criterion = "equal annihilator generator degrees";
    rep.verdict =
        "decompositions form the pencil spanned by the annihilator "
        "generators";
    for (const Polynomial& g : {g1, g2, g1 + g2}) {
      Ideal P(A.R, {g});
      rep.certificates.emplace_back("pencil_member_certified",
                                    certified_member(P, F, r, box));
    }
  } else {
    rep.shape = "point";
    rep.dimension = 0;
    Ideal P(A.R, {g1});
    rep.ideal = P;
    rep.criterion = "strictly smaller annihilator generator degree";
    rep.verdict = "unique decomposition scheme: the lower-degree generator";
    rep.certificates.emplace_back("member_certified",
                                  certified_member(P, F, r, box));
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Plane cubics.
// ---------------------------------------------------------------------------

VspBarReport ternary_cubic_vspbar(const Polynomial& F) {
  Stopwatch clock;
  if (F.is_zero()) throw input_error("zero cubic");
  const RingPtr& T = F.ring();
  if (!T || T->nblocks() != 1 || T->nvars() != 3)
    throw input_error("expects a form in one block of three variables");
  auto deg = F.multidegree();
  if (!deg || (*deg)[0] != 3) throw input_error("expects a cubic form");

  EssentialForm ess = essential_form(F);
  if (ess.essential_count == 1) {
    VspBarReport rep;
    rep.procedure = "ternary_cubic_vspbar";
    rep.r = 1;
    rep.shape = "point";
    rep.dimension = 0;
    Ideal P = annihilator_piece(F, Multidegree{1});
    rep.ideal = P;
    rep.criterion = "one essential variable";
    rep.verdict = "cube of a linear form: unique decomposition point";
    rep.certificates.emplace_back("member_certified",
                                  certified_member(P, F, 1, Multidegree{4}));
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  }
  if (ess.essential_count == 2) {
    VspBarReport rep = sylvester_binary(ess.form);
    rep.procedure = "ternary_cubic_vspbar";
    rep.criterion = "two essential variables; " + rep.criterion;
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  }

  Ideal A = annihilator(F);
  bool three_quadrics = A.gens.size() == 3;
  for (const Polynomial& g : A.gens)
    three_quadrics = three_quadrics && g.total_degree() == 2;

  VspBarReport rep;
  rep.procedure = "ternary_cubic_vspbar";
  if (three_quadrics) {
    rep.r = 4;
    rep.shape = "P^2";
    rep.dimension = 2;
    rep.space = A.gens;
    rep.criterion = "annihilator generated by three quadrics";
    rep.verdict = "decompositions form the plane of pencils inside the net "
                  "of apolar quadrics";
    rep.certificates.emplace_back("annihilator_three_quadrics", true);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Ideal P(A.R, {A.gens[i], A.gens[j]});
        rep.certificates.emplace_back("pencil_member_certified",
                                      certified_member(P, F, 4,
                                                       Multidegree{4}));
      }
  } else {
    Polynomial h = hessian(F);
    if (!h.is_zero()) {
      rep.r = 3;
      rep.shape = "point";
      rep.dimension = 0;
      Ideal P = annihilator_piece(F, Multidegree{2});
      rep.ideal = P;
      rep.criterion =
          "cubic annihilator generator present and nonzero hessian";
      rep.verdict = "unique decomposition: the ideal of the quadric "
                    "annihilator piece";
      rep.certificates.emplace_back("hessian_nonzero", true);
      rep.certificates.emplace_back(
          "quadric_plateau", catalecticant_rank(F, Multidegree{1}) == 3 &&
                                 catalecticant_rank(F, Multidegree{2}) == 3);
      rep.certificates.emplace_back("member_certified",
                                    certified_member(P, F, 3, Multidegree{4}));
    } else {
      rep.shape = "unresolved";
      rep.criterion = "concise cubic with vanishing hessian";
      rep.verdict = "unresolved: concise cubic with vanishing hessian";
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Complete-intersection route.
// ---------------------------------------------------------------------------

bool ci_codim1_subspace_test(const Ideal& J, int d,
                             const std::vector<Polynomial>& W) {
  if (!J.R) throw input_error("ideal without a ring");
  if (J.R->nblocks() != 1)
    throw input_error("subspace test expects a single-block ring");
  std::vector<Monomial> cols = monomial_basis(*J.R, Multidegree{d});
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
  auto to_vec = [&](const Polynomial& p) {
    std::vector<Q> v(cols.size(), Q(0));
    for (const Term& t : p.terms()) {
      auto it = index.find(t.m);
      if (it == index.end())
        throw input_error("subspace test: element not of degree d");
      v[it->second] = t.c;
    }
    return v;
  };
  RowSpace span(cols.size());
  for (const Polynomial& w : W) {
    if (w.is_zero()) continue;
    span.insert(to_vec(w));
  }
  for (const Polynomial& p : degree_piece_basis(ideal_square(J), Multidegree{d}))
    if (!span.contains(to_vec(p))) return false;
  return true;
}

VspBarReport ci_vspbar(const Polynomial& F, const Ideal& J) {
  Stopwatch clock;
  if (F.is_zero()) throw input_error("zero form");
  if (!F.is_homogeneous()) throw input_error("form must be homogeneous");
  RingPtr S = F.ring()->side() == Ring::Side::apolar ? F.ring()
                                                     : F.ring()->dual();
  if (!J.R || !same_ring(J.R, S))
    throw input_error("the ideal must live in the operator ring of the form");
  if (S->nblocks() != 1)
    throw input_error("complete-intersection route expects a single block");
  if (!J.all_homogeneous())
    throw input_error("generators must be homogeneous");

  VspBarReport rep;
  rep.procedure = "ci_vspbar";
  auto fail = [&](const std::string& why) {
    rep.shape = "unresolved";
    rep.dimension = -1;
    rep.criterion = why;
    rep.verdict = "unresolved: " + why;
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  };

  int n = S->nvars() - 1;
  if (static_cast<int>(J.gens.size()) != n)
    return fail("expected exactly one generator fewer than variables");
  long d = -1, r = 1;
  for (const Polynomial& g : J.gens) {
    int a = g.total_degree() - 1;
    if (a < 1) return fail("generator of degree below two");
    d += a;
    r *= a + 1;
  }
  rep.r = r;
  if (!annihilates_all(J, F))
    return fail("the ideal does not annihilate the form");
  if (!is_regular_sequence(J))
    return fail("generators do not form a regular sequence");
  if (binom(d - 1 + n, n) > r)
    return fail("the space of operators one below the critical degree is "
                "too large");
  long dim_J_above = degree_piece_dim(J, Multidegree{static_cast<int>(d) + 1});
  long dim_ann_above =
      S->graded_piece_dimension(Multidegree{static_cast<int>(d) + 1}) -
      catalecticant_rank(F, Multidegree{static_cast<int>(d) + 1});
  if (dim_J_above != dim_ann_above)
    return fail("the annihilator strictly exceeds the complete intersection "
                "one degree above the critical one");

  rep.certificates.emplace_back("ideal_annihilates_form", true);
  rep.certificates.emplace_back("regular_sequence", true);
  rep.certificates.emplace_back("ideal_matches_annihilator_above_critical",
                                true);

  Ideal J2 = ideal_square(J);
  Multidegree crit{static_cast<int>(d)};
  long square_dim_crit = degree_piece_dim(J2, crit);
  long N = hilbert_function(J2, crit) - r;
  Multidegree box{static_cast<int>(d) + 2};

  if (binom(d + n, n) <= r) {
    if (square_dim_crit != 0)
      return fail("the squared ideal survives in the critical degree");
    rep.shape = "point";
    rep.dimension = 0;
    Ideal member = truncate_ideal(J, static_cast<int>(d) + 1);
    rep.ideal = member;
    rep.criterion = "operators of the critical degree all admissible";
    rep.verdict = "unique member: the truncation of the complete "
                  "intersection above the critical degree";
    rep.certificates.emplace_back("member_stable_value",
                                  has_stable_value(member, r));
    rep.certificates.emplace_back("member_generic_hf",
                                  has_generic_hf(member, r, box).ok);
  } else {
    if (N < 0)
      return fail("negative projective dimension from the squared ideal");
    rep.shape = "P^N";
    rep.dimension = static_cast<int>(N);
    rep.criterion = "codimension-one subspaces of the critical degree piece "
                    "containing the squared ideal";
    rep.verdict = "members form a projective space of dimension " +
                  std::to_string(N);
    // Certify one sample member: extend the degree-d piece of J^2 by
    // degree-d elements of J, stopping one short of the full piece.
    std::vector<Monomial> cols = monomial_basis(*S, crit);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
    auto to_vec = [&](const Polynomial& p) {
      std::vector<Q> v(cols.size(), Q(0));
      for (const Term& t : p.terms()) v[index.at(t.m)] = t.c;
      return v;
    };
    std::vector<Polynomial> W = degree_piece_basis(J2, crit);
    RowSpace span(cols.size());
    for (const Polynomial& w : W) span.insert(to_vec(w));
    std::vector<Polynomial> Jd = degree_piece_basis(J, crit);
    std::size_t target = Jd.size() - 1;
    for (const Polynomial& p : Jd) {
      if (span.dim() >= target) break;
      if (span.insert(to_vec(p))) W.push_back(p);
    }
    bool sample_ok = span.dim() == target &&
                     ci_codim1_subspace_test(J, static_cast<int>(d), W);
    Ideal member(S, W);
    member = member + truncate_ideal(J, static_cast<int>(d) + 1);
    sample_ok = sample_ok && has_stable_value(member, r) &&
                has_generic_hf(member, r, box).ok;
    rep.certificates.emplace_back("sample_member_certified", sample_ok);
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Reducible cubics x0 * quadric.
// ---------------------------------------------------------------------------

Polynomial cw_cubic(char kind, int n) {
  if (n < 2 || n > 4)
    throw input_error("reducible-cubic family supports 2 <= n <= 4");
  RingPtr T = Ring::product({n + 1}, Ring::Side::forms);
  auto x = [&](int i) { return Polynomial::variable(T, i); };
  Polynomial q = Polynomial::zero(T);
  switch (kind) {
    case 'A':
      q = x(0) * x(0);
      for (int i = 1; i <= n; ++i) q = q + x(i) * x(i);
      break;
    case 'B':
      for (int i = 1; i <= n; ++i) q = q + x(i) * x(i);
      break;
    case 'C':
      q = x(0) * x(1);
      for (int i = 2; i <= n; ++i) q = q + x(i) * x(i);
      break;
    default:
      throw input_error("kind must be 'A', 'B', or 'C'");
  }
  return x(0) * q;
}

VspBarReport cw_cubic_vspbar(char kind, int n) {
  Stopwatch clock;
  Polynomial F = cw_cubic(kind, n);
  RingPtr S = F.ring()->dual();

  VspBarReport rep;
  rep.procedure = "cw_cubic_vspbar";
  rep.certificates.emplace_back("concise", is_concise(F));

  if (kind == 'C') {
    long r = n + 1;
    rep.r = r;
    rep.certificates.emplace_back("hessian_nonzero", !hessian(F).is_zero());
    Ideal P = annihilator_piece(F, Multidegree{2});
    rep.shape = "point";
    rep.dimension = 0;
    rep.ideal = P;
    rep.criterion = "nonzero hessian at minimal border rank";
    rep.verdict = "unique member: the ideal of the quadric annihilator piece";
    rep.certificates.emplace_back("member_certified",
                                  certified_member(P, F, r, Multidegree{3}));
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
  }

  long r = n + 2;
  rep.r = r;
  if (n == 2) {
    Ideal A = annihilator(F);
    bool three_quadrics = A.gens.size() == 3;
    for (const Polynomial& g : A.gens)
      three_quadrics = three_quadrics && g.total_degree() == 2;
    rep.certificates.emplace_back("annihilator_three_quadrics",
                                  three_quadrics);
    rep.shape = "P^2";
    rep.dimension = 2;
    rep.space = A.gens;
    rep.criterion = "annihilator generated by three quadrics";
    rep.verdict = "decompositions form the plane of pencils inside the net "
                  "of apolar quadrics";
    for (std::size_t i = 0; i + 1 < A.gens.size(); ++i)
      for (std::size_t j = i + 1; j < A.gens.size(); ++j) {
        Ideal P(A.R, {A.gens[i], A.gens[j]});
        rep.certificates.emplace_back("pencil_member_certified",
                                      certified_member(P, F, r,
                                                       Multidegree{4}));
      }
  } else {
    Ideal I(S);
    auto y = [&](int i) { return Polynomial::variable(S, i); };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) I.gens.push_back(y(i) * y(j));
    for (int i = 1; i < n; ++i)
      I.gens.push_back(y(i) * y(i) - y(n) * y(n));
    rep.shape = "point";
    rep.dimension = 0;
    rep.ideal = I;
    rep.criterion =
        "unique saturated apolar ideal with the generic Hilbert function";
    rep.verdict = "single member";
    rep.certificates.emplace_back("member_certified",
                                  certified_member(I, F, r, Multidegree{3}));
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Plane monomials.
// ---------------------------------------------------------------------------

Json MonomialVpsReport::to_json() const {
  Json in;
  in["exponents"] = {a, b, c};
  Json rep = make_report("monomial_vps_report", std::move(in));
  set_verdict(rep, description);
  rep["regime"] = regime;
  rep["vps_shape"] = vps_shape;
  rep["fiber_type"] = fiber_type;
  rep["r"] = r;
  Json ms = Json::array();
  for (const Ideal& m : members) ms.push_back(ideal_json(m));
  add_certificate(rep, "members", std::move(ms));
  for (const auto& [name, ok] : certificates) add_check(rep, name, ok);
  set_timing(rep, elapsed_ms);
  return rep;
}

MonomialVpsReport monomial_vps_report(int a, int b, int c) {
  Stopwatch clock;
  if (!(0 < a && a <= b && b <= c))
    throw input_error("expects exponents 0 < a <= b <= c");

  MonomialVpsReport rep;
  rep.a = a;
  rep.b = b;
  rep.c = c;
  rep.r = static_cast<long>(a + 1) * (b + 1);

  RingPtr T = Ring::product({3}, Ring::Side::forms);
  RingPtr S = T->dual();
  Monomial mono(3);
  mono.e = {a, b, c};
  Polynomial F = Polynomial::monomial(T, mono);
  auto power = [&](int i, int k) {
    Monomial m(3);
    m.e[i] = k;
    return Polynomial::monomial(S, m);
  };

  if (c >= a + b) {
    rep.regime = "c>=a+b";
    rep.vps_shape = "point";
    rep.description = "single decomposition scheme: the complete "
                      "intersection of the first two coordinate powers";
    rep.members = {Ideal(S, {power(0, a + 1), power(1, b + 1)})};
  } else if (c == a + b - 1) {
    rep.regime = "c==a+b-1";
    if (a == 1 && b == 1) {
      rep.vps_shape = "P^2";
      rep.description = "plane of codimension-one subspaces of the quadric "
                        "annihilator piece";
      rep.members = {Ideal(S, {power(0, 2), power(1, 2)}),
                     Ideal(S, {power(0, 2), power(2, 2)}),
                     Ideal(S, {power(1, 2), power(2, 2)})};
    } else if (a == 1) {
      rep.vps_shape = "P^1";
      rep.description = "pencil pairing the first coordinate square with "
                        "the binary forms in the last two coordinate powers";
      rep.members = {Ideal(S, {power(0, 2), power(1, b + 1)}),
                     Ideal(S, {power(0, 2), power(2, b + 1)}),
                     Ideal(S, {power(0, 2),
                               power(1, b + 1) + power(2, b + 1)})};
    } else {
      rep.vps_shape = "point";
      rep.description = "single decomposition scheme: the complete "
                        "intersection of the first two coordinate powers";
      rep.members = {Ideal(S, {power(0, a + 1), power(1, b + 1)})};
    }
  } else {
    rep.regime = "c<=a+b-2";
    if (b < c) {
      rep.vps_shape = "point";
      rep.description = "single decomposition scheme: the complete "
                        "intersection of the first two coordinate powers";
      rep.members = {Ideal(S, {power(0, a + 1), power(1, b + 1)})};
    } else if (a < b) {
      rep.vps_shape = "P^1";
      rep.description = "pencil pairing the first coordinate power with the "
                        "binary forms in the last two coordinate powers";
      rep.members = {Ideal(S, {power(0, a + 1), power(1, b + 1)}),
                     Ideal(S, {power(0, a + 1), power(2, b + 1)}),
                     Ideal(S, {power(0, a + 1),
                               power(1, b + 1) + power(2, b + 1)})};
    } else {
      rep.vps_shape = "P^2";
      rep.description = "plane of pencils inside the net of the three "
                        "coordinate powers";
      rep.members = {Ideal(S, {power(0, a + 1), power(1, a + 1)}),
                     Ideal(S, {power(0, a + 1), power(2, a + 1)}),
                     Ideal(S, {power(1, a + 1), power(2, a + 1)})};
    }
  }
  rep.fiber_type = true;

  bool apolar = true, saturated = true, degrees_ok = true, stable = true;
  for (const Ideal& M : rep.members) {
    apolar = apolar && annihilates_all(M, F);
    for (const Polynomial& g : M.gens)
      degrees_ok = degrees_ok && g.total_degree() <= a + b;
    saturated = saturated && is_irrelevant_saturated(M);
    stable = stable && has_stable_value(M, rep.r);
  }
  rep.certificates.emplace_back("members_apolar", apolar);
  rep.certificates.emplace_back("members_saturated", saturated);
  rep.certificates.emplace_back("members_generated_up_to_sum_of_lower_exponents",
                                degrees_ok);
  rep.certificates.emplace_back("members_stable_value", stable);
  MonomialBorderRank br = monomial_border_rank(F);
  rep.certificates.emplace_back("border_rank_certified",
                                br.certified && br.value == rep.r);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace borderline
