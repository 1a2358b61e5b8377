#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "borderline/apolarity.hpp"
#include "borderline/gcd.hpp"
#include "borderline/groebner.hpp"
#include "borderline/hilbert.hpp"
#include "borderline/ideal.hpp"
#include "oracles.hpp"

using namespace borderline;

namespace {

RingPtr SP2() { return Ring::from_descriptor("P2", Ring::Side::apolar); }
RingPtr TP2() { return Ring::from_descriptor("P2", Ring::Side::forms); }

Polynomial pf(const std::string& s) { return parse_polynomial(TP2(), s); }
Polynomial pd(const std::string& s) { return parse_polynomial(SP2(), s); }

}  // namespace

TEST_CASE("differentiation action with falling factorials") {
  CHECK(apolar_action(pd("y0"), pf("x0^3")) == pf("3*x0^2"));
  CHECK(apolar_action(pd("y0^2"), pf("x0^3")) == pf("6*x0"));
  CHECK(apolar_action(pd("y0*y1"), pf("x0*x1")) == pf("1"));
  CHECK(apolar_action(pd("y0^2"), pf("x0*x1")).is_zero());
  CHECK(apolar_action(pd("y1"), pf("x0^2 + x1*x2")) == pf("x2"));
  CHECK(apolar_action(pd("y0 + y1"), pf("x0^2 - x1^2")) ==
        pf("2*x0 - 2*x1"));
  // Operators compose: (y0*y1) F = y0 (y1 F).
  Polynomial F = pf("x0^2*x1^2 + x0^3*x2 - x1^4");
  CHECK(apolar_action(pd("y0*y1"), F) ==
        apolar_action(pd("y0"), apolar_action(pd("y1"), F)));

  RingPtr P = Ring::from_descriptor("P1xP1", Ring::Side::forms);
  Polynomial G = parse_polynomial(P, "a1*b1 + a2*b2");
  Polynomial psi = parse_polynomial(P->dual(), "a1*b1");
  CHECK(apolar_action(psi, G) == parse_polynomial(P, "1"));
  CHECK(apolar_action(parse_polynomial(P->dual(), "a1*b2"), G).is_zero());
}

TEST_CASE("catalecticant matrices and ranks") {
  Polynomial F = pf("x0^2*x1");
  CHECK(catalecticant_rank(F, Multidegree{0}) == 1);
  CHECK(catalecticant_rank(F, Multidegree{1}) == 2);
  CHECK(catalecticant_rank(F, Multidegree{2}) == 2);
  CHECK(catalecticant_rank(F, Multidegree{3}) == 1);
  CHECK(catalecticant_rank(F, Multidegree{4}) == 0);
  QMatrix M = catalecticant(F, Multidegree{1});
  CHECK(M.rows() == 3);   // operators of degree 1
  CHECK(M.cols() == 6);   // forms of degree 2

  // Middle catalecticant of the monomial x0*x1^2*x2^3.
  Polynomial G = pf("x0*x1^2*x2^3");
  CHECK(catalecticant_rank(G, Multidegree{3}) == 6);
  CHECK(catalecticant_rank(G, Multidegree{1}) == 3);

  RingPtr P3 = Ring::product({2, 2, 2}, Ring::Side::forms);
  Polynomial D = parse_polynomial(P3, "a1*b1*c1 + a2*b2*c2");
  CHECK(catalecticant_rank(D, Multidegree({1, 0, 0})) == 2);
  CHECK(catalecticant_rank(D, Multidegree({1, 1, 0})) == 2);
  CHECK(catalecticant_rank(D, Multidegree({1, 1, 1})) == 1);
}

TEST_CASE("annihilator of a monomial is the expected complete intersection") {
  Ideal A = annihilator(pf("x0*x1^2*x2^3"));
  CHECK(ideal_equal(A, parse_ideal(SP2(), "y0^2, y1^3, y2^4")));
  CHECK(A.gens.size() == 3);

  // Quotient dimensions equal catalecticant ranks (independent check via
  // the row-reduction oracle).
  for (int d = 0; d <= 7; ++d)
    CHECK(oracle::hilbert_function(SP2(), A.gens, Multidegree{d}) ==
          catalecticant_rank(pf("x0*x1^2*x2^3"), Multidegree{d}));
}

TEST_CASE("annihilator of the Fermat cubic") {
  Polynomial F = pf("x0^3 + x1^3 + x2^3");
  Ideal A = annihilator(F);
  CHECK(ideal_equal(
      A, parse_ideal(SP2(), "y0*y1, y0*y2, y1*y2, y0^3 - y1^3, y1^3 - y2^3")));
  // Minimal generation: three quadrics and two cubics.
  int quad = 0, cub = 0;
  for (const Polynomial& g : A.gens) {
    if (g.total_degree() == 2) ++quad;
    if (g.total_degree() == 3) ++cub;
  }
  CHECK(quad == 3);
  CHECK(cub == 2);
  for (const Polynomial& g : A.gens)
    CHECK(apolar_action(g, F).is_zero());
}

TEST_CASE("annihilator of a multilinear tensor") {
  RingPtr P3 = Ring::product({2, 2, 2}, Ring::Side::forms);
  Polynomial D = parse_polynomial(P3, "a1*b1*c1 + a2*b2*c2");
  Ideal A = annihilator(D);
  for (const Polynomial& g : A.gens) CHECK(apolar_action(g, D).is_zero());
  // The quotient in each unit box degree matches the catalecticant rank.
  for (const Multidegree& u :
       {Multidegree({1, 0, 0}), Multidegree({1, 1, 0}), Multidegree({1, 1, 1})})
    CHECK(hilbert_function(A, u) == catalecticant_rank(D, u));
}

TEST_CASE("conciseness by block") {
  CHECK(is_concise(pf("x0^2*x1 + x2^3")));
  CHECK_FALSE(is_concise(pf("x0^2*x1")));
  std::vector<bool> cb = concise_blocks(pf("x0^2*x1"));
  REQUIRE(cb.size() == 1);
  CHECK_FALSE(cb[0]);

  RingPtr P3 = Ring::product({2, 2, 2}, Ring::Side::forms);
  CHECK(is_concise(parse_polynomial(P3, "a1*b1*c1 + a2*b2*c2")));
  std::vector<bool> cb2 =
      concise_blocks(parse_polynomial(P3, "a1*b1*c1 + a1*b2*c2"));
  REQUIRE(cb2.size() == 3);
  CHECK_FALSE(cb2[0]);
  CHECK(cb2[1]);
  CHECK(cb2[2]);
}

TEST_CASE("determinants and hessians") {
  RingPtr T = TP2();
  std::vector<std::vector<Polynomial>> m{
      {pf("x0"), pf("x1")},
      {pf("x2"), pf("x0")}};
  CHECK(poly_det(m) == pf("x0^2 - x1*x2"));

  CHECK(hessian(pf("x0^3 + x1^3 + x2^3")) == pf("216*x0*x1*x2"));
  CHECK(hessian(pf("x1^2*x2 - x0^3")) == pf("24*x0*x1^2"));
  // A cone (cubic depending on two variables only) has vanishing hessian.
  CHECK(hessian(pf("x0^3 + x0^2*x1 + x1^3")).is_zero());
}

TEST_CASE("even-degree nondegeneracy") {
  // Fermat quartic: three products of two distinct variables annihilate it.
  CHECK_FALSE(is_nondegenerate_even(pf("x0^4 + x1^4 + x2^4"), 3));
  // A sum of six general fourth powers fills the quadric catalecticant.
  Polynomial F = pf("x0^4 + x1^4 + x2^4 + (x0+x1)^4 + (x1+x2)^4 + "
                    "(x0+x1+x2)^4");
  CHECK(catalecticant_rank(F, Multidegree{2}) == 6);
  CHECK(is_nondegenerate_even(F, 3));
  CHECK_THROWS_AS(is_nondegenerate_even(pf("x0^3"), 3), input_error);
}

TEST_CASE("common factor of a kernel piece") {
  // Operators of degree 2 annihilating x0^2*x1^2 share the factor y2.
  auto g = kernel_common_factor(pf("x0^2*x1^2"), Multidegree{2});
  REQUIRE(g.has_value());
  CHECK(g->monic() == pd("y2"));
  // A concise cubic with 1-dimensional quadric kernel: factor is the gcd.
  auto h = kernel_common_factor(pf("x0^3 + x1^3 + x2^3"), Multidegree{1});
  CHECK_FALSE(h.has_value());  // zero kernel in degree 1
}

TEST_CASE("essential variables") {
  EssentialForm e1 = essential_form(pf("x0^2*x1"));
  CHECK(e1.essential_count == 2);
  CHECK(e1.form.ring()->nvars() == 2);
  CHECK(is_concise(e1.form));
  CHECK(e1.form.total_degree() == 3);

  EssentialForm e2 = essential_form(pf("(x0 + x1 + x2)^3"));
  CHECK(e2.essential_count == 1);
  CHECK(is_concise(e2.form));

  EssentialForm e3 = essential_form(pf("x0^3 + x1^3 + x2^3"));
  CHECK(e3.essential_count == 3);

  // A form of two essential variables in disguise.
  EssentialForm e4 = essential_form(pf("(x0+x1)^2*(x0-x1)"));
  CHECK(e4.essential_count == 2);
}

TEST_CASE("gcd over the rationals") {
  RingPtr S = SP2();
  Polynomial a = pd("y0^2 - y1^2");
  Polynomial b = pd("y0^2 + 2*y0*y1 + y1^2");
  CHECK(poly_gcd(a, b) == pd("y0 + y1"));
  CHECK(poly_gcd(pd("y0*y1"), pd("y2^2")) == pd("1"));
  CHECK(poly_gcd_list({pd("y0*y2"), pd("y1*y2"), pd("y2^2")}) == pd("y2"));
}

TEST_CASE("tensors from JSON") {
  Polynomial t = tensor_from_json(
      R"({"shape":[2,2,2],"entries":[1,0,0,0,0,0,0,1]})");
  RingPtr R = t.ring();
  CHECK(R->nblocks() == 3);
  CHECK(R->side() == Ring::Side::forms);
  CHECK(t == parse_polynomial(R, "a1*b1*c1 + a2*b2*c2"));

  Polynomial t2 = tensor_from_json(
      R"({"shape":[2,2],"entries":["1/2",0,0,"-3"]})");
  CHECK(t2 == parse_polynomial(t2.ring(), "1/2*a1*b1 - 3*a2*b2"));

  CHECK_THROWS_AS(tensor_from_json(R"({"shape":[2,2],"entries":[1,2,3]})"),
                  input_error);
  CHECK_THROWS_AS(tensor_from_json("not json"), input_error);
}
