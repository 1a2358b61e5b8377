#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borderline/apolarity.hpp"
#include "borderline/groebner.hpp"
#include "borderline/hilbert.hpp"
#include "borderline/homological.hpp"
#include "borderline/ideal.hpp"
#include "borderline/report.hpp"

namespace borderline {

// ---------------------------------------------------------------------------
// Degree pieces and truncations.
// ---------------------------------------------------------------------------

// A vector-space basis of the degree-u piece of the ideal, as polynomials
// (monomial multiples of the generators, completed deterministically).
std::vector<Polynomial> degree_piece_basis(const Ideal& I,
                                           const Multidegree& u);

// dim_Q I_u.
long degree_piece_dim(const Ideal& I, const Multidegree& u);

// The truncation I_{>=d} of a single-block ideal: generated by a basis of
// I_d together with the given generators of total degree > d.
Ideal truncate_ideal(const Ideal& I, int d);

// The ideal generated by a basis of { psi of degree u : psi . F = 0 },
// living in the operator ring.
Ideal annihilator_piece(const Polynomial& F, const Multidegree& u);

// ---------------------------------------------------------------------------
// Guided enumeration of monomial extensions with a target Hilbert function.
// ---------------------------------------------------------------------------

struct EnumerationConfig {
  // Starting ideal; its ring (single block, operator side) is the ambient.
  Ideal J0;
  // Target number of points: branches must track min(r, dim S_i).
  long r = 0;
  // Largest total degree in which new monomial generators may be added.
  // Negative = use default_enumeration_cap(*filter); a cap below the largest
  // generator degree of J0 is rejected.
  int cap = -1;
  // When set, only monomials annihilating this form may be added.
  std::optional<Polynomial> filter;
  // Upper bound on simultaneously live branches; exceeding it aborts with
  // an inconclusive error.
  long branch_limit = 200000;
};

// Default generator-degree cap: one past the total degree where the Hilbert
// function of the quotient by the annihilator of F reaches zero.
int default_enumeration_cap(const Polynomial& F);

// All ideals obtained from J0 by adding, in each total degree i <= cap,
// exactly HF(S/current, i) - min(r, dim S_i) new monomials (a branch with a
// negative count is pruned), keeping a branch only when afterwards
// HF(S/I, i) = min(r, dim S_i) and HF(S/I, i+1) >= min(r, dim S_{i+1}), and
// finally keeping only ideals whose saturated Hilbert function stabilises
// exactly at r.  The result is sorted canonically and does not depend on
// the exploration order.
std::vector<Ideal> enumerate_monomial_apolar_ideals(
    const EnumerationConfig& cfg);

// Complete search for monomial ideals inside Ann(F) whose quotient has the
// Hilbert function of r generic points in every degree.  Generator degrees
// of such ideals are at most r, so the enumeration cap r makes the search
// exhaustive.
std::vector<Ideal> monomial_apolar_search(const Polynomial& F, long r);

// ---------------------------------------------------------------------------
// First-order obstruction filter for enumerated candidates.
// ---------------------------------------------------------------------------

struct SlipFilterEntry {
  Ideal ideal;
  Ideal saturation;
  bool saturated = false;
  // dim Ext^1(sat/I, S/sat) in degree 0; -1 when the ideal is saturated and
  // the computation is skipped.
  long ext1 = -1;
};

struct SlipFilterResult {
  std::vector<SlipFilterEntry> kept;      // saturated, or ext1 != 0
  std::vector<SlipFilterEntry> excluded;  // nonsaturated with ext1 == 0
};

// Splits candidates by the degree-0 Ext^1 obstruction against their
// saturations: a nonsaturated ideal whose Ext^1 vanishes cannot be a limit
// of saturated ones and is excluded.
SlipFilterResult slip_ext_filter(const std::vector<Ideal>& candidates);

// ---------------------------------------------------------------------------
// Border rank of monomials.
// ---------------------------------------------------------------------------

struct MonomialBorderRank {
  std::vector<int> exponents;  // normalised: ascending, all positive
  long upper_bound = 0;        // product of (e_i + 1) over all but the last
  // Largest exponent >= (sum of the others) - 2: the closed-form regime.
  bool closed_form = false;
  // No monomial ideal inside Ann(F) attains the Hilbert function of
  // upper_bound - 1 generic points (certifies the lower bound).
  bool search_empty = false;
  bool certified = false;
  long value = 0;
  // HF(S/Ann F, e_last + 1); in the boundary case e_last = sum - 2 this
  // equals value - 2.
  long plateau_hf = 0;
  double elapsed_ms = 0;

  Json to_json() const;
};

MonomialBorderRank monomial_border_rank(const Polynomial& F);

// ---------------------------------------------------------------------------
// Wildness of a concise three-factor tensor of minimal border rank.
// ---------------------------------------------------------------------------

struct WildnessReport {
  long m = 0;
  bool wild = false;
  long hf_111 = 0;  // HF(S/I, (1,1,1)) for the multihomogeneous annihilator
  Ideal I;          // generated by the three mixed-degree annihilator pieces
  Ideal K;          // saturation of I
  std::vector<Multidegree> mismatch;  // degrees in the test set where I != K
  bool vsp_is_singleton = false;      // when not wild: the only candidate is K
  bool k_generic = false;             // K has the generic Hilbert function
  double elapsed_ms = 0;

  Json to_json() const;
};

// Decides wildness for a concise tensor in C^m x C^m x C^m of minimal
// border rank m: wild iff HF(S/I,(1,1,1)) != m or I differs from its
// saturation in one of the seven unit-box degrees.
WildnessReport tensor_wildness(const Polynomial& F, long m);

// ---------------------------------------------------------------------------
// Identifiability through a Hilbert-function plateau.
// ---------------------------------------------------------------------------

struct PlateauReport {
  long r = 0;
  std::string verdict;  // one of the three strings below
  std::optional<Multidegree> plateau;  // u with HF(u) = HF(u + 1) = r
  std::optional<Ideal> witness;        // saturated apolar ideal found
  double elapsed_ms = 0;

  Json to_json() const;

  static constexpr const char* kIdentifiable =
      "border identifiable: the witness is the unique minimal apolar scheme";
  static constexpr const char* kNoWitness =
      "plateau found, no saturated witness";
  static constexpr const char* kNoPlateau = "no plateau";
};

PlateauReport plateau_identifiability(const Polynomial& F, long r);

// ---------------------------------------------------------------------------
// Closed-form descriptions of the minimal border-rank decompositions.
// ---------------------------------------------------------------------------

struct VspBarReport {
  std::string procedure;
  long r = -1;          // border rank used
  std::string shape;    // "point", "P^1", "P^2", "P^N", or "unresolved"
  int dimension = -1;   // projective dimension of the shape (0 for a point)
  std::optional<Ideal> ideal;      // the unique member, when shape == point
  std::vector<Polynomial> space;   // spanning operators when positive-dim
  std::string criterion;           // which decision rule fired
  std::string verdict;
  std::vector<std::pair<std::string, bool>> certificates;
  double elapsed_ms = 0;

  bool unresolved() const { return shape == "unresolved"; }
  Json to_json() const;
};

// Binary forms: the annihilator is a complete intersection (g1, g2) with
// deg g1 <= deg g2; the border rank is deg g1 and the decompositions form a
// point {(g1)} or, when the two degrees agree, the pencil P(Ann_deg).
VspBarReport sylvester_binary(const Polynomial& F);

// Plane cubics: delegates to the binary routine when fewer than three
// variables are essential; otherwise splits on whether the annihilator is
// generated by quadrics (shape P^2 at rank 4) or has a nonzero hessian
// (unique point (Ann_2) at rank 3).
VspBarReport ternary_cubic_vspbar(const Polynomial& F);

// Complete-intersection route: given F and an apolar complete intersection
// J = (g_1, ..., g_n) in n+1 variables with exponents a_i = deg g_i - 1,
// d = sum a_i - 1 and r = prod (a_i + 1), decides between a unique
// (nonsaturated) member J_{>=d+1} and a projective space of members of
// dimension HF(S/J^2, d) - r.  Hypothesis failures yield an unresolved
// report, never an exception.
VspBarReport ci_vspbar(const Polynomial& F, const Ideal& J);

// The subspace test behind the route: is (J^2)_d contained in the span
// of W (a list of degree-d polynomials)?
bool ci_codim1_subspace_test(const Ideal& J, int d,
                             const std::vector<Polynomial>& W);

// Reducible cubics x0*q in n+1 variables, 2 <= n <= 4:
//   kind 'A': q = x0^2 + x1^2 + ... + xn^2
//   kind 'B': q = x1^2 + ... + xn^2
//   kind 'C': q = x0*x1 + x2^2 + ... + xn^2
Polynomial cw_cubic(char kind, int n);
VspBarReport cw_cubic_vspbar(char kind, int n);

// ---------------------------------------------------------------------------
// Plane monomials x0^a x1^b x2^c with 0 < a <= b <= c.
// ---------------------------------------------------------------------------

struct MonomialVpsReport {
  int a = 0, b = 0, c = 0;
  long r = 0;           // (a+1)(b+1)
  std::string regime;   // "c>=a+b", "c==a+b-1", or "c<=a+b-2"
  std::string vps_shape;  // "point", "P^1", or "P^2"
  bool fiber_type = true;
  std::string description;
  std::vector<Ideal> members;  // unique member, or representative members
  std::vector<std::pair<std::string, bool>> certificates;
  double elapsed_ms = 0;

  Json to_json() const;
};

MonomialVpsReport monomial_vps_report(int a, int b, int c);

// ---------------------------------------------------------------------------
// Randomised generic-rank verification for partial-derivative matrices.
// ---------------------------------------------------------------------------

// For w a random combination of the degree-a plane monomials divisible by
// x0^2 but not x0^4, checks that the matrix of order-e derivatives of w,
// projected to the monomials still divisible by x0^2, has rank at least
// rank_target.  Three agreeing random samples are required; a sample below
// target is resampled, and three failures abort as inconclusive.
bool generic_omega_rank(int a, int e, long rank_target, unsigned seed = 1);

// ---------------------------------------------------------------------------
// Admissible Hilbert functions.
// ---------------------------------------------------------------------------

// All sequences h(0..d_max) with h(0)=1, h nondecreasing, h(i) bounded by
// min(r, dim S_i) and by the Macaulay growth bound from h(i-1).  These are
// the candidate Hilbert functions of saturated ideals of schemes of length
// at most r.
std::vector<std::vector<long>> admissible_hilbert_functions(const Ring& R,
                                                            long r,
                                                            int d_max);

}  // namespace borderline
