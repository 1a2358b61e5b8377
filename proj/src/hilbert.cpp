#include "borderline/hilbert.hpp"

#include <algorithm>

namespace borderline {

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb,
                                         const Multidegree& u) {
  if (gb.degree_cap >= 0 && u.total() > gb.degree_cap)
    throw input_error("Hilbert query beyond the truncation cap");
  std::vector<Monomial> out;
  for (const Monomial& m : monomial_basis(*gb.R, u)) {
    bool standard = true;
    for (const Monomial& lead : gb.lead)
      if (lead.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

long hilbert_function(const GroebnerBasis& gb, const Multidegree& u) {
  return static_cast<long>(standard_monomials(gb, u).size());
}

long hilbert_function(const Ideal& I, const Multidegree& u) {
  if (!I.all_homogeneous())
    throw input_error("Hilbert function requires a homogeneous ideal");
  GroebnerBasis gb = groebner(I, MonomialOrder::canonical(*I.R), u.total());
  return hilbert_function(gb, u);
}

long generic_hilbert_function(const Ring& R, long r, const Multidegree& u) {
  if (r < 0) throw input_error("negative length");
  return std::min(r, R.graded_piece_dimension(u));
}

GenericHFCheck has_generic_hf(const Ideal& I, long r, const Multidegree& hi) {
  std::vector<Multidegree> box = degree_box(hi);
  std::stable_sort(box.begin(), box.end(),
                   [](const Multidegree& a, const Multidegree& b) {
                     if (a.total() != b.total()) return a.total() < b.total();
                     return a.lex_less(b);
                   });
  GroebnerBasis gb = groebner(I, MonomialOrder::canonical(*I.R), hi.total());
  for (const Multidegree& u : box) {
    long actual = hilbert_function(gb, u);
    long expected = generic_hilbert_function(*I.R, r, u);
    if (actual != expected)
      return GenericHFCheck{false, u, expected, actual};
  }
  return GenericHFCheck{};
}

namespace {

// Diagonal walk on the saturated ideal.  Saturation makes the Hilbert
// function nondecreasing in every coordinate direction, so a repeated full
// plateau certifies the eventual value and any value above the threshold is
// final evidence of growth.
struct DiagonalWalk {
  GroebnerBasis gb;
  const Ring& R;
  int s;
  explicit DiagonalWalk(const Ideal& sat, int cap)
      : gb(groebner(sat, MonomialOrder::canonical(*sat.R),
                    (cap + 2) * static_cast<int>(sat.R->grading_rank()))),
        R(*sat.R),
        s(static_cast<int>(sat.R->grading_rank())) {}
  bool flat_at(int c, long& value) {
    Multidegree u(s, c);
    value = hilbert_function(gb, u);
    for (int j = 0; j < s; ++j) {
      Multidegree v = u + Multidegree::unit(s, j);
      if (hilbert_function(gb, v) != value) return false;
    }
    return true;
  }
};

}  // namespace

long stable_value(const Ideal& I, int diagonal_cap) {
  if (!I.all_homogeneous())
    throw input_error("stable value requires a homogeneous ideal");
  Ideal sat = saturate_irrelevant(I);
  DiagonalWalk walk(sat, diagonal_cap);
  int flats = 0;
  long prev = -1;
  for (int c = 0; c <= diagonal_cap; ++c) {
    long value = 0;
    if (walk.flat_at(c, value) && (flats == 0 || value == prev)) {
      if (++flats == 2) return value;
      prev = value;
    } else {
      flats = 0;
    }
  }
  throw inconclusive_error("Hilbert function did not stabilize on the diagonal");
}

bool has_stable_value(const Ideal& I, long r, int diagonal_cap) {
  if (!I.all_homogeneous())
    throw input_error("stable value requires a homogeneous ideal");
  Ideal sat = saturate_irrelevant(I);
  DiagonalWalk walk(sat, diagonal_cap);
  int flats = 0;
  long prev = -1;
  for (int c = 0; c <= diagonal_cap; ++c) {
    Multidegree u(walk.s, c);
    long value = hilbert_function(walk.gb, u);
    if (value > r) return false;  // nondecreasing from here on
    if (walk.flat_at(c, value) && (flats == 0 || value == prev)) {
      if (++flats == 2) return value == r;
      prev = value;
    } else {
      flats = 0;
    }
  }
  throw inconclusive_error("Hilbert function did not stabilize on the diagonal");
}

long macaulay_upper(long h, long d) {
  if (d < 1) throw input_error("Macaulay bound needs degree >= 1");
  if (h < 0) throw input_error("negative Hilbert value");
  if (h == 0) return 0;
  auto binom = [](long n, long k) -> long {
    if (k < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long rest = h, bound = 0, i = d;
  while (rest > 0 && i >= 1) {
    long k = i;
    while (binom(k + 1, i) <= rest) ++k;
    bound += binom(k + 1, i + 1);
    rest -= binom(k, i);
    --i;
  }
  return bound;
}

}  // namespace borderline
