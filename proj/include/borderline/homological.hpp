#pragma once

#include <vector>

#include "borderline/groebner.hpp"
#include "borderline/ideal.hpp"

namespace borderline {

// A graded module given by generators inside the ring together with a
// generating set of relations among them.
struct ModulePresentation {
  RingPtr R;
  std::vector<Polynomial> generators;
  std::vector<Multidegree> degrees;       // multidegree of each generator
  std::vector<ModuleElement> relations;   // rows h with sum_i h[i]*gen[i] = 0
};

// First syzygies of a homogeneous generator list.
ModulePresentation syzygies(const std::vector<Polynomial>& gens);

// Multidegree of a homogeneous module element over the given shifts
// (degree of coordinate i plus shifts[i], consistent across coordinates).
Multidegree module_element_degree(const ModuleElement& h,
                                  const std::vector<Multidegree>& shifts);

// Dimension of the space of grading-preserving module maps I -> S/I,
// computed by solving "the images of the generators satisfy every syzygy
// modulo I" in the relevant graded pieces.
long hom_degree0_dim(const Ideal& I);

// Dimension of Ext^1(J/I, S/J) in degree 0, from two explicit resolution
// steps of J/I and exact linear algebra in the finitely many degrees where
// the resolution lives.  Requires I to be contained in J.
long ext1_degree0_dim(const Ideal& J, const Ideal& I);

// Closed-form value dim J_d / (I_d + (J^2)_d) for a single-block
// complete intersection J = (g_1, ..., g_n) in n+1 variables with
// d = sum deg g_i - (n+1); requires I_d to be a subspace of J_d of
// codimension at most 1.  Rejects J that is not a complete intersection.
long ext1_ci_formula(const Ideal& J, const Ideal& I, int d);

}  // namespace borderline
