#include "borderline/homological.hpp"

#include <algorithm>
#include <unordered_map>

#include "borderline/hilbert.hpp"
#include "borderline/linalg.hpp"

namespace borderline {

namespace {

using MonIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonIndex index_of(const std::vector<Monomial>& basis) {
  MonIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Matrix of the degree-0 part of Hom(target, N) -> Hom(source, N) induced by
// a map source -> target of free modules.  `target_shifts` grades the target
// basis, `columns[q]` is the image of the q-th source basis element (an
// element of the target free module), of multidegree `column_degrees[q]`.
// Rows are indexed by (q, standard monomial of N in column_degrees[q]);
// columns of the matrix by (i, standard monomial of N in target_shifts[i]).
QMatrix hom_matrix(const GroebnerBasis& gbN,
                   const std::vector<Multidegree>& target_shifts,
                   const std::vector<ModuleElement>& columns,
                   const std::vector<Multidegree>& column_degrees) {
  std::vector<std::vector<Monomial>> tbasis(target_shifts.size());
  std::vector<std::size_t> offset(target_shifts.size(), 0);
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < target_shifts.size(); ++i) {
    tbasis[i] = standard_monomials(gbN, target_shifts[i]);
    offset[i] = unknowns;
    unknowns += tbasis[i].size();
  }
  QMatrix M(0, unknowns);
  for (std::size_t q = 0; q < columns.size(); ++q) {
    std::vector<Monomial> rows_basis =
        standard_monomials(gbN, column_degrees[q]);
    if (rows_basis.empty()) continue;
    MonIndex ridx = index_of(rows_basis);
    std::vector<std::vector<Q>> rows(rows_basis.size(),
                                     std::vector<Q>(unknowns, Q(0)));
    for (std::size_t i = 0; i < target_shifts.size(); ++i) {
      const Polynomial& c = columns[q].coord[i];
      if (c.is_zero()) continue;
      for (std::size_t b = 0; b < tbasis[i].size(); ++b) {
        Polynomial nf = normal_form(c.times_term(tbasis[i][b], Q(1)), gbN);
        for (const Term& t : nf.terms())
          rows[ridx.at(t.m)][offset[i] + b] += t.c;
      }
    }
    for (auto& r : rows) M.append_row(r);
  }
  return M;
}

std::vector<Multidegree> generator_degrees(const std::vector<Polynomial>& g) {
  std::vector<Multidegree> d;
  for (const Polynomial& p : g) {
    std::optional<Multidegree> m = p.multidegree();
    if (!m) throw input_error("homological ops require homogeneous generators");
    d.push_back(*m);
  }
  return d;
}

}  // namespace

Multidegree module_element_degree(const ModuleElement& h,
                                  const std::vector<Multidegree>& shifts) {
  std::optional<Multidegree> deg;
  for (std::size_t i = 0; i < h.coord.size(); ++i) {
    if (h.coord[i].is_zero()) continue;
    std::optional<Multidegree> d = h.coord[i].multidegree();
    if (!d) throw input_error("inhomogeneous module element");
    Multidegree full = *d + shifts[i];
    if (deg && *deg != full) throw input_error("inhomogeneous module element");
    deg = full;
  }
  if (!deg) throw input_error("degree of the zero module element");
  return *deg;
}

ModulePresentation syzygies(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw input_error("syzygies of an empty generator list");
  RingPtr R = gens.front().ring();
  ModulePresentation P;
  P.R = R;
  P.generators = gens;
  P.degrees = generator_degrees(gens);
  P.relations = ideal_syzygies(gens, MonomialOrder::canonical(*R));
  return P;
}

long hom_degree0_dim(const Ideal& I0) {
  Ideal I = I0;
  I.drop_zeros();
  if (I.is_zero()) return 0;
  if (!I.all_homogeneous())
    throw input_error("hom dimension requires a homogeneous ideal");
  const RingPtr& R = I.R;
  std::vector<Multidegree> deg = generator_degrees(I.gens);
  std::vector<ModuleElement> syz =
      ideal_syzygies(I.gens, MonomialOrder::canonical(*R));
  GroebnerBasis gb = groebner(I);

  std::vector<std::vector<Monomial>> basis(I.gens.size());
  std::vector<std::size_t> offset(I.gens.size(), 0);
  std::size_t unknowns = 0;
  for (std::size_t j = 0; j < I.gens.size(); ++j) {
    basis[j] = standard_monomials(gb, deg[j]);
    offset[j] = unknowns;
    unknowns += basis[j].size();
  }

  QMatrix M(0, unknowns);
  for (const ModuleElement& h : syz) {
    Multidegree e = module_element_degree(h, deg);
    std::vector<Monomial> target = standard_monomials(gb, e);
    if (target.empty()) continue;
    MonIndex tidx = index_of(target);
    std::vector<std::vector<Q>> rows(target.size(),
                                     std::vector<Q>(unknowns, Q(0)));
    for (std::size_t j = 0; j < I.gens.size(); ++j) {
      if (h.coord[j].is_zero()) continue;
      for (std::size_t b = 0; b < basis[j].size(); ++b) {
        Polynomial nf = normal_form(h.coord[j].times_term(basis[j][b], Q(1)),
                                    gb);
        for (const Term& t : nf.terms())
          rows[tidx.at(t.m)][offset[j] + b] += t.c;
      }
    }
    for (auto& r : rows) M.append_row(r);
  }
  return static_cast<long>(unknowns - M.rank());
}

long ext1_degree0_dim(const Ideal& J0, const Ideal& I0) {
  Ideal J = J0, I = I0;
  J.drop_zeros();
  I.drop_zeros();
  if (!same_ring(J.R, I.R))
    throw input_error("Ext requires ideals in the same ring");
  if (!J.all_homogeneous() || !I.all_homogeneous())
    throw input_error("Ext requires homogeneous ideals");
  if (!ideal_contains(J, I))
    throw input_error("Ext requires the second ideal inside the first");
  if (J.is_zero()) return 0;
  const RingPtr& R = J.R;
  const MonomialOrder ord = MonomialOrder::canonical(*R);

  std::vector<Multidegree> degJ = generator_degrees(J.gens);

  // Relations of J/I inside the free module on J's generators: front
  // projections of syzygies of the combined list (J gens | I gens).
  std::vector<Polynomial> combined = J.gens;
  combined.insert(combined.end(), I.gens.begin(), I.gens.end());
  std::vector<ModuleElement> k1;
  for (const ModuleElement& s : ideal_syzygies(combined, ord)) {
    ModuleElement front;
    front.coord.assign(s.coord.begin(),
                       s.coord.begin() + static_cast<long>(J.gens.size()));
    bool zero = std::all_of(front.coord.begin(), front.coord.end(),
                            [](const Polynomial& p) { return p.is_zero(); });
    if (!zero) k1.push_back(std::move(front));
  }

  GroebnerBasis gbJ = groebner(J);
  if (k1.empty()) return 0;  // free module: no Ext^1

  std::vector<Multidegree> degK1;
  for (const ModuleElement& h : k1)
    degK1.push_back(module_element_degree(h, degJ));

  std::vector<ModuleElement> k2 = module_syzygies(k1, ord);
  std::vector<Multidegree> degK2;
  for (const ModuleElement& h : k2)
    degK2.push_back(module_element_degree(h, degK1));

  QMatrix D1 = hom_matrix(gbJ, degJ, k1, degK1);
  QMatrix D2 = hom_matrix(gbJ, degK1, k2, degK2);
  std::size_t hom_f1 = 0;
  for (const Multidegree& e : degK1)
    hom_f1 += standard_monomials(gbJ, e).size();
  long kernel_dim = static_cast<long>(hom_f1 - D2.rank());
  return kernel_dim - static_cast<long>(D1.rank());
}

long ext1_ci_formula(const Ideal& J, const Ideal& I, int d) {
  if (!J.R || J.R->nblocks() != 1)
    throw input_error("complete-intersection formula requires a single block");
  if (!same_ring(J.R, I.R))
    throw input_error("the ideals must live in the same ring");
  if (!J.all_homogeneous() || !I.all_homogeneous())
    throw input_error("the formula requires homogeneous ideals");
  const RingPtr& R = J.R;
  int n = R->nvars() - 1;
  if (static_cast<int>(J.gens.size()) != n)
    throw input_error(
        "a codimension-n complete intersection needs exactly n generators");
  int degsum = 0;
  for (const Polynomial& g : J.gens) {
    if (g.total_degree() < 1)
      throw input_error("complete-intersection generators must be nonconstant");
    degsum += g.total_degree();
  }
  if (d != degsum - (n + 1))
    throw input_error("the degree argument must be (sum of degrees) - (n+1)");

  // Regular-sequence certificate: each generator is a non zero-divisor
  // modulo its predecessors.
  Ideal acc(R);
  for (const Polynomial& g : J.gens) {
    if (!acc.is_zero()) {
      Ideal c = colon(acc, g);
      if (!ideal_equal(c, acc))
        throw input_error("generators do not form a regular sequence");
    }
    acc = acc + Ideal(R, {g});
  }

  Multidegree dd({d});
  std::vector<Monomial> ambient = monomial_basis(*R, dd);
  MonIndex aidx = index_of(ambient);
  auto poly_row = [&](const Polynomial& p) {
    std::vector<Q> v(ambient.size(), Q(0));
    for (const Term& t : p.terms()) v[aidx.at(t.m)] += t.c;
    return v;
  };
  auto span_of = [&](const std::vector<Polynomial>& fs) {
    RowSpace sp(ambient.size());
    for (const Polynomial& f : fs) {
      int rest = d - f.total_degree();
      if (rest < 0 || f.is_zero()) continue;
      for (const Monomial& m : monomial_basis(*R, Multidegree({rest})))
        sp.insert(poly_row(f.times_term(m, Q(1))));
    }
    return sp;
  };

  RowSpace Jd = span_of(J.gens);
  RowSpace Id = span_of(I.gens);
  // I_d must sit inside J_d with codimension at most 1.
  for (const Polynomial& f : I.gens) {
    int rest = d - f.total_degree();
    if (rest < 0 || f.is_zero()) continue;
    for (const Monomial& m : monomial_basis(*R, Multidegree({rest})))
      if (!Jd.contains(poly_row(f.times_term(m, Q(1)))))
        throw input_error("I_d is not contained in J_d");
  }
  if (Jd.dim() > Id.dim() + 1)
    throw input_error("I_d must have codimension at most 1 in J_d");

  // W = I_d + (J^2)_d.
  RowSpace W = Id;
  for (std::size_t i = 0; i < J.gens.size(); ++i)
    for (std::size_t j = i; j < J.gens.size(); ++j) {
      Polynomial prod = J.gens[i] * J.gens[j];
      int rest = d - prod.total_degree();
      if (rest < 0) continue;
      for (const Monomial& m : monomial_basis(*R, Multidegree({rest})))
        W.insert(poly_row(prod.times_term(m, Q(1))));
    }
  return static_cast<long>(Jd.dim() - W.dim());
}

}  // namespace borderline
