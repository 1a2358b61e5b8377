#include "borderline/apolarity.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "borderline/gcd.hpp"
#include "borderline/groebner.hpp"
#include "borderline/hilbert.hpp"

namespace borderline {

namespace {

// Partner ring of psi's ring when psi acts on something living in `forms`.
void check_compatible(const Polynomial& psi, const Polynomial& F) {
  const RingPtr& A = psi.ring();
  const RingPtr& B = F.ring();
  if (!A || !B) throw input_error("apolar action on default-constructed polynomial");
  if (A->nvars() != B->nvars())
    throw input_error("apolar action: operator and form rings differ");
}

Q falling_factorial_scale(const Monomial& a, const Monomial& b) {
  // prod_i b_i * (b_i - 1) * ... * (b_i - a_i + 1)
  Q s(1);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    for (int k = 0; k < a.e[i]; ++k) s *= Q(b.e[i] - k);
  return s;
}

std::vector<Q> poly_to_vector(const Polynomial& p,
                              const std::vector<Monomial>& basis) {
  std::vector<Q> v(basis.size(), Q(0));
  for (std::size_t j = 0; j < basis.size(); ++j) v[j] = p.coeff(basis[j]);
  return v;
}

Polynomial vector_to_poly(const RingPtr& R, const std::vector<Q>& v,
                          const std::vector<Monomial>& basis) {
  std::vector<Term> ts;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (v[j] != 0) ts.push_back({basis[j], v[j]});
  return Polynomial(R, std::move(ts));
}

bool degree_lt(const Multidegree& a, const Multidegree& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.lex_less(b);
}

Q q_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Q q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
      throw input_error("tensor entry is not a rational number: " + j.dump());
    q.canonicalize();
    return q;
  }
  throw input_error("tensor entries must be integers or \"p/q\" strings");
}

}  // namespace

Polynomial apolar_action(const Polynomial& psi, const Polynomial& F) {
  check_compatible(psi, F);
  Polynomial out = Polynomial::zero(F.ring());
  for (const Term& t : psi.terms()) {
    std::vector<Term> part;
    for (const Term& s : F.terms()) {
      if (!t.m.divides(s.m)) continue;
      Q c = t.c * s.c * falling_factorial_scale(t.m, s.m);
      if (c != 0) part.push_back({s.m / t.m, c});
    }
    out = out + Polynomial(F.ring(), std::move(part));
  }
  return out;
}

QMatrix catalecticant(const Polynomial& F, const Multidegree& u) {
  if (F.is_zero()) throw input_error("catalecticant of the zero form");
  std::optional<Multidegree> v = F.multidegree();
  if (!v) throw input_error("catalecticant requires a homogeneous form");
  if (!u.nonnegative()) throw input_error("catalecticant degree must be >= 0");
  RingPtr T = F.ring();
  RingPtr S = T->dual();
  std::vector<Monomial> rows = monomial_basis(*S, u);
  Multidegree w = *v - u;
  std::vector<Monomial> cols =
      w.nonnegative() ? monomial_basis(*T, w) : std::vector<Monomial>{};
  QMatrix M(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Polynomial g = apolar_action(Polynomial::monomial(S, rows[i]), F);
    for (std::size_t j = 0; j < cols.size(); ++j) M.at(i, j) = g.coeff(cols[j]);
  }
  return M;
}

long catalecticant_rank(const Polynomial& F, const Multidegree& u) {
  return static_cast<long>(catalecticant(F, u).rank());
}

Ideal annihilator(const Polynomial& F) {
  if (F.is_zero()) throw input_error("annihilator of the zero form");
  std::optional<Multidegree> v = F.multidegree();
  if (!v) throw input_error("annihilator requires a homogeneous form");
  RingPtr T = F.ring();
  RingPtr S = T->dual();

  std::vector<Multidegree> box = degree_box(*v + Multidegree::ones(v->size()));
  std::sort(box.begin(), box.end(), degree_lt);

  std::vector<Polynomial> gens;
  std::vector<Multidegree> gen_degree;
  for (const Multidegree& u : box) {
    if (u.total() == 0) continue;
    std::vector<Monomial> basis = monomial_basis(*S, u);
    if (basis.empty()) continue;
    std::map<Monomial, std::size_t, decltype(&canonical_less)> index(
        &canonical_less);
    for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;

    // Span of degree-u multiples of the generators found so far.
    RowSpace span(basis.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Multidegree shift = u - gen_degree[k];
      if (!shift.nonnegative() || shift.total() == 0) continue;
      for (const Monomial& m : monomial_basis(*S, shift)) {
        Polynomial mult = gens[k].times_term(m, Q(1));
        std::vector<Q> row(basis.size(), Q(0));
        for (const Term& t : mult.terms()) row[index.at(t.m)] = t.c;
        span.insert(std::move(row));
      }
    }

    if (u.leq(*v)) {
      QMatrix cat = catalecticant(F, u);
      // Operators annihilating F = left kernel of cat = right kernel of the
      // transpose.
      QMatrix catT(cat.cols(), cat.rows());
      for (std::size_t i = 0; i < cat.rows(); ++i)
        for (std::size_t j = 0; j < cat.cols(); ++j)
          catT.at(j, i) = cat.at(i, j);
      std::vector<std::vector<Q>> ker = catT.kernel();
      std::size_t expected = basis.size() - cat.rank();
      for (const std::vector<Q>& kv : ker) {
        if (span.insert(kv)) {
          gens.push_back(vector_to_poly(S, kv, basis));
          gen_degree.push_back(u);
        }
      }
      if (span.dim() != expected)
        throw inconclusive_error(
            "annihilator: degree " + u.str() +
            " kernel completion does not match the catalecticant corank");
    } else {
      // Every operator of this degree annihilates F; new generators are the
      // monomials not yet covered.
      for (const Monomial& m : basis) {
        std::vector<Q> row(basis.size(), Q(0));
        row[index.at(m)] = 1;
        if (span.insert(std::move(row))) {
          gens.push_back(Polynomial::monomial(S, m));
          gen_degree.push_back(u);
        }
      }
    }
  }

  Ideal A(S, gens);
  // Certificate: the Hilbert function of the returned ideal matches the
  // catalecticant rank on the whole scan box.
  int cap = (*v + Multidegree::ones(v->size())).total();
  GroebnerBasis gb = groebner(A, MonomialOrder::canonical(*S), cap);
  for (const Multidegree& u : box) {
    long hf = hilbert_function(gb, u);
    long rk = u.leq(*v) ? catalecticant_rank(F, u) : 0;
    if (hf != rk)
      throw inconclusive_error("annihilator: certification failed in degree " +
                               u.str());
  }
  return A;
}

std::vector<bool> concise_blocks(const Polynomial& F) {
  if (F.is_zero()) throw input_error("conciseness of the zero form");
  std::optional<Multidegree> v = F.multidegree();
  if (!v) throw input_error("conciseness requires a homogeneous form");
  RingPtr T = F.ring();
  std::vector<bool> out;
  for (int b = 0; b < T->nblocks(); ++b) {
    Multidegree u = T->var_degree(T->first_var_of_block(b));
    long full = T->block_size(b);
    out.push_back(catalecticant_rank(F, u) == full);
  }
  return out;
}

bool is_concise(const Polynomial& F) {
  std::vector<bool> per = concise_blocks(F);
  return std::all_of(per.begin(), per.end(), [](bool b) { return b; });
}

namespace {
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m,
                   std::size_t row, unsigned cols_used,
                   std::map<unsigned, Polynomial>& memo, const RingPtr& R) {
  std::size_t n = m.size();
  if (row == n) return Polynomial::constant(R, Q(1));
  auto it = memo.find(cols_used);
  if (it != memo.end()) return it->second;
  Polynomial acc = Polynomial::zero(R);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (cols_used & (1u << j)) continue;
    if (!m[row][j].is_zero()) {
      Polynomial sub = det_rec(m, row + 1, cols_used | (1u << j), memo, R);
      Polynomial term = m[row][j] * sub;
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
  }
  memo.emplace(cols_used, acc);
  return acc;
}
}  // namespace

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  if (m.empty()) throw input_error("determinant of an empty matrix");
  std::size_t n = m.size();
  if (n > 31) throw input_error("determinant: matrix too large");
  for (const auto& r : m)
    if (r.size() != n) throw input_error("determinant of a non-square matrix");
  RingPtr R;
  for (const auto& r : m)
    for (const Polynomial& p : r)
      if (p.ring()) R = p.ring();
  if (!R) throw input_error("determinant: no ring on entries");
  std::map<unsigned, Polynomial> memo;
  return det_rec(m, 0, 0u, memo, R);
}

Polynomial hessian(const Polynomial& F) {
  if (F.is_zero()) throw input_error("hessian of the zero form");
  RingPtr T = F.ring();
  if (T->nblocks() != 1)
    throw input_error("hessian requires a single-block ring");
  if (F.total_degree() < 2)
    throw input_error("hessian requires degree >= 2");
  RingPtr S = T->dual();
  int n = T->nvars();
  std::vector<std::vector<Polynomial>> H(
      n, std::vector<Polynomial>(n, Polynomial::zero(T)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Polynomial dij = apolar_action(
          Polynomial::variable(S, i) * Polynomial::variable(S, j), F);
      H[i][j] = dij;
      H[j][i] = dij;
    }
  return poly_det(H);
}

bool is_nondegenerate_even(const Polynomial& F, long p) {
  if (F.is_zero()) throw input_error("nondegeneracy of the zero form");
  RingPtr T = F.ring();
  if (T->nblocks() != 1)
    throw input_error("nondegeneracy check requires a single-block ring");
  if (p < 1 || F.total_degree() != 2 * p - 2)
    throw input_error("nondegeneracy check requires degree 2p-2");
  RingPtr S = T->dual();
  for (long k = 1; k <= p - 1; ++k) {
    Multidegree u({static_cast<int>(k)});
    long full = S->graded_piece_dimension(u);
    if (catalecticant_rank(F, u) != full) return false;
  }
  return true;
}

std::optional<Polynomial> kernel_common_factor(const Polynomial& F,
                                               const Multidegree& u) {
  RingPtr S = F.ring()->dual();
  std::vector<Monomial> basis = monomial_basis(*S, u);
  QMatrix cat = catalecticant(F, u);
  QMatrix catT(cat.cols(), cat.rows());
  for (std::size_t i = 0; i < cat.rows(); ++i)
    for (std::size_t j = 0; j < cat.cols(); ++j) catT.at(j, i) = cat.at(i, j);
  std::vector<Polynomial> ker;
  for (const std::vector<Q>& kv : catT.kernel())
    ker.push_back(vector_to_poly(S, kv, basis));
  if (ker.empty()) return std::nullopt;
  Polynomial g = poly_gcd_list(ker);
  if (g.total_degree() < 1) return std::nullopt;
  return g;
}

EssentialForm essential_form(const Polynomial& F) {
  if (F.is_zero()) throw input_error("essential form of the zero form");
  RingPtr T = F.ring();
  if (T->nblocks() != 1)
    throw input_error("essential form requires a single-block ring");
  std::optional<Multidegree> v = F.multidegree();
  if (!v) throw input_error("essential form requires a homogeneous form");
  int n = T->nvars();

  // Degree-1 operators annihilating F.
  QMatrix cat = catalecticant(F, Multidegree({1}));
  QMatrix catT(cat.cols(), cat.rows());
  for (std::size_t i = 0; i < cat.rows(); ++i)
    for (std::size_t j = 0; j < cat.cols(); ++j) catT.at(j, i) = cat.at(i, j);
  std::vector<std::vector<Q>> lin = catT.kernel();

  int k = n - static_cast<int>(lin.size());
  if (k <= 0) throw input_error("essential form: form has no variables");

  // Change coordinates by an invertible matrix A whose last n-k columns
  // are the annihilating operators: after x -> A x', differentiating G by
  // one of the last variables applies such an operator to F, so G only
  // uses the first k variables.  The first k columns are unit vectors
  // completing `lin` to a basis.
  RowSpace rs(n);
  for (const std::vector<Q>& r : lin) rs.insert(r);
  std::vector<std::vector<Q>> cols;
  for (int i = 0; i < n && static_cast<int>(cols.size()) < k; ++i) {
    std::vector<Q> e(n, Q(0));
    e[i] = 1;
    if (rs.insert(e)) cols.push_back(std::move(e));
  }
  for (const std::vector<Q>& r : lin) cols.push_back(r);

  // Substitute x_i -> sum_j cols[j][i] * x'_j into a fresh n-variable ring
  // and confirm only the first k variables appear.
  RingPtr Tn = Ring::product({n}, Ring::Side::forms);
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Polynomial im = Polynomial::zero(Tn);
    for (int j = 0; j < n; ++j)
      if (cols[j][i] != 0)
        im = im + Polynomial::variable(Tn, j) * cols[j][i];
    images.push_back(im);
  }
  Polynomial G = F.substitute(Tn, images);
  for (const Term& t : G.terms())
    for (int j = k; j < n; ++j)
      if (t.m.e[j] != 0)
        throw inconclusive_error(
            "essential form: substituted form uses a non-essential variable");

  RingPtr Tk = Ring::product({k}, Ring::Side::forms);
  std::vector<Term> ts;
  for (const Term& t : G.terms()) {
    Monomial m(k);
    for (int j = 0; j < k; ++j) m.e[j] = t.m.e[j];
    ts.push_back({std::move(m), t.c});
  }
  Polynomial Gk(Tk, std::move(ts));
  if (k > 1 && !is_concise(Gk))
    throw inconclusive_error("essential form: reduced form is not concise");
  return {Gk, k};
}

Polynomial tensor_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw input_error(std::string("tensor JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
    throw input_error("tensor JSON must contain \"shape\" and \"entries\"");
  std::vector<int> shape;
  for (const auto& d : j["shape"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1)
      throw input_error("tensor shape entries must be positive integers");
    shape.push_back(static_cast<int>(d.get<long long>()));
  }
  if (shape.empty() || shape.size() > 3)
    throw input_error("tensor order must be between 1 and 3");
  long long count = 1;
  for (int d : shape) count *= d;
  const auto& entries = j["entries"];
  if (!entries.is_array() ||
      static_cast<long long>(entries.size()) != count)
    throw input_error("tensor entries length does not match the shape");

  RingPtr T = Ring::product(shape, Ring::Side::forms);
  std::vector<Term> ts;
  std::vector<int> idx(shape.size(), 0);
  for (long long flat = 0; flat < count; ++flat) {
    Q c = q_from_json(entries[static_cast<std::size_t>(flat)]);
    if (c != 0) {
      Monomial m(T->nvars());
      for (std::size_t b = 0; b < shape.size(); ++b)
        m.e[T->first_var_of_block(static_cast<int>(b)) + idx[b]] = 1;
      ts.push_back({std::move(m), c});
    }
    for (int b = static_cast<int>(shape.size()) - 1; b >= 0; --b) {
      if (++idx[b] < shape[b]) break;
      idx[b] = 0;
    }
  }
  return Polynomial(T, std::move(ts));
}

Polynomial tensor_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open tensor file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return tensor_from_json(ss.str());
}

}  // namespace borderline
