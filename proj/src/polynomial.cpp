#include "borderline/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace borderline {

Polynomial::Polynomial(RingPtr R, std::vector<Term> terms)
    : R_(std::move(R)), t_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
    return canonical_less(b.m, a.m);
  });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& term : t_) {
    if (!out.empty() && out.back().m == term.m)
      out.back().c += term.c;
    else
      out.push_back(std::move(term));
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  // A cancellation can expose an earlier duplicate only if input had several
  // equal monomials in a row; the single pass above already merged those.
  t_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr R, const Q& c) {
  Polynomial p(R);
  if (c != 0) p.t_.push_back({Monomial(static_cast<std::size_t>(R->nvars())), c});
  return p;
}

Polynomial Polynomial::monomial(RingPtr R, Monomial m, Q c) {
  Polynomial p(R);
  if (c != 0) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr R, int v) {
  Monomial m(static_cast<std::size_t>(R->nvars()));
  m.e[v] = 1;
  return monomial(std::move(R), std::move(m));
}

const Term& Polynomial::leading_term() const {
  if (t_.empty()) throw input_error("leading term of zero polynomial");
  return t_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& term : t_) d = std::max(d, term.m.total_degree());
  return d;
}

std::optional<Multidegree> Polynomial::multidegree() const {
  if (t_.empty()) return std::nullopt;
  Multidegree d = t_.front().m.degree(*R_);
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (t_[i].m.degree(*R_) != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(R_);
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      Q c = t_[i].c + o.t_[j].c;
      if (c != 0) r.t_.push_back({t_[i].m, std::move(c)});
      ++i, ++j;
    } else if (canonical_less(o.t_[j].m, t_[i].m)) {
      r.t_.push_back(t_[i]);
      ++i;
    } else {
      r.t_.push_back(o.t_[j]);
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& term : r.t_) term.c = -term.c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Q& c) const {
  Polynomial r(R_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const Term& term : t_) r.t_.push_back({term.m * m, term.c * c});
  return r;  // multiplying by a fixed monomial preserves the order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(R_);
  for (const Term& term : o.t_) r = r + times_term(term.m, term.c);
  return r;
}

Polynomial Polynomial::operator*(const Q& c) const {
  Polynomial r(R_);
  if (c == 0) return r;
  r.t_ = t_;
  for (Term& term : r.t_) term.c *= c;
  return r;
}

Polynomial operator*(const Q& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

Q Polynomial::coeff(const Monomial& m) const {
  for (const Term& term : t_)
    if (term.m == m) return term.c;
  return Q(0);
}

Polynomial Polynomial::monic() const {
  if (t_.empty()) throw input_error("cannot normalize zero polynomial");
  return *this * (Q(1) / t_.front().c);
}

Polynomial Polynomial::divide_by_term(const Monomial& m, const Q& c) const {
  if (c == 0) throw input_error("division by zero term");
  Polynomial r(R_);
  r.t_.reserve(t_.size());
  for (const Term& term : t_) {
    if (!m.divides(term.m))
      throw input_error("term division is not exact");
    r.t_.push_back({term.m / m, term.c / c});
  }
  return r;
}

Polynomial Polynomial::substitute(const RingPtr& S2,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != R_->nvars())
    throw input_error("substitute: one image per variable required");
  Polynomial out = Polynomial::zero(S2);
  for (const Term& term : t_) {
    Polynomial prod = Polynomial::constant(S2, term.c);
    for (std::size_t v = 0; v < term.m.e.size(); ++v)
      for (int k = 0; k < term.m.e[v]; ++k) prod = prod * images[v];
    out = out + prod;
  }
  return out;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::vector<int>, Polynomial> parts;
  for (const Term& term : t_) {
    Multidegree d = term.m.degree(*R_);
    auto it = parts.find(d.v);
    if (it == parts.end())
      it = parts.emplace(d.v, Polynomial(R_)).first;
    it->second = it->second + Polynomial::monomial(R_, term.m, term.c);
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& [deg, p] : parts) out.push_back(std::move(p));
  return out;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& g,
                                           const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  Polynomial r = g;
  Polynomial q = Polynomial::zero(g.ring());
  const Term& fl = f.leading_term();
  while (!r.is_zero()) {
    const Term& rl = r.leading_term();
    if (!fl.m.divides(rl.m)) return std::nullopt;
    Polynomial t = Polynomial::monomial(g.ring(), rl.m / fl.m, rl.c / fl.c);
    q = q + t;
    r = r - t * f;
  }
  return q;
}

std::string monomial_str(const Ring& R, const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < m.e.size(); ++v) {
    if (!m.e[v]) continue;
    if (!first) os << "*";
    os << R.var_name(static_cast<int>(v));
    if (m.e[v] > 1) os << "^" << m.e[v];
    first = false;
  }
  return os.str();
}

std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& term : t_) {
    Q c = term.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && !term.m.is_one();
    if (!unit) os << to_string(c);
    if (!term.m.is_one()) {
      if (!unit) os << "*";
      os << monomial_str(*R_, term.m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace borderline
