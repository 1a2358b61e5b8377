#include "borderline/order.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "borderline/basics.hpp"

namespace borderline {

void MonomialOrder::finish() {
  var_to_rank_.assign(rank_to_var_.size(), -1);
  for (std::size_t r = 0; r < rank_to_var_.size(); ++r) {
    int v = rank_to_var_[r];
    if (v < 0 || v >= static_cast<int>(rank_to_var_.size()) || var_to_rank_[v] != -1)
      throw input_error("order ranking is not a permutation");
    var_to_rank_[v] = static_cast<int>(r);
  }
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> rank_to_var) {
  MonomialOrder o;
  o.base_ = Base::grevlex;
  o.rank_to_var_ = std::move(rank_to_var);
  o.finish();
  return o;
}

MonomialOrder MonomialOrder::lex(std::vector<int> rank_to_var) {
  MonomialOrder o;
  o.base_ = Base::lex;
  o.rank_to_var_ = std::move(rank_to_var);
  o.finish();
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights, MonomialOrder tie) {
  if (weights.size() != tie.rank_to_var_.size())
    throw input_error("weight vector length mismatch");
  tie.weights_ = std::move(weights);
  return tie;
}

MonomialOrder MonomialOrder::canonical(const Ring& R) {
  std::vector<int> ranks(R.nvars());
  std::iota(ranks.begin(), ranks.end(), 0);
  return grevlex(std::move(ranks));
}

MonomialOrder MonomialOrder::grevlex_with_smallest(const Ring& R, int var) {
  std::vector<int> ranks;
  for (int v = 0; v < R.nvars(); ++v)
    if (v != var) ranks.push_back(v);
  ranks.push_back(var);
  return grevlex(std::move(ranks));
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (!weights_.empty()) {
    long wa = 0, wb = 0;
    for (std::size_t v = 0; v < weights_.size(); ++v) {
      wa += weights_[v] * a.e[v];
      wb += weights_[v] * b.e[v];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (base_ == Base::grevlex) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // a > b iff, scanning from the smallest variable upward, the first
    // difference has a smaller exponent in a.
    for (std::size_t r = rank_to_var_.size(); r > 0;) {
      --r;
      int v = rank_to_var_[r];
      int d = a.e[v] - b.e[v];
      if (d) return d > 0 ? -1 : 1;
    }
    return 0;
  }
  for (int v : rank_to_var_) {
    int d = a.e[v] - b.e[v];
    if (d) return d > 0 ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::from_descriptor(const Ring& R, const std::string& d0) {
  std::string d = d0;
  d.erase(std::remove_if(d.begin(), d.end(), ::isspace), d.end());
  auto colon = d.find(':');
  if (colon == std::string::npos) {
    if (d == "grevlex") return canonical(R);
    throw input_error("bad order descriptor: " + d0);
  }
  std::string kind = d.substr(0, colon);
  std::string body = d.substr(colon + 1);
  if (kind == "weight") {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw input_error("bad weight descriptor: " + d0);
    std::vector<long> w;
    std::istringstream is(body.substr(1, body.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stol(tok));
    if (static_cast<int>(w.size()) != R.nvars())
      throw input_error("weight descriptor needs one weight per variable");
    return weighted(std::move(w), canonical(R));
  }
  if (kind != "grevlex" && kind != "lex")
    throw input_error("unknown order kind: " + kind);
  // Variables listed ascending: y0<y1<y2 says y2 is largest.  A "<...<"
  // segment fills in the canonical in-between variables.
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t lt = body.find('<', start);
    std::string piece = body.substr(start, lt == std::string::npos ? lt : lt - start);
    names.push_back(piece);
    if (lt == std::string::npos) break;
    start = lt + 1;
  }
  // Expand "..." between two named variables along the ring's natural
  // reversed order (the spec form "lex:c3<c2<...<a1").
  std::vector<int> ascending;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "...") {
      if (i == 0 || i + 1 >= names.size())
        throw input_error("'...' needs variables on both sides");
      int prev = R.var_index(names[i - 1]);
      int next = R.var_index(names[i + 1]);
      if (prev < 0 || next < 0) throw input_error("unknown variable in order");
      int step = next > prev ? 1 : -1;
      for (int v = prev + step; v != next; v += step) ascending.push_back(v);
      continue;
    }
    int v = R.var_index(names[i]);
    if (v < 0) throw input_error("unknown variable in order: " + names[i]);
    ascending.push_back(v);
  }
  if (static_cast<int>(ascending.size()) != R.nvars())
    throw input_error("order descriptor must list every variable");
  std::vector<int> rank_to_var(ascending.rbegin(), ascending.rend());
  return kind == "lex" ? lex(std::move(rank_to_var)) : grevlex(std::move(rank_to_var));
}

std::string MonomialOrder::descriptor(const Ring& R) const {
  std::ostringstream os;
  if (!weights_.empty()) {
    os << "weight:[";
    for (std::size_t i = 0; i < weights_.size(); ++i)
      os << (i ? "," : "") << weights_[i];
    os << "]";
    return os.str();
  }
  os << (base_ == Base::grevlex ? "grevlex:" : "lex:");
  for (std::size_t r = rank_to_var_.size(); r > 0;) {
    --r;
    os << R.var_name(rank_to_var_[r]);
    if (r) os << "<";
  }
  return os.str();
}

}  // namespace borderline
