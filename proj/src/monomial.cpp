#include "borderline/monomial.hpp"

#include <algorithm>

#include "borderline/basics.hpp"

namespace borderline {

namespace {

// Extend partial exponent vectors over variables [from, to) by all ways of
// distributing degree d.
void distribute(std::vector<std::vector<int>>& out, std::vector<int>& cur,
                int from, int to, int d) {
  if (from == to - 1) {
    cur[from] = d;
    out.push_back(cur);
    cur[from] = 0;
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[from] = k;
    distribute(out, cur, from + 1, to, d - k);
  }
  cur[from] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& R, const Multidegree& u) {
  if (u.size() != R.grading_rank()) throw input_error("multidegree rank mismatch");
  if (!u.nonnegative()) return {};
  if (!R.is_standard_product())
    throw input_error("monomial_basis requires a product grading");
  // Per-block distributions, then cartesian product.
  std::vector<std::vector<std::vector<int>>> per_block(R.nblocks());
  for (int b = 0; b < R.nblocks(); ++b) {
    std::vector<int> cur(R.block_size(b), 0);
    distribute(per_block[b], cur, 0, R.block_size(b), u[b]);
  }
  std::vector<Monomial> out;
  std::vector<int> idx(R.nblocks(), 0);
  while (true) {
    Monomial m(static_cast<std::size_t>(R.nvars()));
    for (int b = 0; b < R.nblocks(); ++b) {
      const std::vector<int>& part = per_block[b][idx[b]];
      std::copy(part.begin(), part.end(),
                m.e.begin() + R.first_var_of_block(b));
    }
    out.push_back(std::move(m));
    int b = R.nblocks() - 1;
    while (b >= 0) {
      if (++idx[b] < static_cast<int>(per_block[b].size())) break;
      idx[b] = 0;
      --b;
    }
    if (b < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_less(b, a); });
  return out;
}

std::vector<Monomial> monomials_up_to_total_degree(const Ring& R, int cap) {
  std::vector<Monomial> out;
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(R.nvars(), 0);
  for (int d = 0; d <= cap; ++d) {
    raw.clear();
    distribute(raw, cur, 0, R.nvars(), d);
    for (auto& e : raw) out.emplace_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_less(b, a); });
  return out;
}

}  // namespace borderline
