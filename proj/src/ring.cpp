#include "borderline/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "borderline/basics.hpp"

namespace borderline {

namespace {

std::vector<std::string> standard_names(const std::vector<int>& blocks,
                                        Ring::Side side) {
  std::vector<std::string> names;
  if (blocks.size() == 1) {
    // Single block: y0..yn on the apolar side, x0..xn on the form side.
    const char* letter = side == Ring::Side::apolar ? "y" : "x";
    for (int i = 0; i < blocks[0]; ++i)
      names.push_back(letter + std::to_string(i));
  } else {
    // Multi-block: one letter per block, 1-based indices (a1..,b1..,c1..).
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b >= 26) throw input_error("too many blocks for letter naming");
      char letter = static_cast<char>('a' + b);
      for (int i = 1; i <= blocks[b]; ++i)
        names.push_back(std::string(1, letter) + std::to_string(i));
    }
  }
  return names;
}

}  // namespace

RingPtr Ring::product(std::vector<int> blocks, Side side) {
  if (blocks.empty()) throw input_error("ring needs at least one block");
  for (int b : blocks)
    if (b < 1) throw input_error("every block needs at least one variable");
  auto r = std::make_shared<Ring>();
  Ring& ring = const_cast<Ring&>(*r);
  ring.blocks_ = blocks;
  ring.side_ = side;
  ring.standard_product_ = true;
  int start = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    ring.block_start_.push_back(start);
    for (int i = 0; i < blocks[b]; ++i) {
      ring.block_of_var_.push_back(static_cast<int>(b));
      ring.var_degree_.push_back(Multidegree::unit(blocks.size(), b));
    }
    start += blocks[b];
  }
  ring.names_ = standard_names(blocks, side);
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    os << (b ? "x" : "") << 'P' << blocks[b] - 1;
  ring.descriptor_ = os.str();
  return r;
}

RingPtr Ring::from_descriptor(const std::string& descriptor, Side side) {
  std::string d = descriptor;
  d.erase(std::remove_if(d.begin(), d.end(), ::isspace), d.end());
  if (d.empty()) throw input_error("empty ring descriptor");
  if (d.rfind("blocks=[", 0) == 0) {
    if (d.back() != ']') throw input_error("bad ring descriptor: " + descriptor);
    std::string body = d.substr(8, d.size() - 9);
    std::vector<int> blocks;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw input_error("bad ring descriptor: " + descriptor);
      blocks.push_back(std::stoi(tok));
    }
    if (blocks.empty()) throw input_error("bad ring descriptor: " + descriptor);
    return product(blocks, side);
  }
  // "P2", "P1xP1", "P2xP2xP2"
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (pos < d.size()) {
    if (d[pos] != 'P') throw input_error("bad ring descriptor: " + descriptor);
    ++pos;
    std::size_t start = pos;
    while (pos < d.size() && ::isdigit(d[pos])) ++pos;
    if (start == pos) throw input_error("bad ring descriptor: " + descriptor);
    blocks.push_back(std::stoi(d.substr(start, pos - start)) + 1);
    if (pos < d.size()) {
      if (d[pos] != 'x') throw input_error("bad ring descriptor: " + descriptor);
      ++pos;
      if (pos == d.size()) throw input_error("bad ring descriptor: " + descriptor);
    }
  }
  return product(blocks, side);
}

RingPtr Ring::general(std::vector<Multidegree> var_degrees,
                      std::vector<std::string> names) {
  if (var_degrees.empty() || var_degrees.size() != names.size())
    throw input_error("general ring needs matching degrees and names");
  auto r = std::make_shared<Ring>();
  Ring& ring = const_cast<Ring&>(*r);
  ring.blocks_ = {static_cast<int>(var_degrees.size())};
  ring.block_start_ = {0};
  ring.block_of_var_.assign(var_degrees.size(), 0);
  ring.var_degree_ = std::move(var_degrees);
  ring.names_ = std::move(names);
  ring.standard_product_ = false;
  ring.descriptor_ = "general (unvalidated grading)";
  return r;
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

RingPtr Ring::dual() const {
  if (!standard_product_)
    throw input_error("dual ring is only defined for product rings");
  return product(blocks_, side_ == Side::apolar ? Side::forms : Side::apolar);
}

namespace {
long binomial_long(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

long Ring::graded_piece_dimension(const Multidegree& u) const {
  if (u.size() != grading_rank())
    throw input_error("multidegree rank mismatch");
  if (!u.nonnegative()) return 0;
  if (standard_product_) {
    long dim = 1;
    for (int b = 0; b < nblocks(); ++b)
      dim *= binomial_long(blocks_[b] - 1 + u[b], blocks_[b] - 1);
    return dim;
  }
  // Unvalidated grading: count exponent vectors directly (small use only).
  long count = 0;
  std::vector<int> e(nvars(), 0);
  // Depth-first enumeration over variables with degree budget u.
  std::function<void(int, Multidegree)> rec = [&](int v, Multidegree rest) {
    if (!rest.nonnegative()) return;
    if (v == nvars()) {
      if (rest.total() == 0) ++count;
      return;
    }
    Multidegree r = rest;
    while (true) {
      rec(v + 1, r);
      r = r - var_degree_[v];
      if (!r.nonnegative()) break;
    }
  };
  rec(0, u);
  return count;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->blocks() == b->blocks() && a->side() == b->side() &&
         a->is_standard_product() && b->is_standard_product();
}

}  // namespace borderline
