#pragma once

#include <memory>
#include <string>
#include <vector>

#include "borderline/multidegree.hpp"

namespace borderline {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring over Q graded by Z^s.  The supported geometry is a
// product of projective spaces P^{n_1} x ... x P^{n_s}: block i contributes
// n_i + 1 variables of degree e_i.  An arbitrary grading matrix can be
// stored, but it is flagged as unvalidated and the operations that rely on
// the product structure refuse to run on it.
class Ring {
 public:
  enum class Side { apolar, forms };  // apolar: y/a/b/c side; forms: x side

  // blocks[i] = number of variables in block i (= n_i + 1).
  static RingPtr product(std::vector<int> blocks, Side side);
  // Descriptors: "P2", "P1xP1xP1", "blocks=[3,3,3]".
  static RingPtr from_descriptor(const std::string& descriptor, Side side);
  // Arbitrary grading (experimental; flagged unvalidated).
  static RingPtr general(std::vector<Multidegree> var_degrees,
                         std::vector<std::string> names);

  int nvars() const { return static_cast<int>(names_.size()); }
  int nblocks() const { return static_cast<int>(blocks_.size()); }
  int block_size(int b) const { return blocks_[b]; }
  const std::vector<int>& blocks() const { return blocks_; }
  int block_of_var(int v) const { return block_of_var_[v]; }
  int first_var_of_block(int b) const { return block_start_[b]; }
  const Multidegree& var_degree(int v) const { return var_degree_[v]; }
  const std::string& var_name(int v) const { return names_[v]; }
  int var_index(const std::string& name) const;  // -1 if absent
  Side side() const { return side_; }
  bool is_standard_product() const { return standard_product_; }
  const std::string& descriptor() const { return descriptor_; }

  // The ring on the other side of the apolarity pairing (same grading,
  // partner variable names).
  RingPtr dual() const;

  // dim_Q of the graded piece of multidegree u (product of binomials for
  // product rings; 0 for u with a negative entry).
  long graded_piece_dimension(const Multidegree& u) const;

  std::size_t grading_rank() const { return var_degree_.empty() ? blocks_.size() : var_degree_[0].size(); }

 private:
  std::vector<int> blocks_;
  std::vector<int> block_start_;
  std::vector<int> block_of_var_;
  std::vector<Multidegree> var_degree_;
  std::vector<std::string> names_;
  Side side_ = Side::apolar;
  bool standard_product_ = true;
  std::string descriptor_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace borderline
