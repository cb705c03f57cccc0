#pragma once

#include <vector>

#include "tjbethe/types.hpp"

namespace tjb {

// Z2-graded linear algebra. Conventions used everywhere:
//  - basis of a tensor product is lexicographic, leftmost factor most significant;
//    the auxiliary space of a monodromy matrix is always the leftmost factor.
//  - signs are materialized into matrix entries at construction time, so all
//    downstream arithmetic is ordinary complex matrix arithmetic.

/// One graded factor: dimension plus Grassmann parity per basis index.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<int> parity);

  int dim() const { return static_cast<int>(parity_.size()); }
  int parity(int i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }

  bool operator==(const GradedSpace& o) const { return parity_ == o.parity_; }

  /// 3-dim space with parities (0,1,1): boson, fermion, fermion.
  static GradedSpace bff();
  /// 2-dim all-fermionic space, parities (1,1).
  static GradedSpace ff();
  /// dim-d purely bosonic space.
  static GradedSpace bosonic(int d);

 private:
  std::vector<int> parity_;
};

/// Tensor product of graded factors; precomputes index strides and parities.
class ProductSpace {
 public:
  ProductSpace() = default;
  explicit ProductSpace(std::vector<GradedSpace> factors);
  static ProductSpace power(const GradedSpace& s, int n);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const GradedSpace& factor(int k) const { return factors_[k]; }
  long dim() const { return dim_; }

  /// index of factor k inside the composite index s
  int sub_index(long s, int k) const { return static_cast<int>((s / stride_[k]) % factors_[k].dim()); }
  /// total parity (mod 2) of composite index s
  int parity(long s) const;
  /// total parity of factors k in [from, to)
  int parity_range(long s, int from, int to) const;
  long stride(int k) const { return stride_[k]; }

  bool operator==(const ProductSpace& o) const;

 private:
  std::vector<GradedSpace> factors_;
  std::vector<long> stride_;
  long dim_ = 1;
};

/// Dense complex operator together with the graded space it acts on.
struct GradedOperator {
  ProductSpace space;
  Mat mat;

  GradedOperator() = default;
  GradedOperator(ProductSpace s, Mat m);

  long dim() const { return space.dim(); }
  static GradedOperator identity(const ProductSpace& s);
};

enum class TransposeMode { st, ist };

/// Graded permutation, Eq. P^{a1 a2}_{b1 b2} = (-1)^{p(a1)p(a2)} d_{a1 b2} d_{b1 a2}.
GradedOperator graded_permutation(const GradedSpace& s);

/// (A (x) B)^{ag}_{bd} = (-1)^{[p(a)+p(b)] p(g)} A^a_b B^g_d.
GradedOperator super_tensor(const GradedOperator& a, const GradedOperator& b);

/// Super transposition in one factor; st: sign (-1)^{p(i)[p(i)+p(j)]} with i the
/// result row index of that factor, ist its inverse.
GradedOperator super_transpose(const GradedOperator& a, int factor, TransposeMode mode);
inline GradedOperator super_transpose(const GradedOperator& a, TransposeMode mode) {
  return super_transpose(a, 0, mode);
}

/// Partial supertrace over one factor: str_f X = sum_a (-1)^{p(a)} X^{..a..}_{..a..}.
GradedOperator super_trace(const GradedOperator& a, int factor);

/// Plain partial trace (no sign), used by the ungraded nested problem.
GradedOperator partial_trace(const GradedOperator& a, int factor);

/// Embed a 1- or 2-factor operator into `chain` at the given factor positions.
/// Two-factor embeddings require an even operator; an unordered position pair
/// (i > j) acts with the operator's first factor on i (realized by conjugating
/// with the graded permutation, as in R_{21} = P R_{12} P).
GradedOperator embed(const GradedOperator& op, const std::vector<int>& positions,
                     const ProductSpace& chain);

/// Chain of L sites with one auxiliary factor on the left, all factors `local`.
ProductSpace aux_chain(const GradedSpace& local, int L);

bool is_even(const GradedOperator& a, double tol = 0.0);

}  // namespace tjb
