#pragma once

#include <utility>
#include <vector>

#include "tjbethe/graded.hpp"

namespace tjb {

// Operator whose entries are polynomials in the spectral parameter, stored as
// monomial coefficient matrices. Built by interpolation at known degree; the
// transfer objects are products of affine factors, so degrees are exact.

class OperatorPoly {
 public:
  OperatorPoly() = default;
  OperatorPoly(ProductSpace space, std::vector<Mat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Mat& coeff(int k) const { return coeffs_[k]; }
  const ProductSpace& space() const { return space_; }

  Mat eval(cplx u) const;
  OperatorPoly derivative() const;

 private:
  ProductSpace space_;
  std::vector<Mat> coeffs_;
};

/// Entrywise polynomial interpolation through (point, operator) samples.
/// Needs at least degree+1 distinct points; extra samples are checked for
/// consistency with the claimed degree.
OperatorPoly poly_interpolate(const std::vector<std::pair<cplx, Mat>>& samples, int degree,
                              const ProductSpace& space);

/// Chebyshev points of the first kind on [-1, 1], scaled by `scale`.
std::vector<cplx> chebyshev_nodes(int count, double scale = 1.0);

}  // namespace tjb
