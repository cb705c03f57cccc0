#include "tjbethe/poly.hpp"

#include <cmath>

namespace tjb {

OperatorPoly::OperatorPoly(ProductSpace space, std::vector<Mat> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Error::Kind::invalid_argument, "empty polynomial");
}

Mat OperatorPoly::eval(cplx u) const {
  Mat out = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) out = u * out + coeffs_[k];
  return out;
}

OperatorPoly OperatorPoly::derivative() const {
  if (degree() == 0) {
    std::vector<Mat> z{Mat::Zero(coeffs_[0].rows(), coeffs_[0].cols())};
    return OperatorPoly(space_, std::move(z));
  }
  std::vector<Mat> d;
  d.reserve(degree());
  for (int k = 1; k <= degree(); ++k) d.push_back(static_cast<double>(k) * coeffs_[k]);
  return OperatorPoly(space_, std::move(d));
}

OperatorPoly poly_interpolate(const std::vector<std::pair<cplx, Mat>>& samples, int degree,
                              const ProductSpace& space) {
  const int need = degree + 1;
  if (static_cast<int>(samples.size()) < need)
    throw Error(Error::Kind::invalid_argument, "poly_interpolate: need degree+1 samples");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (std::abs(samples[i].first - samples[j].first) < 1e-14)
        throw Error(Error::Kind::invalid_argument, "poly_interpolate: repeated sample points");

  const long rows = samples[0].second.rows(), cols = samples[0].second.cols();

  // Newton divided differences on the first degree+1 samples
  std::vector<cplx> x(need);
  std::vector<Mat> dd(need);
  for (int i = 0; i < need; ++i) {
    x[i] = samples[i].first;
    dd[i] = samples[i].second;
  }
  for (int level = 1; level < need; ++level)
    for (int i = need - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

  // expand Newton form to monomial coefficients
  std::vector<Mat> coef(need, Mat::Zero(rows, cols));
  std::vector<cplx> basis{1.0};  // coefficients of prod_{m<i}(u - x_m)
  for (int i = 0; i < need; ++i) {
    for (size_t k = 0; k < basis.size(); ++k) coef[k] += basis[k] * dd[i];
    if (i + 1 < need) {
      basis.push_back(0.0);
      for (int k = static_cast<int>(basis.size()) - 1; k >= 1; --k)
        basis[k] = basis[k - 1] - x[i] * basis[k];
      basis[0] = -x[i] * basis[0];
    }
  }
  OperatorPoly poly(space, std::move(coef));

  // held-out samples must agree with the claimed degree
  for (size_t i = need; i < samples.size(); ++i) {
    const Mat diff = poly.eval(samples[i].first) - samples[i].second;
    const double scale = std::max(1.0, samples[i].second.cwiseAbs().maxCoeff());
    if (diff.cwiseAbs().maxCoeff() / scale > 1e-8)
      throw Error(Error::Kind::invalid_argument,
                  "poly_interpolate: degree check failed at held-out point");
  }
  return poly;
}

std::vector<cplx> chebyshev_nodes(int count, double scale) {
  std::vector<cplx> x(count);
  for (int k = 0; k < count; ++k)
    x[k] = scale * std::cos(M_PI * (k + 0.5) / count);
  return x;
}

}  // namespace tjb
