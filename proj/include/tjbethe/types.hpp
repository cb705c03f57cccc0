#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tjb {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

constexpr cplx I{0.0, 1.0};

/// Error with a stable category tag, surfaced through the C API as a status code.
class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_argument, constraint, singular, convergence, io };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace tjb
