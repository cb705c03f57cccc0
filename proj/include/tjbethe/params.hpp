#pragma once

#include <vector>

#include "tjbethe/types.hpp"

namespace tjb {

/// Model couplings. c2 and c2' are derived from the boundary constraints
/// c^2 = c1 c2 + c and c'^2 = c1' c2' + c'; when c1 (c1') vanishes the
/// constraint forces c in {0,1} and the off-diagonal partner is zero.
struct ModelParams {
  cplx eta;
  cplx zeta, c, c1, c2;
  cplx zetap, cp, c1p, c2p;
  cplx mu;
  int L = 0;
  std::vector<cplx> theta;

  ModelParams() = default;
  ModelParams(cplx eta, cplx zeta, cplx c, cplx c1, cplx zetap, cplx cp, cplx c1p, cplx mu,
              int L, std::vector<cplx> theta = {});

  bool homogeneous(double tol = 0.0) const;
  /// residuals of the two constraints, c^2 - c1 c2 - c and the primed one
  std::pair<cplx, cplx> constraint_residuals() const;
  void validate(double tol = 1e-12) const;

  /// couplings of Tables 1 and 2 (eta=0.2, mu=2, zeta=0.1, c=0.1, c1=-0.5,
  /// zeta'=-0.5, c'=-0.3, c1'=-0.7)
  static ModelParams table(int L);
};

}  // namespace tjb
