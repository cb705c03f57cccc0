#include "tjbethe/params.hpp"

#include <sstream>

namespace tjb {

namespace {
cplx derive_partner(cplx c, cplx c1, const char* tag) {
  if (std::abs(c1) > 0.0) return (c * c - c) / c1;
  if (std::abs(c) > 1e-14 && std::abs(c - 1.0) > 1e-14) {
    std::ostringstream os;
    os << "constraint " << tag << "^2 = " << tag << "1 " << tag << "2 + " << tag
       << " with " << tag << "1 = 0 requires " << tag << " in {0,1}, got " << c;
    throw Error(Error::Kind::constraint, os.str());
  }
  return 0.0;
}
}  // namespace

ModelParams::ModelParams(cplx eta_, cplx zeta_, cplx c_, cplx c1_, cplx zetap_, cplx cp_,
                         cplx c1p_, cplx mu_, int L_, std::vector<cplx> theta_)
    : eta(eta_), zeta(zeta_), c(c_), c1(c1_), zetap(zetap_), cp(cp_), c1p(c1p_), mu(mu_),
      L(L_), theta(std::move(theta_)) {
  if (std::abs(eta) == 0.0) throw Error(Error::Kind::invalid_argument, "eta must be nonzero");
  if (L < 1) throw Error(Error::Kind::invalid_argument, "L must be positive");
  c2 = derive_partner(c, c1, "c");
  c2p = derive_partner(cp, c1p, "c'");
  if (theta.empty()) theta.assign(L, cplx(0.0));
  if (static_cast<int>(theta.size()) != L)
    throw Error(Error::Kind::invalid_argument, "theta must have L entries");
}

bool ModelParams::homogeneous(double tol) const {
  for (const auto& t : theta)
    if (std::abs(t) > tol) return false;
  return true;
}

std::pair<cplx, cplx> ModelParams::constraint_residuals() const {
  return {c * c - c1 * c2 - c, cp * cp - c1p * c2p - cp};
}

void ModelParams::validate(double tol) const {
  auto [r1, r2] = constraint_residuals();
  if (std::abs(r1) > tol || std::abs(r2) > tol) {
    std::ostringstream os;
    os << "boundary constraint violated: c^2 - c1 c2 - c = " << r1
       << ", c'^2 - c1' c2' - c' = " << r2;
    throw Error(Error::Kind::constraint, os.str());
  }
}

ModelParams ModelParams::table(int L) {
  return ModelParams(0.2, 0.1, 0.1, -0.5, -0.5, -0.3, -0.7, 2.0, L);
}

}  // namespace tjb
