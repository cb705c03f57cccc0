#include "tjbethe/kernels.hpp"

#include <random>
#include <sstream>

namespace tjb {

GradedOperator build_R(cplx u, cplx eta) {
  GradedOperator P = graded_permutation(GradedSpace::bff());
  return GradedOperator(P.space, u * Mat::Identity(9, 9) + eta * P.mat);
}

GradedOperator build_r_nested(cplx u, cplx eta) {
  GradedOperator P = graded_permutation(GradedSpace::ff());
  return GradedOperator(P.space, u * Mat::Identity(4, 4) + eta * P.mat);
}

cplx rho1(cplx u, cplx eta) { return -(u - eta) * (u + eta); }
cplx rho2(cplx u, cplx eta) { return -u * (u - eta); }
cplx rho1_bar(cplx u, cplx eta) { return -(u - eta) * (u + eta); }
cplx rho2_bar(cplx u, cplx eta) { return -u * (u - 2.0 * eta); }

Mat build_K_minus(cplx u, const ModelParams& p) {
  p.validate();
  Mat K = Mat::Zero(3, 3);
  K(0, 0) = p.zeta + (2.0 * p.c - 1.0) * u;
  K(1, 1) = p.zeta - u;
  K(1, 2) = 2.0 * p.c1 * u;
  K(2, 1) = 2.0 * p.c2 * u;
  K(2, 2) = p.zeta + u;
  return K;
}

Mat build_K_plus(cplx u, const ModelParams& p) {
  p.validate();
  const cplx v = -u + p.eta / 2.0;
  Mat K = Mat::Zero(3, 3);
  K(0, 0) = p.zetap + (2.0 * p.cp - 1.0) * v;
  K(1, 1) = p.zetap - v;
  K(1, 2) = 2.0 * p.c1p * v;
  K(2, 1) = 2.0 * p.c2p * v;
  K(2, 2) = p.zetap + v;
  return K;
}

Mat build_nested_K_minus(cplx lam, const ModelParams& p) {
  const cplx A = p.eta / 2.0 + p.zeta - p.c * p.eta;
  Mat K(2, 2);
  K << -lam + A, 2.0 * p.c1 * lam, 2.0 * p.c2 * lam, lam + A;
  return K;
}

Mat build_nested_K_plus(cplx lam, const ModelParams& p) {
  Mat K(2, 2);
  K << p.zetap + lam - p.eta, 2.0 * p.c1p * (-lam + p.eta),
       2.0 * p.c2p * (-lam + p.eta), p.zetap - lam + p.eta;
  return K;
}

Mat nested_K_plus_unshifted(cplx u, const ModelParams& p) {
  return build_K_plus(u, p).block(1, 1, 2, 2);
}

Mat nested_K_minus_unshifted(cplx u, const ModelParams& p) {
  const Mat K = build_K_minus(u, p);
  const cplx pre = (2.0 * u + p.eta) / (2.0 * u);
  Mat out(2, 2);
  out << K(1, 1) - p.eta / (2.0 * u + p.eta) * K(0, 0), K(1, 2),
         K(2, 1), K(2, 2) - p.eta / (2.0 * u + p.eta) * K(0, 0);
  return pre * out;
}

GaugePair build_gauges(const ModelParams& p) {
  const double off = std::max(std::max(std::abs(p.c1), std::abs(p.c2)),
                              std::max(std::abs(p.c1p), std::abs(p.c2p)));
  GaugePair g;
  if (off < 1e-14) {
    // diagonal boundaries: the swap matches the printed diagonal ordering,
    // and the gauged K+ is already diagonal
    g.g_minus = Mat(2, 2);
    g.g_minus << 0, 1, 1, 0;
    g.g_plus = Mat::Identity(2, 2);
    g.m = g.n = 0.0;
    return g;
  }
  const cplx s = std::sqrt(1.0 + 4.0 * p.c1 * p.c2);
  auto check_denom = [](cplx d, const char* what) {
    if (std::abs(d) < 1e-12) {
      std::ostringstream os;
      os << "singular gauge: " << what << " = " << d;
      throw Error(Error::Kind::singular, os.str());
    }
  };
  check_denom(1.0 - s, "1 - sqrt(1+4c1c2)");
  check_denom(1.0 + s, "1 + sqrt(1+4c1c2)");
  g.g_minus = Mat(2, 2);
  g.g_minus << -1.0, 2.0 * p.c1 / (1.0 - s), 1.0, -2.0 * p.c1 / (1.0 + s);

  const cplx den = 1.0 + 2.0 * p.c1 * p.c2p + 2.0 * p.c1p * p.c2;
  check_denom(den, "1 + 2c1c2' + 2c1'c2");
  g.m = (-4.0 * p.c1 * p.c2 - (2.0 * p.c1 * p.c2p - 2.0 * p.c1p * p.c2) * s
         + 2.0 * p.c1 * p.c2p + 2.0 * p.c1p * p.c2) / (den * (s + 1.0));
  g.n = (-4.0 * p.c1 * p.c2 - (2.0 * p.c1p * p.c2 - 2.0 * p.c1 * p.c2p) * s
         + 2.0 * p.c1p * p.c2 + 2.0 * p.c1 * p.c2p) / (den * (s - 1.0));
  const cplx smn = std::sqrt(1.0 + g.m * g.n);
  g.g_plus = Mat(2, 2);
  g.g_plus << -g.m, smn - 1.0, -g.m, -smn - 1.0;
  if (std::abs(g.g_plus.determinant()) < 1e-12 || std::abs(g.g_minus.determinant()) < 1e-12)
    throw Error(Error::Kind::singular, "singular gauge matrix");
  return g;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::qybe: return "QYBE";
    case Relation::re: return "RE";
    case Relation::dual_re: return "dualRE";
    case Relation::unitarity: return "unitarity";
    case Relation::crossing: return "crossing";
    case Relation::nested_re: return "nestedRE";
    case Relation::nested_props: return "nested_props";
  }
  return "?";
}

std::vector<cplx> relation_sample_points(int count, cplx eta, std::uint64_t seed) {
  std::vector<cplx> pts{0.0, eta, -eta, eta / 2.0, -eta / 2.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  while (static_cast<int>(pts.size()) < count) pts.emplace_back(unif(rng), unif(rng));
  pts.resize(count);
  return pts;
}

namespace {

struct Residual {
  double max_abs = 0.0;
  double frob = 0.0;
  void account(const Mat& diff) {
    max_abs = std::max(max_abs, diff.cwiseAbs().maxCoeff());
    frob = std::max(frob, diff.norm());
  }
};

const std::vector<int> kParity{0, 1, 1};

// entrywise graded QYBE (2.8); pure scalar identity over 3^6 index choices
void qybe_entrywise(cplx lam, cplx u, cplx eta, Residual& res) {
  const Mat Rlu = build_R(lam - u, eta).mat;
  const Mat Rl = build_R(lam, eta).mat;
  const Mat Ru = build_R(u, eta).mat;
  double worst = 0.0;
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      for (int a3 = 0; a3 < 3; ++a3)
        for (int g1 = 0; g1 < 3; ++g1)
          for (int g2 = 0; g2 < 3; ++g2)
            for (int g3 = 0; g3 < 3; ++g3) {
              cplx lhs = 0.0, rhs = 0.0;
              for (int b1 = 0; b1 < 3; ++b1)
                for (int b2 = 0; b2 < 3; ++b2)
                  for (int b3 = 0; b3 < 3; ++b3) {
                    const double s1 =
                        ((kParity[b1] + kParity[g1]) * kParity[b2]) & 1 ? -1.0 : 1.0;
                    lhs += s1 * Rlu(a1 * 3 + a2, b1 * 3 + b2) * Rl(b1 * 3 + a3, g1 * 3 + b3) *
                           Ru(b2 * 3 + b3, g2 * 3 + g3);
                    const double s2 =
                        ((kParity[a1] + kParity[b1]) * kParity[b2]) & 1 ? -1.0 : 1.0;
                    rhs += s2 * Ru(a2 * 3 + a3, b2 * 3 + b3) * Rl(a1 * 3 + b3, b1 * 3 + g3) *
                           Rlu(b1 * 3 + b2, g1 * 3 + g2);
                  }
              worst = std::max(worst, std::abs(lhs - rhs));
            }
  res.max_abs = std::max(res.max_abs, worst);
  res.frob = std::max(res.frob, worst);
}

}  // namespace

RelationReport check_relation(Relation rel, const ModelParams& p,
                              const std::vector<cplx>& points, double tol) {
  const cplx eta = p.eta;
  const GradedSpace bff = GradedSpace::bff();
  const GradedSpace ff = GradedSpace::ff();
  const ProductSpace two = ProductSpace::power(bff, 2);
  const ProductSpace three = ProductSpace::power(bff, 3);
  const ProductSpace two_f = ProductSpace::power(ff, 2);
  const Mat P = graded_permutation(bff).mat;
  const Mat Pbar2 = [] {
    Mat Pb = Mat::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) Pb(a * 2 + b, b * 2 + a) = 1.0;
    return Pb;
  }();

  auto R21 = [&](cplx u) { return Mat(P * build_R(u, eta).mat * P); };

  Residual res;
  // spectral points are consumed pairwise where a relation needs two
  for (size_t i = 0; i + 1 < points.size(); i += 1) {
    const cplx u1 = points[i];
    const cplx u2 = points[(i + 1) % points.size()];
    switch (rel) {
      case Relation::qybe: {
        GradedOperator R12 = embed(build_R(u1 - u2, eta), {0, 1}, three);
        GradedOperator R13 = embed(build_R(u1, eta), {0, 2}, three);
        GradedOperator R23 = embed(build_R(u2, eta), {1, 2}, three);
        res.account(R12.mat * R13.mat * R23.mat - R23.mat * R13.mat * R12.mat);
        qybe_entrywise(u1, u2, eta, res);
        break;
      }
      case Relation::re: {
        GradedOperator K1{two, Mat::Zero(9, 9)}, K2{two, Mat::Zero(9, 9)};
        K1 = embed(GradedOperator(ProductSpace({bff}), build_K_minus(u1, p)), {0}, two);
        K2 = embed(GradedOperator(ProductSpace({bff}), build_K_minus(u2, p)), {1}, two);
        auto Re = [&](cplx x) { return embed(build_R(x, eta), {0, 1}, two).mat; };
        auto Re21 = [&](cplx x) { return embed(build_R(x, eta), {1, 0}, two).mat; };
        res.account(Re(u1 - u2) * K1.mat * Re21(u1 + u2) * K2.mat -
                    K2.mat * Re(u1 + u2) * K1.mat * Re21(u1 - u2));
        break;
      }
      case Relation::dual_re: {
        GradedOperator K1 = embed(GradedOperator(ProductSpace({bff}), build_K_plus(u1, p)), {0}, two);
        GradedOperator K2 = embed(GradedOperator(ProductSpace({bff}), build_K_plus(u2, p)), {1}, two);
        auto Re = [&](cplx x) { return embed(build_R(x, eta), {0, 1}, two).mat; };
        auto Re21 = [&](cplx x) { return embed(build_R(x, eta), {1, 0}, two).mat; };
        res.account(Re(u2 - u1) * K1.mat * Re21(-u1 - u2 + eta) * K2.mat -
                    K2.mat * Re(-u1 - u2 + eta) * K1.mat * Re21(u2 - u1));
        break;
      }
      case Relation::unitarity: {
        res.account(build_R(u1, eta).mat * R21(-u1) - rho1(u1, eta) * Mat::Identity(9, 9));
        break;
      }
      case Relation::crossing: {
        GradedOperator A = build_R(-u1 + eta, eta);
        GradedOperator B(two, R21(u1));
        const Mat lhs = super_transpose(A, 0, TransposeMode::st).mat *
                        super_transpose(B, 0, TransposeMode::st).mat;
        res.account(lhs - rho2(u1, eta) * Mat::Identity(9, 9));
        break;
      }
      case Relation::nested_re: {
        GradedOperator K1 = embed(GradedOperator(ProductSpace({ff}), build_nested_K_minus(u1, p)),
                                  {0}, two_f);
        GradedOperator K2 = embed(GradedOperator(ProductSpace({ff}), build_nested_K_minus(u2, p)),
                                  {1}, two_f);
        auto re = [&](cplx x) { return embed(build_r_nested(x, eta), {0, 1}, two_f).mat; };
        auto re21 = [&](cplx x) { return embed(build_r_nested(x, eta), {1, 0}, two_f).mat; };
        res.account(re(u1 - u2) * K1.mat * re21(u1 + u2) * K2.mat -
                    K2.mat * re(u1 + u2) * K1.mat * re21(u1 - u2));
        break;
      }
      case Relation::nested_props: {
        const Mat r = build_r_nested(u1, eta).mat;
        const Mat r21 = Pbar2 * r * Pbar2;
        res.account(build_r_nested(0.0, eta).mat + eta * Pbar2);                       // (4.6)
        res.account(r * (Pbar2 * build_r_nested(-u1, eta).mat * Pbar2) -
                    rho1_bar(u1, eta) * Mat::Identity(4, 4));                          // (4.7)
        GradedOperator rg(two_f, r);
        GradedOperator r21g(two_f, Pbar2 * build_r_nested(-u1 + 2.0 * eta, eta).mat * Pbar2);
        res.account(super_transpose(rg, 0, TransposeMode::st).mat *
                        super_transpose(r21g, 0, TransposeMode::st).mat -
                    rho2_bar(u1, eta) * Mat::Identity(4, 4));                          // (4.8)
        res.account(r21 - r.transpose());                                              // (4.9)
        break;
      }
    }
  }
  RelationReport rep;
  rep.relation = relation_name(rel);
  rep.tol = tol;
  rep.max_residual = res.max_abs;
  rep.frobenius = res.frob;
  rep.points = static_cast<int>(points.size());
  rep.pass = res.max_abs <= tol;
  return rep;
}

std::vector<RelationReport> check_all_relations(const ModelParams& p, double tol, int points,
                                                std::uint64_t seed) {
  std::vector<RelationReport> out;
  const auto pts = relation_sample_points(points, p.eta, seed);
  for (Relation r : {Relation::qybe, Relation::re, Relation::dual_re, Relation::unitarity,
                     Relation::crossing, Relation::nested_re, Relation::nested_props})
    out.push_back(check_relation(r, p, pts, tol));
  return out;
}

std::string RelationReport::to_json() const {
  std::ostringstream os;
  os.precision(15);
  os << "{\"relation\":\"" << relation << "\",\"tol\":" << tol
     << ",\"max_residual\":" << max_residual << ",\"frobenius\":" << frobenius
     << ",\"points\":" << points << ",\"pass\":" << (pass ? "true" : "false") << "}";
  return os.str();
}

}  // namespace tjb
