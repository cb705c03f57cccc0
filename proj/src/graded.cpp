#include "tjbethe/graded.hpp"

#include <algorithm>

namespace tjb {

GradedSpace::GradedSpace(std::vector<int> parity) : parity_(std::move(parity)) {
  for (int p : parity_)
    if (p != 0 && p != 1) throw Error(Error::Kind::invalid_argument, "parity must be 0 or 1");
}

GradedSpace GradedSpace::bff() { return GradedSpace({0, 1, 1}); }
GradedSpace GradedSpace::ff() { return GradedSpace({1, 1}); }
GradedSpace GradedSpace::bosonic(int d) { return GradedSpace(std::vector<int>(d, 0)); }

ProductSpace::ProductSpace(std::vector<GradedSpace> factors) : factors_(std::move(factors)) {
  stride_.assign(factors_.size(), 1);
  for (int k = static_cast<int>(factors_.size()) - 2; k >= 0; --k)
    stride_[k] = stride_[k + 1] * factors_[k + 1].dim();
  dim_ = 1;
  for (const auto& f : factors_) dim_ *= f.dim();
}

ProductSpace ProductSpace::power(const GradedSpace& s, int n) {
  return ProductSpace(std::vector<GradedSpace>(n, s));
}

int ProductSpace::parity(long s) const { return parity_range(s, 0, factor_count()); }

int ProductSpace::parity_range(long s, int from, int to) const {
  int p = 0;
  for (int k = from; k < to; ++k) p += factors_[k].parity(sub_index(s, k));
  return p & 1;
}

bool ProductSpace::operator==(const ProductSpace& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t k = 0; k < factors_.size(); ++k)
    if (!(factors_[k] == o.factors_[k])) return false;
  return true;
}

GradedOperator::GradedOperator(ProductSpace s, Mat m) : space(std::move(s)), mat(std::move(m)) {
  if (mat.rows() != space.dim() || mat.cols() != space.dim())
    throw Error(Error::Kind::invalid_argument, "operator shape does not match its space");
}

GradedOperator GradedOperator::identity(const ProductSpace& s) {
  return GradedOperator(s, Mat::Identity(s.dim(), s.dim()));
}

GradedOperator graded_permutation(const GradedSpace& s) {
  const int d = s.dim();
  Mat P = Mat::Zero(d * d, d * d);
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2)
      P(a1 * d + a2, a2 * d + a1) = (s.parity(a1) * s.parity(a2)) & 1 ? -1.0 : 1.0;
  return GradedOperator(ProductSpace::power(s, 2), std::move(P));
}

GradedOperator super_tensor(const GradedOperator& a, const GradedOperator& b) {
  const long da = a.dim(), db = b.dim();
  std::vector<GradedSpace> factors;
  for (int k = 0; k < a.space.factor_count(); ++k) factors.push_back(a.space.factor(k));
  for (int k = 0; k < b.space.factor_count(); ++k) factors.push_back(b.space.factor(k));
  ProductSpace sp(std::move(factors));
  Mat out = Mat::Zero(da * db, da * db);
  for (long ar = 0; ar < da; ++ar)
    for (long ac = 0; ac < da; ++ac) {
      const cplx va = a.mat(ar, ac);
      if (va == cplx(0)) continue;
      const int pa = (a.space.parity(ar) + a.space.parity(ac)) & 1;
      for (long br = 0; br < db; ++br) {
        const double sgn = (pa && b.space.parity(br)) ? -1.0 : 1.0;
        for (long bc = 0; bc < db; ++bc) {
          const cplx vb = b.mat(br, bc);
          if (vb == cplx(0)) continue;
          out(ar * db + br, ac * db + bc) = sgn * va * vb;
        }
      }
    }
  return GradedOperator(std::move(sp), std::move(out));
}

GradedOperator super_transpose(const GradedOperator& a, int factor, TransposeMode mode) {
  const int nf = a.space.factor_count();
  if (factor < 0 || factor >= nf)
    throw Error(Error::Kind::invalid_argument, "super_transpose: factor index out of range");
  const auto& f = a.space.factor(factor);
  const long D = a.dim(), str = a.space.stride(factor);
  Mat out = Mat::Zero(D, D);
  for (long r = 0; r < D; ++r) {
    const int i = a.space.sub_index(r, factor);
    for (long c = 0; c < D; ++c) {
      const int j = a.space.sub_index(c, factor);
      // swap the factor's row/col indices
      const long r2 = r + static_cast<long>(j - i) * str;
      const long c2 = c + static_cast<long>(i - j) * str;
      const int pi = f.parity(i), pj = f.parity(j);
      const int expo = (mode == TransposeMode::st) ? pi * (pi + pj) : pj * (pi + pj);
      out(r, c) = ((expo & 1) ? -1.0 : 1.0) * a.mat(r2, c2);
    }
  }
  return GradedOperator(a.space, std::move(out));
}

namespace {

GradedOperator traced(const GradedOperator& a, int factor, bool graded_sign) {
  const int nf = a.space.factor_count();
  if (factor < 0 || factor >= nf)
    throw Error(Error::Kind::invalid_argument, "trace: factor index out of range");
  std::vector<GradedSpace> rest;
  for (int k = 0; k < nf; ++k)
    if (k != factor) rest.push_back(a.space.factor(k));
  ProductSpace sp(std::move(rest));
  const long D = sp.dim() > 0 ? sp.dim() : 1;
  const auto& f = a.space.factor(factor);
  const long str = a.space.stride(factor);
  Mat out = Mat::Zero(D, D);
  // enumerate composite indices of the full space whose `factor` index is fixed
  const long Dfull = a.dim();
  for (long r = 0; r < Dfull; ++r) {
    const int ia = a.space.sub_index(r, factor);
    // reduced row index: remove factor's contribution
    const long hi = r / (str * f.dim());
    const long lo = r % str;
    const long rr = hi * str + lo;
    for (long c = 0; c < Dfull; ++c) {
      if (a.space.sub_index(c, factor) != ia) continue;
      const long chi = c / (str * f.dim());
      const long clo = c % str;
      const long cc = chi * str + clo;
      const double sgn = (graded_sign && f.parity(ia)) ? -1.0 : 1.0;
      out(rr, cc) += sgn * a.mat(r, c);
    }
  }
  return GradedOperator(std::move(sp), std::move(out));
}

}  // namespace

GradedOperator super_trace(const GradedOperator& a, int factor) { return traced(a, factor, true); }
GradedOperator partial_trace(const GradedOperator& a, int factor) { return traced(a, factor, false); }

bool is_even(const GradedOperator& a, double tol) {
  const long D = a.dim();
  for (long r = 0; r < D; ++r)
    for (long c = 0; c < D; ++c)
      if ((a.space.parity(r) + a.space.parity(c)) & 1)
        if (std::abs(a.mat(r, c)) > tol) return false;
  return true;
}

GradedOperator embed(const GradedOperator& op, const std::vector<int>& positions,
                     const ProductSpace& chain) {
  const int nf = chain.factor_count();
  const int k = static_cast<int>(positions.size());
  if (op.space.factor_count() != k)
    throw Error(Error::Kind::invalid_argument, "embed: position count != operator factor count");
  std::vector<int> seen;
  for (int q : positions) {
    if (q < 0 || q >= nf) throw Error(Error::Kind::invalid_argument, "embed: position out of range");
    if (std::find(seen.begin(), seen.end(), q) != seen.end())
      throw Error(Error::Kind::invalid_argument, "embed: duplicate position");
    seen.push_back(q);
    // factor spaces must match
  }
  for (int m = 0; m < k; ++m)
    if (!(chain.factor(positions[m]) == op.space.factor(m)))
      throw Error(Error::Kind::invalid_argument, "embed: factor space mismatch at position");

  const long D = chain.dim();
  Mat out = Mat::Zero(D, D);

  if (k == 1) {
    const int q = positions[0];
    const auto& f = chain.factor(q);
    const long str = chain.stride(q);
    for (long r = 0; r < D; ++r) {
      const int a = chain.sub_index(r, q);
      for (int b = 0; b < f.dim(); ++b) {
        const cplx v = op.mat(a, b);
        if (v == cplx(0)) continue;
        const long c = r + static_cast<long>(b - a) * str;
        // odd entries pick up the parity of trailing factors (row side)
        const int pe = (f.parity(a) + f.parity(b)) & 1;
        const double sgn = (pe && chain.parity_range(r, q + 1, nf)) ? -1.0 : 1.0;
        out(r, c) = sgn * v;
      }
    }
    return GradedOperator(chain, std::move(out));
  }

  if (k == 2) {
    int i = positions[0], j = positions[1];
    GradedOperator base = op;
    if (i > j) {
      // first factor acts on the later chain position: O_{ij} = (P O P)_{ji}
      GradedOperator P = graded_permutation(op.space.factor(0));
      base = GradedOperator(op.space, P.mat * op.mat * P.mat);
      std::swap(i, j);
    }
    if (!is_even(base, 0.0))
      throw Error(Error::Kind::invalid_argument, "embed: two-factor embedding requires an even operator");
    const auto& fi = chain.factor(i);
    const auto& fj = chain.factor(j);
    const long si = chain.stride(i), sj = chain.stride(j);
    const int di = fi.dim(), dj = fj.dim();
    for (long r = 0; r < D; ++r) {
      const int a = chain.sub_index(r, i), g = chain.sub_index(r, j);
      const int pin = chain.parity_range(r, i + 1, j);  // parity between the two legs
      for (int b = 0; b < di; ++b)
        for (int d = 0; d < dj; ++d) {
          const cplx v = base.mat(static_cast<long>(a) * dj + g, static_cast<long>(b) * dj + d);
          if (v == cplx(0)) continue;
          const long c = r + static_cast<long>(b - a) * si + static_cast<long>(d - g) * sj;
          const int pe = (fj.parity(g) + fj.parity(d)) & 1;
          out(r, c) = (pe && pin) ? -v : v;
        }
    }
    return GradedOperator(chain, std::move(out));
  }

  throw Error(Error::Kind::invalid_argument, "embed: only 1- and 2-factor operators supported");
}

ProductSpace aux_chain(const GradedSpace& local, int L) {
  return ProductSpace::power(local, L + 1);
}

}  // namespace tjb
