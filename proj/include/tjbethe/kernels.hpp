#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tjbethe/graded.hpp"
#include "tjbethe/params.hpp"

namespace tjb {

// R-matrix, K-matrices, nested r/K-matrices, gauge matrices, and a residual
// engine certifying the algebraic relations they satisfy.

/// 9x9 rational R-matrix on BFF (x) BFF: R(u) = u id + eta P.
GradedOperator build_R(cplx u, cplx eta);

/// Nested 4x4 r-matrix on the 2-dim fermionic doublet: r(u) = u id + eta PP,
/// PP the graded permutation at parity (1,1), equal to -Pbar.
GradedOperator build_r_nested(cplx u, cplx eta);

/// Unitarity scalars: rho1(u) = -(u-eta)(u+eta), rho2(u) = -u(u-eta).
cplx rho1(cplx u, cplx eta);
cplx rho2(cplx u, cplx eta);
/// Nested scalars: rho1bar = -(u-eta)(u+eta), rho2bar = -u(u-2eta).
cplx rho1_bar(cplx u, cplx eta);
cplx rho2_bar(cplx u, cplx eta);

/// Boundary K-matrices (3x3); K+ is K-(-u + eta/2) with primed parameters.
Mat build_K_minus(cplx u, const ModelParams& p);
Mat build_K_plus(cplx u, const ModelParams& p);

/// Nested 2x2 boundary matrices in the shifted variable lam = u + eta/2.
Mat build_nested_K_minus(cplx lam, const ModelParams& p);
Mat build_nested_K_plus(cplx lam, const ModelParams& p);
/// Pre-gauge forms: the lower-right 2x2 block of K+(u), and the dressed
/// K- block with its (2u+eta)/(2u) prefactor. Both equal the shifted forms above.
Mat nested_K_plus_unshifted(cplx u, const ModelParams& p);
Mat nested_K_minus_unshifted(cplx u, const ModelParams& p);

/// Gauge matrices diagonalizing the nested K-matrices.
struct GaugePair {
  Mat g_minus;  // 2x2
  Mat g_plus;   // 2x2
  cplx m, n;
};
GaugePair build_gauges(const ModelParams& p);

enum class Relation : std::uint8_t {
  qybe,         // graded Yang-Baxter, operator and entrywise forms
  re,           // graded reflection equation for K-
  dual_re,      // dual reflection equation for K+
  unitarity,
  crossing,     // crossing unitarity with st_1 on both factors
  nested_re,    // ungraded reflection equation for the nested K-
  nested_props  // r-matrix initial condition, unitarity, crossing, PT symmetry
};

const char* relation_name(Relation r);

struct RelationReport {
  std::string relation;
  double tol = 0.0;
  double max_residual = 0.0;   // max absolute entry of LHS - RHS over all samples
  double frobenius = 0.0;      // worst Frobenius norm over samples
  int points = 0;
  bool pass = false;

  std::string to_json() const;
};

/// Spectral sample points for relation checks: seeded pseudo-random complex
/// points of magnitude <= 2 plus the structured points {0, +-eta, +-eta/2}.
std::vector<cplx> relation_sample_points(int count, cplx eta, std::uint64_t seed);

RelationReport check_relation(Relation rel, const ModelParams& p,
                              const std::vector<cplx>& points, double tol);

/// All seven relation checks at default sampling.
std::vector<RelationReport> check_all_relations(const ModelParams& p, double tol = 1e-10,
                                                int points = 20, std::uint64_t seed = 20240517);

}  // namespace tjb
