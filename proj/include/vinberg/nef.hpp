#pragma once

#include <string>
#include <vector>

#include "vinberg/algebra.hpp"
#include "vinberg/gindikin.hpp"
#include "vinberg/power_gamma.hpp"
#include "vinberg/riesz.hpp"

namespace vinberg {

// Exponential family generated by the Riesz measure of chi; theta ranges
// over the dual cone and the mean over the cone.
struct Family {
  AlgebraPtr alg;
  Multiplier chi;
  Classification classification;
};

// Throws NotInXi when chi is outside the Gindikin set and ZeroLambda when
// lambda vanishes on a root or separator.
Family make_family(const AlgebraPtr& alg, const Multiplier& chi);

// Dense dim_h x dim_h form in the Hermitian basis: entry (c, d) is
// <V B_c, B_d>, i.e. Cov(<Z, B_c>, <Z, B_d>) for a covariance.
struct SymmetricOperator {
  int dim = 0;
  std::vector<double> a;

  SymmetricOperator() = default;
  explicit SymmetricOperator(int n) : dim(n), a(static_cast<std::size_t>(n) * n, 0.0) {}
  double operator()(int c, int d) const { return a[static_cast<std::size_t>(c) * dim + d]; }
  double& at(int c, int d) { return a[static_cast<std::size_t>(c) * dim + d]; }
  void symmetrize();
  double min_eigenvalue() const;
};

// log E exp(-<theta, Z>) = -sum 2 lambda_k log t_kk(theta).  Throws NotInDualCone.
double cumulant_k(const Family& f, const Element& theta);

// m = -grad k = sum lambda_i ((theta^{-1})_{i<=} - (theta^{-1})_{i<}).
Element mean_map(const Family& f, const Element& theta);
// Inverse of mean_map.  Throws ZeroLambda, NotInCone.
Element mean_inverse(const Family& f, const Element& m);

// P(X)K = X(KX).  Throws AlgebraMismatch.
Element quadratic_rep(const Element& x, const Element& k);

// Derivative of X -> X^{-1} (the dual-cone inverse R* R, X = T T*, R = T^{-1})
// along K, from the exact tangent of the factor.  Throws NotInCone.
Element inverse_derivative(const Element& x, const Element& k);
// -P(X^{-1})K.  Agrees with inverse_derivative only when the algebra is
// associative enough (symmetric matrices); kept for comparison.
Element inverse_derivative_quadratic(const Element& x, const Element& k);

// Second derivative of the cumulant, from the exact tangent of mean_map.
SymmetricOperator hessian_k(const Family& f, const Element& theta);
// hessian_k at mean_inverse(m).
SymmetricOperator variance_function(const Family& f, const Element& m);
// sum lambda_i (P((theta^{-1})_{i<=}) - P((theta^{-1})_{i<})).
SymmetricOperator hessian_k_quadratic(const Family& f, const Element& theta);
// sum (1/lambda_i)(P(m_{i<=}) - P(m_{i<})).  Throws ZeroLambda.
SymmetricOperator variance_function_quadratic(const Family& f, const Element& m);
// The form of P(X) in the Hermitian basis.
SymmetricOperator quadratic_operator(const Element& x);

// Central differences of cumulant_k along the Hermitian basis, step
// 1e-4 * max(1, |theta_c|) per coordinate.  The gradient entry c is
// dk[B_c] = -<m, B_c>.
std::vector<double> fd_gradient(const Family& f, const Element& theta);
SymmetricOperator fd_hessian(const Family& f, const Element& theta);
// Central difference of X -> X^{-1} along K.
Element fd_inverse_derivative(const Element& x, const Element& k, double h = 1e-5);

// max |a - b| / max(max |b|, floor)
double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b, double floor = 1e-300);

struct OracleRow {
  std::string quantity;  // "mean[c]" or "cov[c,d]"
  double closed = 0;
  double fd = 0;
  double mc = 0;
  double stderr_ = 0;
  double fd_tol = 0;     // relative to the largest closed-form entry
  double mc_sigmas = 0;
  bool fd_pass = true;
  bool mc_pass = true;
  bool pass() const { return fd_pass && mc_pass; }
};

struct OracleTolerances {
  double fd_rel = 1e-5;
  double mean_sigmas = 4.0;
  double cov_sigmas = 5.0;
};

// Closed-form mean and covariance at theta against central differences of
// the cumulant and a Monte Carlo sample of the tilted measure.  Covariance
// rows cover c <= d.
std::vector<OracleRow> verification_oracles(const Family& f, const Element& theta, std::size_t samples,
                                            const SamplerConfig& cfg, const OracleTolerances& tol = {});

}  // namespace vinberg
