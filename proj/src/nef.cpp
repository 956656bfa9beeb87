#include "vinberg/nef.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "vinberg/error.hpp"
#include "vinberg/poset.hpp"
#include "vinberg/triangular.hpp"

namespace vinberg {

namespace {

void require_same(const Element& a, const Element& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw Error(ErrorCode::AlgebraMismatch, "elements belong to different algebras");
}

void require_family_algebra(const Family& f, const Element& x) {
  if (x.algebra_ptr() != f.alg) throw Error(ErrorCode::AlgebraMismatch, "element does not belong to the family's algebra");
}

// Column k of a lower-triangular factor as an element.
Element column(const LowerTriangular& t, int k) {
  const Algebra& alg = t.algebra();
  const Poset& p = alg.poset();
  Element col(t.algebra_ptr());
  col.diag(k) = t.diag(k);
  for (int a : alg.neighbours(k))
    if (p.less(k, a)) {
      const double* src = t.block(a, k);
      std::copy(src, src + alg.block_dim(a, k), col.block(a, k));
    }
  return col;
}

// Builds the Gram form of a linear map K -> op(K).
template <class Op>
SymmetricOperator form_of(const AlgebraPtr& alg, Op op) {
  const int d = alg->dim_h();
  std::vector<Element> basis;
  basis.reserve(d);
  for (int c = 0; c < d; ++c) basis.push_back(hermitian_basis_element(alg, c));
  SymmetricOperator g(d);
  for (int c = 0; c < d; ++c) {
    const Element v = op(basis[c]);
    for (int e = 0; e < d; ++e) g.at(c, e) = pairing(v, basis[e]);
  }
  g.symmetrize();
  return g;
}

double step_for(double coord) { return 1e-4 * std::max(1.0, std::abs(coord)); }

}  // namespace

Family make_family(const AlgebraPtr& alg, const Multiplier& chi) {
  if (static_cast<int>(chi.size()) != alg->size())
    throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  Family f{alg, chi, classify_measure(*alg, chi)};
  if (f.classification.kind == MeasureClass::NotRiesz)
    throw Error(ErrorCode::NotInXi, "multiplier is not in the Gindikin set");
  if (!f.classification.generates_nef)
    throw Error(ErrorCode::ZeroLambda, "lambda vanishes on a root or separator");
  return f;
}

void SymmetricOperator::symmetrize() {
  for (int c = 0; c < dim; ++c)
    for (int d = c + 1; d < dim; ++d) {
      const double v = 0.5 * (at(c, d) + at(d, c));
      at(c, d) = v;
      at(d, c) = v;
    }
}

double SymmetricOperator::min_eigenvalue() const {
  if (dim == 0) return 0.0;
  Eigen::Map<const Eigen::MatrixXd> m(a.data(), dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double cumulant_k(const Family& f, const Element& theta) {
  require_family_algebra(f, theta);
  const LowerTriangular t = cholesky_dual(theta);
  double s = 0;
  for (int k = 0; k < f.alg->size(); ++k)
    if (f.chi[k] != 0.0) s -= 2.0 * f.chi[k] * std::log(t.diag(k));
  return s;
}

Element mean_map(const Family& f, const Element& theta) {
  require_family_algebra(f, theta);
  const LowerTriangular s = tri_invert(cholesky_dual(theta));
  Element m(f.alg);
  for (int i = 0; i < f.alg->size(); ++i)
    if (f.chi[i] != 0.0) m += f.chi[i] * column_outer(s, i);
  return m;
}

Element mean_inverse(const Family& f, const Element& m) {
  require_family_algebra(f, m);
  for (int i = 0; i < f.alg->size(); ++i)
    if (f.chi[i] == 0.0)
      throw Error(ErrorCode::ZeroLambda, "lambda_" + f.alg->poset().label(i) + " = 0; the mean does not determine theta");
  const LowerTriangular t = cholesky(m);
  Element y(f.alg);
  for (int i = 0; i < f.alg->size(); ++i) y += (1.0 / f.chi[i]) * column_outer(t, i);
  return inverse_primal(y);
}

Element quadratic_rep(const Element& x, const Element& k) {
  require_same(x, k);
  return multiply(x, multiply(k, x));
}

Element inverse_derivative(const Element& x, const Element& k) {
  require_same(x, k);
  const LowerTriangular t = cholesky(x);
  const LowerTriangular r = tri_invert(t);
  const LowerTriangular dt = cholesky_tangent(t, k);
  const Element dr = -1.0 * multiply(r, multiply(dt, r));
  return multiply(involute(dr), r) + multiply(involute(r), dr);
}

Element inverse_derivative_quadratic(const Element& x, const Element& k) {
  return -1.0 * quadratic_rep(inverse_primal(x), k);
}

SymmetricOperator hessian_k(const Family& f, const Element& theta) {
  require_family_algebra(f, theta);
  const LowerTriangular t = cholesky_dual(theta);
  const LowerTriangular s = tri_invert(t);
  std::vector<Element> cols;
  for (int i = 0; i < f.alg->size(); ++i) cols.push_back(column(s, i));
  return form_of(f.alg, [&](const Element& b) {
    const LowerTriangular dt = cholesky_dual_tangent(t, b);
    const Element ds = -1.0 * multiply(multiply(s, dt), s);
    Element dm(f.alg);
    for (int i = 0; i < f.alg->size(); ++i) {
      if (f.chi[i] == 0.0) continue;
      const Element dc = column(ds, i);
      dm += f.chi[i] * (multiply(dc, involute(cols[i])) + multiply(cols[i], involute(dc)));
    }
    return -1.0 * dm;
  });
}

SymmetricOperator variance_function(const Family& f, const Element& m) {
  return hessian_k(f, mean_inverse(f, m));
}

SymmetricOperator hessian_k_quadratic(const Family& f, const Element& theta) {
  require_family_algebra(f, theta);
  const LowerTriangular s = tri_invert(cholesky_dual(theta));
  std::vector<UpsetProjection> proj;
  for (int i = 0; i < f.alg->size(); ++i) proj.push_back(project_upsets_from_factor(s, i));
  return form_of(f.alg, [&](const Element& b) {
    Element v(f.alg);
    for (int i = 0; i < f.alg->size(); ++i)
      if (f.chi[i] != 0.0)
        v += f.chi[i] * (quadratic_rep(proj[i].inclusive, b) - quadratic_rep(proj[i].strict, b));
    return v;
  });
}

SymmetricOperator variance_function_quadratic(const Family& f, const Element& m) {
  require_family_algebra(f, m);
  for (int i = 0; i < f.alg->size(); ++i)
    if (f.chi[i] == 0.0) throw Error(ErrorCode::ZeroLambda, "lambda_" + f.alg->poset().label(i) + " = 0");
  const LowerTriangular t = cholesky(m);
  std::vector<UpsetProjection> proj;
  for (int i = 0; i < f.alg->size(); ++i) proj.push_back(project_upsets_from_factor(t, i));
  return form_of(f.alg, [&](const Element& b) {
    Element v(f.alg);
    for (int i = 0; i < f.alg->size(); ++i)
      v += (1.0 / f.chi[i]) * (quadratic_rep(proj[i].inclusive, b) - quadratic_rep(proj[i].strict, b));
    return v;
  });
}

SymmetricOperator quadratic_operator(const Element& x) {
  return form_of(x.algebra_ptr(), [&](const Element& b) { return quadratic_rep(x, b); });
}

std::vector<double> fd_gradient(const Family& f, const Element& theta) {
  const int d = f.alg->dim_h();
  const std::vector<double> x = hermitian_coords(theta);
  std::vector<double> g(d);
  for (int c = 0; c < d; ++c) {
    const double h = step_for(x[c]);
    const Element b = hermitian_basis_element(f.alg, c);
    g[c] = (cumulant_k(f, theta + h * b) - cumulant_k(f, theta - h * b)) / (2 * h);
  }
  return g;
}

SymmetricOperator fd_hessian(const Family& f, const Element& theta) {
  const int d = f.alg->dim_h();
  const std::vector<double> x = hermitian_coords(theta);
  std::vector<Element> step;
  for (int c = 0; c < d; ++c) step.push_back(step_for(x[c]) * hermitian_basis_element(f.alg, c));
  SymmetricOperator g(d);
  for (int c = 0; c < d; ++c)
    for (int e = c; e < d; ++e) {
      const double hc = step_for(x[c]), he = step_for(x[e]);
      const double v = cumulant_k(f, theta + step[c] + step[e]) - cumulant_k(f, theta + step[c] - step[e]) -
                       cumulant_k(f, theta - step[c] + step[e]) + cumulant_k(f, theta - step[c] - step[e]);
      g.at(c, e) = g.at(e, c) = v / (4 * hc * he);
    }
  return g;
}

Element fd_inverse_derivative(const Element& x, const Element& k, double h) {
  return (1.0 / (2 * h)) * (inverse_primal(x + h * k) - inverse_primal(x - h * k));
}

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b, double floor) {
  double num = 0, den = floor;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

std::vector<OracleRow> verification_oracles(const Family& f, const Element& theta, std::size_t samples,
                                            const SamplerConfig& cfg, const OracleTolerances& tol) {
  const int d = f.alg->dim_h();
  const Element m = mean_map(f, theta);
  const std::vector<double> grad = fd_gradient(f, theta);
  const SymmetricOperator hess = hessian_k(f, theta);
  const SymmetricOperator fdh = fd_hessian(f, theta);
  const McMoments mc = mc_moments(sample_riesz(f.alg, f.chi, theta, samples, cfg));

  std::vector<double> mean_closed(d);
  for (int c = 0; c < d; ++c) mean_closed[c] = pairing(m, hermitian_basis_element(f.alg, c));
  double mean_scale = 0, cov_scale = 0;
  for (double v : mean_closed) mean_scale = std::max(mean_scale, std::abs(v));
  for (double v : hess.a) cov_scale = std::max(cov_scale, std::abs(v));
  const double slack = 1e-12;

  std::vector<OracleRow> rows;
  for (int c = 0; c < d; ++c) {
    OracleRow r;
    r.quantity = "mean[" + std::to_string(c) + "]";
    r.closed = mean_closed[c];
    r.fd = -grad[c];
    r.mc = mc.pairing_mean[c];
    r.stderr_ = mc.pairing_mean_stderr[c];
    r.fd_tol = tol.fd_rel;
    r.mc_sigmas = tol.mean_sigmas;
    r.fd_pass = std::abs(r.fd - r.closed) <= tol.fd_rel * std::max(mean_scale, slack);
    r.mc_pass = std::abs(r.mc - r.closed) <= tol.mean_sigmas * r.stderr_ + slack * std::max(1.0, mean_scale);
    rows.push_back(r);
  }
  for (int c = 0; c < d; ++c)
    for (int e = c; e < d; ++e) {
      OracleRow r;
      r.quantity = "cov[" + std::to_string(c) + "," + std::to_string(e) + "]";
      r.closed = hess(c, e);
      r.fd = fdh(c, e);
      r.mc = mc.cov[static_cast<std::size_t>(c) * d + e];
      r.stderr_ = mc.cov_stderr[static_cast<std::size_t>(c) * d + e];
      r.fd_tol = tol.fd_rel;
      r.mc_sigmas = tol.cov_sigmas;
      r.fd_pass = std::abs(r.fd - r.closed) <= tol.fd_rel * std::max(cov_scale, slack);
      r.mc_pass = std::abs(r.mc - r.closed) <= tol.cov_sigmas * r.stderr_ + slack * std::max(1.0, cov_scale);
      rows.push_back(r);
    }
  return rows;
}

}  // namespace vinberg
