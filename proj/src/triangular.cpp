#include "vinberg/triangular.hpp"

#include <algorithm>
#include <cmath>

#include "vinberg/error.hpp"
#include "vinberg/poset.hpp"

namespace vinberg {

namespace {

constexpr double kHermitianTol = 1e-10;

// The factorization recurrence runs against either the order of the poset or
// its opposite; "below" is strict and the column order is a linear extension
// of whichever order is in use.
struct Orientation {
  const Poset& p;
  bool opposite;
  bool below(int a, int b) const { return opposite ? p.less(b, a) : p.less(a, b); }
  std::vector<int> order() const {
    std::vector<int> o = p.linear_extension();
    if (opposite) std::reverse(o.begin(), o.end());
    return o;
  }
};

void copy_star(const Algebra& alg, const Element& l, Element& lstar, int i, int j) {
  const int nd = alg.block_dim(i, j);
  const double* f = alg.involution(i, j);
  const double* src = l.block(i, j);
  double* dst = lstar.block(j, i);
  for (int r = 0; r < nd; ++r) {
    double s = 0;
    for (int c = 0; c < nd; ++c) s += f[r * nd + c] * src[c];
    dst[r] = s;
  }
}

double block_dot(const Algebra& alg, const Element& a, int i, int j, const Element& b) {
  const double* x = a.block(i, j);
  const double* y = b.block(j, i);
  double s = 0;
  for (int k = 0; k < alg.block_dim(i, j); ++k) s += x[k] * y[k];
  return s;
}

struct FactorResult {
  Element l;
  std::vector<int> psi;
};

// X = L e_psi L*.  With pivot_tol < 0 every pivot must be > 0 (throws `code`);
// otherwise pivots <= pivot_tol are dropped.
FactorResult factor_core(const Element& x, const Orientation& o, double pivot_tol, ErrorCode code) {
  const AlgebraPtr& alg_ptr = x.algebra_ptr();
  const Algebra& alg = *alg_ptr;
  const int n = alg.size();
  FactorResult r{Element(alg_ptr), std::vector<int>(n, 1)};
  Element& l = r.l;
  Element lstar(alg_ptr);
  for (int j : o.order()) {
    double pivot = x.diag(j);
    for (int mu : alg.neighbours(j))
      if (o.below(mu, j)) pivot -= block_dot(alg, l, j, mu, lstar);
    if (pivot_tol < 0) {
      if (!(pivot > 0))
        throw Error(code, "pivot at element '" + alg.poset().label(j) + "' is not positive");
    } else if (pivot <= pivot_tol) {
      if (pivot < -pivot_tol)
        throw Error(ErrorCode::NotInClosure,
                    "pivot at element '" + alg.poset().label(j) + "' is negative");
      r.psi[j] = 0;
      l.diag(j) = 1.0;
      lstar.diag(j) = 1.0;
      continue;
    }
    const double tjj = std::sqrt(pivot);
    l.diag(j) = tjj;
    lstar.diag(j) = tjj;
    for (int i : alg.neighbours(j)) {
      if (!o.below(j, i)) continue;
      const int nd = alg.block_dim(i, j);
      std::vector<double> acc(x.block(i, j), x.block(i, j) + nd);
      std::vector<double> sub(nd, 0.0);
      for (int mu : alg.neighbours(j))
        if (o.below(mu, j) && r.psi[mu]) alg.accumulate(i, mu, j, l.block(i, mu), lstar.block(mu, j), sub.data());
      double* out = l.block(i, j);
      for (int k = 0; k < nd; ++k) out[k] = (acc[k] - sub[k]) / tjj;
      copy_star(alg, l, lstar, i, j);
    }
  }
  return r;
}

// dL with dX = dL L* + L dL*.
Element tangent_core(const Element& l, const Element& dx, const Orientation& o) {
  const AlgebraPtr& alg_ptr = l.algebra_ptr();
  const Algebra& alg = *alg_ptr;
  Element lstar(alg_ptr), dl(alg_ptr), dlstar(alg_ptr);
  for (int j : o.order()) {
    lstar.diag(j) = l.diag(j);
    for (int i : alg.neighbours(j))
      if (o.below(j, i)) copy_star(alg, l, lstar, i, j);
  }
  for (int j : o.order()) {
    double d = dx.diag(j);
    for (int mu : alg.neighbours(j))
      if (o.below(mu, j)) d -= block_dot(alg, dl, j, mu, lstar) + block_dot(alg, l, j, mu, dlstar);
    const double tjj = l.diag(j);
    const double dtjj = d / (2.0 * tjj);
    dl.diag(j) = dtjj;
    dlstar.diag(j) = dtjj;
    for (int i : alg.neighbours(j)) {
      if (!o.below(j, i)) continue;
      const int nd = alg.block_dim(i, j);
      std::vector<double> acc(dx.block(i, j), dx.block(i, j) + nd);
      const double* lij = l.block(i, j);
      for (int k = 0; k < nd; ++k) acc[k] -= lij[k] * dtjj;
      std::vector<double> sub(nd, 0.0);
      for (int mu : alg.neighbours(j))
        if (o.below(mu, j)) {
          alg.accumulate(i, mu, j, dl.block(i, mu), lstar.block(mu, j), sub.data());
          alg.accumulate(i, mu, j, l.block(i, mu), dlstar.block(mu, j), sub.data());
        }
      double* out = dl.block(i, j);
      for (int k = 0; k < nd; ++k) out[k] = (acc[k] - sub[k]) / tjj;
      copy_star(alg, dl, dlstar, i, j);
    }
  }
  return dl;
}

void require_hermitian(const Element& x, ErrorCode) {
  if (!is_hermitian(x, kHermitianTol)) throw Error(ErrorCode::NotHermitian, "element is not Hermitian");
}

void require_lower(const Element& t, const char* what) {
  if (!is_lower_triangular(t)) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is not lower triangular");
}

}  // namespace

int OrbitSignature::weight() const {
  int w = 0;
  for (int v : psi) w += v;
  return w;
}

OrbitSignature ones_signature(const Poset& p, int i) {
  const StructureSets s = structure_sets(p);
  OrbitSignature sig{i, std::vector<int>(p.size(), 0)};
  for (int j = 0; j < p.size(); ++j)
    if (p.leq(i, j) && !(s.is_root[i] && s.is_separator[j])) sig.psi[j] = 1;
  return sig;
}

Element signature_diagonal(const AlgebraPtr& alg, const std::vector<int>& psi) {
  Element e(alg);
  for (int j = 0; j < alg->size(); ++j) e.diag(j) = psi[j] ? 1.0 : 0.0;
  return e;
}

LowerTriangular tri_product(const LowerTriangular& s, const LowerTriangular& t) {
  if (s.algebra_ptr().get() != t.algebra_ptr().get())
    throw Error(ErrorCode::AlgebraMismatch, "triangular product across algebras");
  return multiply(s, t);
}

LowerTriangular tri_invert(const LowerTriangular& t) {
  const AlgebraPtr& alg_ptr = t.algebra_ptr();
  const Algebra& alg = *alg_ptr;
  const Poset& p = alg.poset();
  Element r(alg_ptr);
  for (int i = 0; i < alg.size(); ++i) {
    if (!(t.diag(i) > 0))
      throw Error(ErrorCode::SingularDiagonal, "diagonal entry at '" + p.label(i) + "' is not positive");
    r.diag(i) = 1.0 / t.diag(i);
  }
  const auto& order = p.linear_extension();
  for (int j : order)
    for (int i : order) {
      if (!p.less(j, i)) continue;
      const int nd = alg.block_dim(i, j);
      std::vector<double> acc(nd, 0.0);
      const double* tij = t.block(i, j);
      for (int k = 0; k < nd; ++k) acc[k] = tij[k] * r.diag(j);
      for (int mu : alg.neighbours(i))
        if (p.less(j, mu) && p.less(mu, i)) alg.accumulate(i, mu, j, t.block(i, mu), r.block(mu, j), acc.data());
      double* out = r.block(i, j);
      for (int k = 0; k < nd; ++k) out[k] = -acc[k] / t.diag(i);
    }
  return r;
}

LowerTriangular cholesky(const Element& x) {
  require_hermitian(x, ErrorCode::NotHermitian);
  Orientation o{x.algebra().poset(), false};
  return factor_core(x, o, -1.0, ErrorCode::NotInCone).l;
}

LowerTriangular cholesky_dual(const Element& theta) {
  require_hermitian(theta, ErrorCode::NotHermitian);
  Orientation o{theta.algebra().poset(), true};
  return involute(factor_core(theta, o, -1.0, ErrorCode::NotInDualCone).l);
}

Element inverse_dual(const Element& theta) {
  const LowerTriangular s = tri_invert(cholesky_dual(theta));
  return multiply(s, involute(s));
}

Element inverse_primal(const Element& x) {
  const LowerTriangular r = tri_invert(cholesky(x));
  return multiply(involute(r), r);
}

LowerTriangular cholesky_tangent(const LowerTriangular& t, const Element& dx) {
  Orientation o{t.algebra().poset(), false};
  return tangent_core(t, dx, o);
}

LowerTriangular cholesky_dual_tangent(const LowerTriangular& t, const Element& dtheta) {
  Orientation o{t.algebra().poset(), true};
  return involute(tangent_core(involute(t), dtheta, o));
}

Element group_act(const LowerTriangular& t, const Element& x) {
  require_lower(t, "group element");
  const LowerTriangular w = tri_product(t, cholesky(x));
  return multiply(w, involute(w));
}

LowerTriangular restrict_columns(const LowerTriangular& t, int i, bool strict) {
  const Algebra& alg = t.algebra();
  const Poset& p = alg.poset();
  Element r(t.algebra_ptr());
  for (int k = 0; k < alg.size(); ++k) {
    if (!p.leq(i, k) || (strict && k == i)) continue;
    r.diag(k) = t.diag(k);
    for (int a : alg.neighbours(k))
      if (p.less(k, a)) {
        const double* src = t.block(a, k);
        std::copy(src, src + alg.block_dim(a, k), r.block(a, k));
      }
  }
  return r;
}

Element column_outer(const LowerTriangular& t, int k) {
  const Algebra& alg = t.algebra();
  const Poset& p = alg.poset();
  Element col(t.algebra_ptr());
  col.diag(k) = t.diag(k);
  for (int a : alg.neighbours(k))
    if (p.less(k, a)) {
      const double* src = t.block(a, k);
      std::copy(src, src + alg.block_dim(a, k), col.block(a, k));
    }
  return multiply(col, involute(col));
}

UpsetProjection project_upsets_from_factor(const LowerTriangular& t, int i) {
  const LowerTriangular a = restrict_columns(t, i, false);
  const LowerTriangular b = restrict_columns(t, i, true);
  return {multiply(a, involute(a)), multiply(b, involute(b))};
}

UpsetProjection project_upsets(const Element& x, int i) {
  return project_upsets_from_factor(cholesky(x), i);
}

std::vector<Element> components(const Element& x) {
  const AlgebraPtr& alg = x.algebra_ptr();
  const Poset& p = alg->poset();
  const StructureSets s = structure_sets(p);
  const LowerTriangular t = cholesky(x);
  std::vector<Element> up;
  up.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const LowerTriangular a = restrict_columns(t, i, false);
    up.push_back(multiply(a, involute(a)));
  }
  std::vector<Element> out(p.size(), Element(alg));
  for (int i = 0; i < p.size(); ++i) {
    if (s.is_root[i]) {
      out[i] = up[i];
      for (int sep : s.element_separators[i]) out[i] -= up[sep];
    } else if (s.is_separator[i]) {
      out[i] = up[i];
    }
  }
  return out;
}

Element orbit_point(const LowerTriangular& t, const std::vector<int>& psi) {
  const Element te = multiply(t, signature_diagonal(t.algebra_ptr(), psi));
  return multiply(te, involute(t));
}

OrbitClassification classify_orbit(const Element& z, double tol) {
  require_hermitian(z, ErrorCode::NotHermitian);
  if (tol < 0) {
    double m = 1.0;
    for (int i = 0; i < z.algebra().size(); ++i) m = std::max(m, z.diag(i));
    tol = 1e-10 * m;
  }
  Orientation o{z.algebra().poset(), false};
  FactorResult r = factor_core(z, o, tol, ErrorCode::NotInClosure);
  return {OrbitSignature{-1, r.psi}, r.l};
}

}  // namespace vinberg
