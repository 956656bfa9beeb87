#pragma once

#include <vector>

#include "vinberg/algebra.hpp"

namespace vinberg {

// Lower-triangular elements live in the same storage as general elements;
// the upper blocks stay zero.
using LowerTriangular = Element;

// psi: I -> {0, 1} plus the anchor i in roots ∪ separators it belongs to
// (-1 when the signature is used without an anchor).
struct OrbitSignature {
  int anchor = -1;
  std::vector<int> psi;

  int weight() const;  // |psi|
  bool operator==(const OrbitSignature& o) const { return psi == o.psi; }
};

// psi = 1 on the up-set of i, minus separators when i is a root.
OrbitSignature ones_signature(const Poset& p, int i);
Element signature_diagonal(const AlgebraPtr& alg, const std::vector<int>& psi);

LowerTriangular tri_product(const LowerTriangular& s, const LowerTriangular& t);
// Forward substitution in linear-extension order.  Throws SingularDiagonal.
LowerTriangular tri_invert(const LowerTriangular& t);

// X = T T*.  Pivots must be strictly positive.  Throws NotHermitian, NotInCone.
LowerTriangular cholesky(const Element& x);
// theta = T* T, computed on the opposite order.  Throws NotHermitian, NotInDualCone.
LowerTriangular cholesky_dual(const Element& theta);
// theta^{-1} = S S* with S = T^{-1}, theta = T* T; lies in the cone.
Element inverse_dual(const Element& theta);
// X^{-1} = R* R with R = T^{-1}, X = T T*; lies in the dual cone.
Element inverse_primal(const Element& x);

// Directional derivatives of the two factorizations: dT with
// dX = dT T* + T dT* (primal) or d theta = dT* T + T* dT (dual).
LowerTriangular cholesky_tangent(const LowerTriangular& t, const Element& dx);
LowerTriangular cholesky_dual_tangent(const LowerTriangular& t, const Element& dtheta);

// (T V)(T V)* for X = V V*; refactors X.
Element group_act(const LowerTriangular& t, const Element& x);

// Factor restricted to columns k with i <= k (or i < k when strict).
LowerTriangular restrict_columns(const LowerTriangular& t, int i, bool strict);
// (T E_k)(T E_k)*: the contribution of column k to T T*.
Element column_outer(const LowerTriangular& t, int k);

struct UpsetProjection {
  Element inclusive;  // X_{i<=}
  Element strict;     // X_{i<}
};
UpsetProjection project_upsets(const Element& x, int i);
UpsetProjection project_upsets_from_factor(const LowerTriangular& t, int i);
// X_i for every i: up-set minus separator up-sets on roots, the up-set on
// separators, zero elsewhere.
std::vector<Element> components(const Element& x);

Element orbit_point(const LowerTriangular& t, const std::vector<int>& psi);

struct OrbitClassification {
  OrbitSignature signature;
  LowerTriangular factor;
};
// Pivoted factorization: pivots <= tol mark psi(j) = 0 and clear column j.
// tol < 0 picks 1e-10 * max(1, largest diagonal).  Throws NotInClosure.
OrbitClassification classify_orbit(const Element& z, double tol = -1.0);

}  // namespace vinberg
