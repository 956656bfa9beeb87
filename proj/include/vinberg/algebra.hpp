#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "vinberg/poset.hpp"

namespace vinberg {

// Block dimensions n_ij on comparable pairs (symmetric in the pair) and the
// derived counts used by powers and gamma functions.
struct DimensionSystem {
  int size = 0;
  std::vector<int> pair;      // size*size, 0 off comparable pairs and on the diagonal
  std::vector<int> n_below;   // n_{i.} = sum over mu < i of n_{i mu}
  std::vector<int> n_above;   // n_{.i} = sum over i < mu of n_{mu i}
  std::vector<double> n_i;    // 1 + (n_{i.} + n_{.i}) / 2
  double n_total = 0;         // n_. = sum n_i
  int dim_h = 0;              // |I| + sum over pairs

  int n(int i, int j) const { return pair[i * size + j]; }
};

DimensionSystem unit_dimensions(const Poset& p);
// Keys are (a, b) index pairs in either orientation.  Throws DimensionMismatch
// for keys on incomparable pairs or non-positive values.
DimensionSystem make_dimensions(const Poset& p, const std::map<std::pair<int, int>, int>& dims);

// Lower blocks sit at (h, l) with l < h; the matching upper block (l, h) is
// stored in coordinates where pairing a lower block with an upper block is the
// plain dot product.  `involutions[(h, l)]` maps lower coordinates to upper
// ones (row-major n x n) and is also used for the reverse direction, so it
// must be its own inverse.  `products[{h, m, l}]` for l < m < h gives the
// lower-times-lower map as a tensor M[s][p][q] (s over n_hl, p over n_hm,
// q over n_ml).  All other block products follow from trace cyclicity and the
// involution.
struct StructureConstants {
  bool scalar = true;
  std::map<std::pair<int, int>, std::vector<double>> involutions;
  std::map<std::array<int, 3>, std::vector<double>> products;

  static StructureConstants scalar_preset() { return {}; }
};

// One coordinate of the Hermitian space H: the diagonal unit E_k when hi == lo,
// otherwise unit vector `component` in the lower block (hi, lo) together with
// its involute in (lo, hi).
struct HermitianCoord {
  int hi;
  int lo;
  int component;
};

class Algebra {
 public:
  Algebra(Poset p, DimensionSystem dims, StructureConstants sc);

  const Poset& poset() const { return poset_; }
  const DimensionSystem& dims() const { return dims_; }
  const StructureConstants& structure() const { return sc_; }
  int size() const { return poset_.size(); }

  std::size_t storage_size() const { return storage_; }
  // Offset of block (i, j) in element storage, -1 when the block is {0}.
  std::ptrdiff_t offset(int i, int j) const { return offset_[i * size() + j]; }
  int block_dim(int i, int j) const { return i == j ? 1 : dims_.n(i, j); }
  // Row-major n x n map for the pair {i, j}.
  const double* involution(int i, int j) const;
  const std::vector<int>& neighbours(int i) const { return nbr_[i]; }

  // out_ij += a_{i mu} b_{mu j} for distinct, pairwise comparable i, mu, j.
  void accumulate(int i, int mu, int j, const double* a, const double* b, double* out) const;

  const std::vector<HermitianCoord>& hermitian_basis() const { return basis_; }
  int dim_h() const { return dims_.dim_h; }

  bool same_as(const Algebra& other) const { return this == &other; }

 private:
  struct Triple {
    int n_s = 0, n_p = 0, n_q = 0;
    std::vector<double> lower;  // M[s][p][q]
    std::vector<double> upper;  // M'[s][q][p]
  };
  const Triple& triple(int h, int m, int l) const;

  Poset poset_;
  DimensionSystem dims_;
  StructureConstants sc_;
  std::size_t storage_ = 0;
  std::vector<std::ptrdiff_t> offset_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::vector<double>> inv_;  // per unordered pair index lo*n+hi
  std::vector<int> triple_index_;
  std::vector<Triple> triples_;
  std::vector<HermitianCoord> basis_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Throws MissingStructureConstant when a chain triple lacks a product tensor
// and DimensionMismatch when the tensors or the scalar preset disagree with dims.
AlgebraPtr build_algebra(const Poset& p, const DimensionSystem& dims, const StructureConstants& sc);
AlgebraPtr build_scalar_algebra(const Poset& p);

// Dense block-coefficient element.  Blocks at incomparable pairs do not exist.
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr alg);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  bool empty() const { return !alg_; }

  double diag(int i) const { return c_[i]; }
  double& diag(int i) { return c_[i]; }
  // nullptr when the block is {0}.
  const double* block(int i, int j) const;
  double* block(int i, int j);

  const std::vector<double>& coeffs() const { return c_; }
  std::vector<double>& coeffs() { return c_; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double s);

 private:
  AlgebraPtr alg_;
  std::vector<double> c_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(double s, Element a);

Element zero(const AlgebraPtr& alg);
Element unit(const AlgebraPtr& alg);
Element diagonal_unit(const AlgebraPtr& alg, int k);
// e_i (strict = false) or the strict version on the strict up-set of i.
Element upset_unit(const AlgebraPtr& alg, int i, bool strict);
Element diagonal(const AlgebraPtr& alg, const std::vector<double>& d);

Element multiply(const Element& a, const Element& b);
Element involute(const Element& a);
double trace(const Element& a);
// trace(multiply(a, b)) without forming the product.
double pairing(const Element& a, const Element& b);

bool is_hermitian(const Element& a, double tol = 0.0);
bool is_lower_triangular(const Element& a);
double max_abs(const Element& a);
double max_abs_diff(const Element& a, const Element& b);

// Coordinates of a Hermitian element in the basis of Algebra::hermitian_basis
// and back.
std::vector<double> hermitian_coords(const Element& a);
Element from_hermitian_coords(const AlgebraPtr& alg, const std::vector<double>& x);
Element hermitian_basis_element(const AlgebraPtr& alg, int c);
// w with pairing(s, Z) = sum_c w_c * hermitian_coords(Z)_c for Hermitian Z.
std::vector<double> pairing_weights(const Element& s);

const DimensionSystem& dimension_profile(const Algebra& alg);

// Random elements for the axiom checks: i.i.d. standard normal coefficients;
// triangular samples get |t_ii| + 0.1 on the diagonal.
Element random_general(const AlgebraPtr& alg, std::mt19937_64& rng);
Element random_lower(const AlgebraPtr& alg, std::mt19937_64& rng);
Element random_hermitian(const AlgebraPtr& alg, std::mt19937_64& rng);

struct AxiomResult {
  std::string name;
  double residual = 0;  // max relative residual; for positivity the worst negative ratio
  bool pass = true;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const;
  const AxiomResult& find(const std::string& name) const;
};

// Axioms i..vi, the involution being its own inverse, and inner-product
// conditions 1 and 2 (checked on random instances).
AxiomReport axiom_check(const AlgebraPtr& alg, int samples, double tol, std::uint64_t seed);

}  // namespace vinberg
