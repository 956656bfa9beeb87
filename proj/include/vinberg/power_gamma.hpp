#pragma once

#include <vector>

#include "vinberg/algebra.hpp"
#include "vinberg/triangular.hpp"

namespace vinberg {

// lambda_i per element of I (index order of the poset).
using Multiplier = std::vector<double>;

Multiplier add(const Multiplier& a, const Multiplier& b);
// chi-double-dot: -n_i per element.
Multiplier shift_multiplier(const DimensionSystem& dims);

struct MinorTable {
  std::vector<double> large;   // Δ over the down-set of k
  std::vector<double> strict;  // Δ over the strict down-set of k, 1 when empty
  double det = 1.0;
};

MinorTable minors(const Element& x);
MinorTable minors_from_factor(const LowerTriangular& t);

struct PowerScope {
  int anchor = -1;  // -1: the whole of I; otherwise the up-set of anchor

  static PowerScope full() { return {}; }
  static PowerScope upset(int i) { return {i}; }
};

// prod over k in scope of t_kk^{2 lambda_k}, X = T T*.
double gen_power(const Element& x, const Multiplier& chi, PowerScope scope = PowerScope::full());
double log_gen_power(const Element& x, const Multiplier& chi, PowerScope scope = PowerScope::full());
double log_gen_power_from_factor(const LowerTriangular& t, const Multiplier& chi, PowerScope scope);
// Power on the orbit T.e_psi: uses the anchor's up-set restricted to psi = 1.
// Throws MultiplierOutsideXpsi if lambda_j != 0 at some j of the up-set with
// psi(j) = 0.
double gen_power_orbit(const LowerTriangular& t, const OrbitSignature& sig, const Multiplier& chi);

struct ExponentProfile {
  std::vector<int> n;  // n_j^{i,psi} on the up-set of i, 0 elsewhere
  int weight = 0;      // |psi|
  int total = 0;       // sum_j n_j
};

ExponentProfile n_profile(int i, const std::vector<int>& psi, const Poset& p, const DimensionSystem& dims);

// 2^{-|psi|} pi^{|n^psi|/2} prod_{psi(j)=1} Gamma(lambda_j - n_j/2).  Only the
// coordinates with psi(j) = 1 enter.  Throws Divergent when one of them sits
// at or below n_j/2 and SupportViolation when psi leaves the anchor's up-set.
double gamma_orbit(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i);
double log_gamma_orbit(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i);

// pi^{(n_. - |I|)/2} prod Gamma(lambda_i - n_{i.}/2).  Throws Divergent.
double gamma_cone(const Algebra& alg, const Multiplier& chi);
double log_gamma_cone(const Algebra& alg, const Multiplier& chi);

}  // namespace vinberg
