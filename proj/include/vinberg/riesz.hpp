#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vinberg/algebra.hpp"
#include "vinberg/gindikin.hpp"
#include "vinberg/power_gamma.hpp"
#include "vinberg/triangular.hpp"

namespace vinberg {

// Draws are generated in fixed-size blocks; block b always uses the generator
// seeded from (seed, b), and streams only decide which thread fills which
// block.  Output is therefore identical for any stream count.
struct SamplerConfig {
  std::uint64_t seed = 0;
  int streams = 1;
  std::size_t block = 1024;
};

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block);

// n draws, each stored as its Hermitian coordinates (row-major, dim_h columns).
struct DrawSet {
  AlgebraPtr alg;
  std::size_t count = 0;
  std::vector<double> coords;

  std::size_t dim() const { return alg ? static_cast<std::size_t>(alg->dim_h()) : 0; }
  Element draw(std::size_t r) const;
};

// Delta_chi(theta^{-1}) = prod t_kk(theta)^{-2 lambda_k} with theta = T* T.
// Throws NotInXi, NotInDualCone.
double laplace_closed(const Algebra& alg, const Multiplier& chi, const Element& theta);
double log_laplace_closed(const Algebra& alg, const Multiplier& chi, const Element& theta);

// Delta_{chi + chi-double-dot}(Z) / Gamma_P(chi) for Z in the cone, 0 outside.
// Throws NotAbsolutelyContinuous.
double density_ac(const Algebra& alg, const Multiplier& chi, const Element& z);
// -infinity outside the cone.
double log_density_ac(const Algebra& alg, const Multiplier& chi, const Element& z);

// One orbit component: the factor is built on the anchor's up-set with
// t_jj^2 ~ Gamma(shape_j) and N(0, 1/2) coordinates below each live column.
struct ComponentPlan {
  OrbitSignature signature;
  std::vector<double> shape;  // per element; used where psi = 1
};

ComponentPlan component_plan(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i);
// Factor V with the draw equal to orbit_point(V, psi).
LowerTriangular sample_component_factor(const AlgebraPtr& alg, const ComponentPlan& plan, std::mt19937_64& rng);

// Bartlett-type draws at theta = e.  Throws NotAbsolutelyContinuous.
DrawSet sample_standard_ac(const AlgebraPtr& alg, const Multiplier& chi, std::size_t n, const SamplerConfig& cfg);
// Throws NotInXiComponent when chi_i is not in Xi(i, psi).
DrawSet sample_orbit_component(const AlgebraPtr& alg, const OrbitSignature& sig, const Multiplier& chi_i,
                               std::size_t n, const SamplerConfig& cfg);
// Sum of independent component draws from `witness` (found by xi_membership
// when absent; the AC case uses a single Bartlett draw), transported by
// T_theta^{-1} where theta = T_theta* T_theta.  Throws NotInXi, NotInDualCone.
DrawSet sample_riesz(const AlgebraPtr& alg, const Multiplier& chi, const Element& theta, std::size_t n,
                     const SamplerConfig& cfg, const std::optional<XiWitness>& witness = std::nullopt);

struct McEstimate {
  double estimate = 0;
  double stderr_ = 0;
};

// Mean and standard error of exp(-pairing(s, Z)).  Throws EmptySample.
McEstimate mc_laplace(const DrawSet& draws, const Element& s);

struct McMoments {
  std::vector<double> mean;        // Hermitian coordinates of the sample mean
  std::vector<double> cov;         // Cov(<Z, B_c>, <Z, B_d>), dim x dim
  std::vector<double> cov_stderr;  // per entry
  std::vector<double> pairing_mean;         // E<Z, B_c>
  std::vector<double> pairing_mean_stderr;
};

McMoments mc_moments(const DrawSet& draws);

}  // namespace vinberg
