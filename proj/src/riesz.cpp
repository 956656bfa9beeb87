#include "vinberg/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "vinberg/error.hpp"
#include "vinberg/kernels.hpp"

namespace vinberg {

namespace {

// Fills `n` rows of `dim` doubles; `draw(rng, row)` writes one row.
template <class Draw>
void fill_blocks(std::size_t n, std::size_t dim, const SamplerConfig& cfg, std::vector<double>& out, Draw draw) {
  out.assign(n * dim, 0.0);
  const std::size_t block = std::max<std::size_t>(cfg.block, 1);
  const std::size_t nblocks = (n + block - 1) / block;
  auto run_block = [&](std::size_t b) {
    std::mt19937_64 rng = block_rng(cfg.seed, b);
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t r = b * block; r < end; ++r) draw(rng, out.data() + r * dim);
  };
  const std::size_t streams = std::min<std::size_t>(std::max(cfg.streams, 1), std::max<std::size_t>(nblocks, 1));
  if (streams <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) run_block(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(streams);
  for (std::size_t w = 0; w < streams; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < nblocks; b += streams) run_block(b);
    });
  for (auto& t : pool) t.join();
}

void write_coords(const Element& y, double* row) {
  const std::vector<double> c = hermitian_coords(y);
  std::copy(c.begin(), c.end(), row);
}

bool is_unit(const Element& x) {
  return max_abs_diff(x, unit(x.algebra_ptr())) == 0.0;
}

// Validates chi_i against Xi(anchor, psi) and returns the sampling plan.
ComponentPlan checked_plan(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i) {
  const Poset& p = alg.poset();
  const int n = p.size();
  if (static_cast<int>(chi_i.size()) != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  const ExponentProfile e = n_profile(sig.anchor, sig.psi, p, alg.dims());
  ComponentPlan plan{sig, std::vector<double>(n, 0.0)};
  for (int j = 0; j < n; ++j) {
    const bool inside = sig.anchor < 0 || p.leq(sig.anchor, j);
    const double twice = 2.0 * chi_i[j];
    bool ok;
    if (!inside) ok = chi_i[j] == 0.0 && !sig.psi[j];
    else if (sig.psi[j]) ok = twice > e.n[j];
    else ok = twice == e.n[j];
    if (!ok)
      throw Error(ErrorCode::NotInXiComponent,
                  "coordinate '" + p.label(j) + "' violates the component condition for its signature");
    if (sig.psi[j]) plan.shape[j] = chi_i[j] - 0.5 * e.n[j];
  }
  return plan;
}

bool all_zero(const std::vector<int>& psi) {
  return std::all_of(psi.begin(), psi.end(), [](int v) { return v == 0; });
}

}  // namespace

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

Element DrawSet::draw(std::size_t r) const {
  const std::size_t d = dim();
  std::vector<double> x(coords.begin() + static_cast<std::ptrdiff_t>(r * d),
                        coords.begin() + static_cast<std::ptrdiff_t>((r + 1) * d));
  return from_hermitian_coords(alg, x);
}

double log_laplace_closed(const Algebra& alg, const Multiplier& chi, const Element& theta) {
  if (!xi_membership(alg, chi)) throw Error(ErrorCode::NotInXi, "multiplier is not in the Gindikin set");
  const LowerTriangular t = cholesky_dual(theta);
  double s = 0;
  for (int k = 0; k < alg.size(); ++k)
    if (chi[k] != 0.0) s -= 2.0 * chi[k] * std::log(t.diag(k));
  return s;
}

double laplace_closed(const Algebra& alg, const Multiplier& chi, const Element& theta) {
  return std::exp(log_laplace_closed(alg, chi, theta));
}

double log_density_ac(const Algebra& alg, const Multiplier& chi, const Element& z) {
  if (static_cast<int>(chi.size()) != alg.size()) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  if (!is_absolutely_continuous(alg, chi))
    throw Error(ErrorCode::NotAbsolutelyContinuous, "density needs lambda_i > n_{i.}/2 for all i");
  LowerTriangular t;
  try {
    t = cholesky(z);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInCone) return -std::numeric_limits<double>::infinity();
    throw;
  }
  const Multiplier shifted = add(chi, shift_multiplier(alg.dims()));
  return log_gen_power_from_factor(t, shifted, PowerScope::full()) - log_gamma_cone(alg, chi);
}

double density_ac(const Algebra& alg, const Multiplier& chi, const Element& z) {
  return std::exp(log_density_ac(alg, chi, z));
}

ComponentPlan component_plan(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i) {
  return checked_plan(alg, sig, chi_i);
}

LowerTriangular sample_component_factor(const AlgebraPtr& alg, const ComponentPlan& plan, std::mt19937_64& rng) {
  const Poset& p = alg->poset();
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Element v = unit(alg);
  for (int j : p.linear_extension()) {
    if (!plan.signature.psi[j]) continue;
    std::gamma_distribution<double> gamma(plan.shape[j], 1.0);
    v.diag(j) = std::sqrt(gamma(rng));
    for (int k : p.linear_extension()) {
      if (!p.less(j, k)) continue;
      double* b = v.block(k, j);
      for (int c = 0; c < alg->block_dim(k, j); ++c) b[c] = normal(rng);
    }
  }
  return v;
}

DrawSet sample_standard_ac(const AlgebraPtr& alg, const Multiplier& chi, std::size_t n, const SamplerConfig& cfg) {
  if (static_cast<int>(chi.size()) != alg->size()) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  if (!is_absolutely_continuous(*alg, chi))
    throw Error(ErrorCode::NotAbsolutelyContinuous, "Bartlett sampler needs lambda_i > n_{i.}/2 for all i");
  const OrbitSignature all{-1, std::vector<int>(alg->size(), 1)};
  const ComponentPlan plan = checked_plan(*alg, all, chi);
  DrawSet out{alg, n, {}};
  fill_blocks(n, alg->dim_h(), cfg, out.coords, [&](std::mt19937_64& rng, double* row) {
    const LowerTriangular v = sample_component_factor(alg, plan, rng);
    write_coords(multiply(v, involute(v)), row);
  });
  return out;
}

DrawSet sample_orbit_component(const AlgebraPtr& alg, const OrbitSignature& sig, const Multiplier& chi_i,
                               std::size_t n, const SamplerConfig& cfg) {
  const ComponentPlan plan = checked_plan(*alg, sig, chi_i);
  DrawSet out{alg, n, {}};
  if (all_zero(sig.psi)) {
    out.coords.assign(n * alg->dim_h(), 0.0);
    return out;
  }
  fill_blocks(n, alg->dim_h(), cfg, out.coords, [&](std::mt19937_64& rng, double* row) {
    write_coords(orbit_point(sample_component_factor(alg, plan, rng), sig.psi), row);
  });
  return out;
}

DrawSet sample_riesz(const AlgebraPtr& alg, const Multiplier& chi, const Element& theta, std::size_t n,
                     const SamplerConfig& cfg, const std::optional<XiWitness>& witness) {
  if (static_cast<int>(chi.size()) != alg->size()) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  const LowerTriangular t_theta = cholesky_dual(theta);
  const bool tilt = !is_unit(theta);
  const LowerTriangular a = tri_invert(t_theta);

  std::vector<ComponentPlan> plans;
  if (witness) {
    Multiplier total(alg->size(), 0.0);
    for (std::size_t k = 0; k < witness->signatures.size(); ++k) {
      plans.push_back(checked_plan(*alg, witness->signatures[k], witness->components[k]));
      total = add(total, witness->components[k]);
    }
    if (total != chi) throw Error(ErrorCode::NotInXi, "witness components do not add up to the multiplier");
  } else if (is_absolutely_continuous(*alg, chi)) {
    plans.push_back(checked_plan(*alg, OrbitSignature{-1, std::vector<int>(alg->size(), 1)}, chi));
  } else {
    const auto w = xi_membership(*alg, chi);
    if (!w) throw Error(ErrorCode::NotInXi, "multiplier is not in the Gindikin set");
    for (std::size_t k = 0; k < w->signatures.size(); ++k)
      plans.push_back(checked_plan(*alg, w->signatures[k], w->components[k]));
  }
  plans.erase(std::remove_if(plans.begin(), plans.end(),
                             [](const ComponentPlan& pl) { return all_zero(pl.signature.psi); }),
              plans.end());

  DrawSet out{alg, n, {}};
  fill_blocks(n, alg->dim_h(), cfg, out.coords, [&](std::mt19937_64& rng, double* row) {
    Element y(alg);
    for (const auto& plan : plans) {
      LowerTriangular v = sample_component_factor(alg, plan, rng);
      if (tilt) v = tri_product(a, v);
      y += orbit_point(v, plan.signature.psi);
    }
    write_coords(y, row);
  });
  return out;
}

McEstimate mc_laplace(const DrawSet& draws, const Element& s) {
  if (draws.count == 0) throw Error(ErrorCode::EmptySample, "no draws");
  const std::vector<double> w = pairing_weights(s);
  std::vector<double> v(draws.count);
  kernels::dot_rows(draws.coords.data(), draws.count, draws.dim(), w.data(), v.data());
  double sum = 0;
  for (double& x : v) {
    x = std::exp(-x);
    sum += x;
  }
  const double mean = sum / static_cast<double>(draws.count);
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  McEstimate r{mean, 0.0};
  if (draws.count > 1) r.stderr_ = std::sqrt(ss / static_cast<double>(draws.count - 1) / static_cast<double>(draws.count));
  return r;
}

McMoments mc_moments(const DrawSet& draws) {
  if (draws.count == 0) throw Error(ErrorCode::EmptySample, "no draws");
  const std::size_t d = draws.dim();
  const std::size_t n = draws.count;
  // Row c of W gives <Z, B_c> from the coordinates of Z.
  std::vector<double> wmat(d * d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::vector<double> w = pairing_weights(hermitian_basis_element(draws.alg, static_cast<int>(c)));
    std::copy(w.begin(), w.end(), wmat.begin() + static_cast<std::ptrdiff_t>(c * d));
  }
  std::vector<double> y(n * d);
  std::vector<double> col(n);
  for (std::size_t c = 0; c < d; ++c) {
    kernels::dot_rows(draws.coords.data(), n, d, wmat.data() + c * d, col.data());
    for (std::size_t r = 0; r < n; ++r) y[r * d + c] = col[r];
  }
  McMoments m;
  m.mean.assign(d, 0.0);
  kernels::column_sums(draws.coords.data(), n, d, m.mean.data());
  for (double& v : m.mean) v /= static_cast<double>(n);
  std::vector<double> ymean(d, 0.0);
  kernels::column_sums(y.data(), n, d, ymean.data());
  for (double& v : ymean) v /= static_cast<double>(n);
  m.pairing_mean = ymean;
  std::vector<double> gram(d * d, 0.0), gram2(d * d, 0.0);
  kernels::centered_gram(y.data(), n, d, ymean.data(), gram.data(), gram2.data());
  m.cov.assign(d * d, 0.0);
  m.cov_stderr.assign(d * d, 0.0);
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k < d * d; ++k) {
    m.cov[k] = n > 1 ? gram[k] / (nn - 1.0) : 0.0;
    const double mean_p = gram[k] / nn;
    const double var_p = std::max(0.0, gram2[k] / nn - mean_p * mean_p);
    m.cov_stderr[k] = std::sqrt(var_p / nn);
  }
  m.pairing_mean_stderr.assign(d, 0.0);
  for (std::size_t c = 0; c < d; ++c) m.pairing_mean_stderr[c] = std::sqrt(m.cov[c * d + c] / nn);
  return m;
}

}  // namespace vinberg
