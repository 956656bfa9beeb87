#include "vinberg/power_gamma.hpp"

#include <cmath>
#include <numbers>

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

void check_length(const Algebra& alg, const Multiplier& chi) {
  if (static_cast<int>(chi.size()) != alg.size())
    throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
}

// exp with a clear failure instead of a silent infinity.
double checked_exp(double v) {
  if (v > 709.0) throw Error(ErrorCode::Divergent, "value overflows double precision; use the log form");
  return std::exp(v);
}

}  // namespace

Multiplier add(const Multiplier& a, const Multiplier& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "multiplier lengths differ");
  Multiplier r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Multiplier shift_multiplier(const DimensionSystem& dims) {
  Multiplier r(dims.n_i.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = -dims.n_i[k];
  return r;
}

MinorTable minors_from_factor(const LowerTriangular& t) {
  const Poset& p = t.algebra().poset();
  const int n = p.size();
  MinorTable m;
  m.large.assign(n, 1.0);
  m.strict.assign(n, 1.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double sq = t.diag(j) * t.diag(j);
      if (p.leq(j, k)) m.large[k] *= sq;
      if (p.less(j, k)) m.strict[k] *= sq;
    }
    m.det *= t.diag(k) * t.diag(k);
  }
  return m;
}

MinorTable minors(const Element& x) { return minors_from_factor(cholesky(x)); }

double log_gen_power_from_factor(const LowerTriangular& t, const Multiplier& chi, PowerScope scope) {
  const Algebra& alg = t.algebra();
  check_length(alg, chi);
  const Poset& p = alg.poset();
  double s = 0;
  for (int k = 0; k < alg.size(); ++k) {
    if (scope.anchor >= 0 && !p.leq(scope.anchor, k)) continue;
    if (chi[k] != 0.0) s += 2.0 * chi[k] * std::log(t.diag(k));
  }
  return s;
}

double log_gen_power(const Element& x, const Multiplier& chi, PowerScope scope) {
  return log_gen_power_from_factor(cholesky(x), chi, scope);
}

double gen_power(const Element& x, const Multiplier& chi, PowerScope scope) {
  return checked_exp(log_gen_power(x, chi, scope));
}

double gen_power_orbit(const LowerTriangular& t, const OrbitSignature& sig, const Multiplier& chi) {
  const Algebra& alg = t.algebra();
  check_length(alg, chi);
  const Poset& p = alg.poset();
  double s = 0;
  for (int k = 0; k < alg.size(); ++k) {
    if (sig.anchor >= 0 && !p.leq(sig.anchor, k)) continue;
    if (!sig.psi[k]) {
      if (chi[k] != 0.0)
        throw Error(ErrorCode::MultiplierOutsideXpsi,
                    "lambda at '" + p.label(k) + "' must vanish where psi is 0");
      continue;
    }
    if (chi[k] != 0.0) s += 2.0 * chi[k] * std::log(t.diag(k));
  }
  return checked_exp(s);
}

ExponentProfile n_profile(int i, const std::vector<int>& psi, const Poset& p, const DimensionSystem& dims) {
  ExponentProfile e;
  const int n = p.size();
  e.n.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    if (psi[j]) ++e.weight;
    if (i >= 0 && !p.leq(i, j)) continue;
    for (int k = 0; k < n; ++k)
      if (p.less(k, j) && psi[k]) e.n[j] += dims.n(k, j);
    e.total += e.n[j];
  }
  return e;
}

double log_gamma_orbit(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i) {
  check_length(alg, chi_i);
  const Poset& p = alg.poset();
  for (int j = 0; j < alg.size(); ++j)
    if (sig.psi[j] && sig.anchor >= 0 && !p.leq(sig.anchor, j))
      throw Error(ErrorCode::SupportViolation, "signature is nonzero outside the anchor's up-set");
  const ExponentProfile e = n_profile(sig.anchor, sig.psi, p, alg.dims());
  double s = -e.weight * std::numbers::ln2 + 0.5 * e.total * std::log(std::numbers::pi);
  for (int j = 0; j < alg.size(); ++j) {
    if (!sig.psi[j]) continue;
    const double a = chi_i[j] - 0.5 * e.n[j];
    if (!(a > 0))
      throw Error(ErrorCode::Divergent, "lambda at '" + p.label(j) + "' does not exceed n_j/2");
    s += std::lgamma(a);
  }
  return s;
}

double gamma_orbit(const Algebra& alg, const OrbitSignature& sig, const Multiplier& chi_i) {
  return checked_exp(log_gamma_orbit(alg, sig, chi_i));
}

double log_gamma_cone(const Algebra& alg, const Multiplier& chi) {
  check_length(alg, chi);
  const DimensionSystem& d = alg.dims();
  double s = 0.5 * (d.n_total - alg.size()) * std::log(std::numbers::pi);
  for (int i = 0; i < alg.size(); ++i) {
    const double a = chi[i] - 0.5 * d.n_below[i];
    if (!(a > 0))
      throw Error(ErrorCode::Divergent,
                  "lambda at '" + alg.poset().label(i) + "' does not exceed n_{i.}/2");
    s += std::lgamma(a);
  }
  return s;
}

double gamma_cone(const Algebra& alg, const Multiplier& chi) { return checked_exp(log_gamma_cone(alg, chi)); }

}  // namespace vinberg
