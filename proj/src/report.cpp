#include "vinberg/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "vinberg/error.hpp"
#include "vinberg/gindikin.hpp"
#include "vinberg/kernels.hpp"
#include "vinberg/nef.hpp"
#include "vinberg/poset.hpp"
#include "vinberg/power_gamma.hpp"
#include "vinberg/triangular.hpp"

namespace vinberg {

namespace {

const std::vector<std::string> kCheckColumns = {"quantity", "closed", "estimate", "stderr", "tolerance", "pass"};

std::string num(double v) { return format_number(v); }
std::string flag(bool ok) { return ok ? "1" : "0"; }

std::string label_set(const Poset& p, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + p.label(idx[k]);
  return s + "}";
}

std::string vector_text(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + num(v[k]);
  return s + ")";
}

std::string psi_text(const std::vector<int>& psi) {
  std::string s;
  for (int v : psi) s += v ? '1' : '0';
  return s;
}

void info(Report& r, const std::string& q, const std::string& value) {
  r.checks.rows.push_back({q, value, "", "", "", ""});
}

void check(Report& r, const std::string& q, double closed, double est, double se, double tol, bool ok) {
  r.checks.rows.push_back({q, num(closed), num(est), num(se), num(tol), flag(ok)});
}

Multiplier require_chi(const ConeSpec& spec, const RunConfig& cfg) {
  if (cfg.chi) return multiplier_from(*spec.alg, *cfg.chi);
  if (spec.multiplier) return multiplier_from(*spec.alg, *spec.multiplier);
  throw Error(ErrorCode::SpecError, "this command needs a multiplier (--chi or a preset in the cone spec)");
}

Element theta_of(const ConeSpec& spec, const RunConfig& cfg) {
  if (cfg.theta) return hermitian_from(spec.alg, *cfg.theta, 1.0);
  if (spec.theta) return hermitian_from(spec.alg, *spec.theta, 1.0);
  return unit(spec.alg);
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw Error(ErrorCode::SpecError, "sampling commands need --seed");
  if (cfg.samples < 1) throw Error(ErrorCode::SpecError, "--samples must be at least 1");
  return *cfg.seed;
}

SamplerConfig sampler(const RunConfig& cfg) {
  SamplerConfig s;
  s.seed = require_seed(cfg);
  s.streams = std::max(1, cfg.streams);
  return s;
}

void sampler_notes(Report& r, const RunConfig& cfg) {
  r.notes.push_back("samples " + std::to_string(cfg.samples) + ", seed " + std::to_string(*cfg.seed) +
                    ", streams " + std::to_string(std::max(1, cfg.streams)) + ", kernels " +
                    kernels::to_string(kernels::active_isa()));
}

Report describe(const ConeSpec& spec) {
  const Algebra& alg = *spec.alg;
  const Poset& p = alg.poset();
  const DimensionSystem& d = alg.dims();
  const StructureSets s = structure_sets(p);
  Report r{"describe", {}, {kCheckColumns, {}}, std::nullopt};
  std::vector<int> all(p.size());
  for (int i = 0; i < p.size(); ++i) all[i] = i;
  info(r, "elements", label_set(p, all));
  info(r, "linear_extension", label_set(p, p.linear_extension()));
  info(r, "dim_h", std::to_string(alg.dim_h()));
  info(r, "n_total", num(d.n_total));
  info(r, "roots", label_set(p, s.roots));
  info(r, "separators", label_set(p, s.separators));
  for (int i = 0; i < p.size(); ++i) {
    const std::string l = "[" + p.label(i) + "]";
    info(r, "n_below" + l, std::to_string(d.n_below[i]));
    info(r, "n_above" + l, std::to_string(d.n_above[i]));
    info(r, "n_i" + l, num(d.n_i[i]));
    info(r, "S" + l, label_set(p, s.element_separators[i]));
    info(r, "M" + l, label_set(p, s.children[i]));
    info(r, "gamma_shift" + l, num(0.5 * d.n_below[i]));
  }
  info(r, "gamma_pi_exponent", num(0.5 * (d.n_total - p.size())));
  info(r, "admissible", flag(is_vinberg_admissible(p)));
  info(r, "decomposition_exact", flag(decomposition_is_exact(p)));
  r.notes.push_back(std::to_string(p.size()) + " elements, dim H = " + std::to_string(alg.dim_h()) +
                    ", n. = " + num(d.n_total));
  r.notes.push_back("roots " + label_set(p, s.roots) + ", separators " + label_set(p, s.separators));
  return r;
}

Report check_axioms(const ConeSpec& spec, const RunConfig& cfg) {
  Report r{"check-axioms", {}, {kCheckColumns, {}}, std::nullopt};
  const std::uint64_t seed = cfg.seed.value_or(0);
  const AxiomReport rep = axiom_check(spec.alg, cfg.axiom_samples, cfg.axiom_tol, seed);
  for (const auto& a : rep.results) check(r, a.name, 0.0, a.residual, 0.0, cfg.axiom_tol, a.pass);
  r.notes.push_back(std::to_string(cfg.axiom_samples) + " random instances per check, seed " + std::to_string(seed));
  r.notes.push_back(rep.all_pass() ? "all axioms hold" : "some axioms fail");
  return r;
}

void witness_rows(Report& r, const Poset& p, const XiWitness& w) {
  for (std::size_t k = 0; k < w.anchors.size(); ++k) {
    const std::string l = "[" + p.label(w.anchors[k]) + "]";
    info(r, "witness_psi" + l, psi_text(w.signatures[k].psi));
    info(r, "witness_chi" + l, vector_text(w.components[k]));
  }
}

Report gindikin(const ConeSpec& spec, const RunConfig& cfg) {
  const Algebra& alg = *spec.alg;
  const Poset& p = alg.poset();
  const Multiplier chi = require_chi(spec, cfg);
  const Classification c = classify_measure(alg, chi);
  Report r{"gindikin", {}, {kCheckColumns, {}}, std::nullopt};
  info(r, "chi", vector_text(chi));
  info(r, "class", to_string(c.kind));
  info(r, "generates_nef", flag(c.generates_nef));
  for (int i = 0; i < p.size(); ++i)
    info(r, "ac_margin[" + p.label(i) + "]", num(chi[i] - 0.5 * alg.dims().n_below[i]));
  if (c.witness) witness_rows(r, p, *c.witness);
  r.notes.push_back(std::string(to_string(c.kind)) + (c.generates_nef ? ", generates NEF" : ", does not generate NEF"));
  return r;
}

Report gamma(const ConeSpec& spec, const RunConfig& cfg) {
  const Algebra& alg = *spec.alg;
  const Poset& p = alg.poset();
  const Multiplier chi = require_chi(spec, cfg);
  Report r{"gamma", {}, {kCheckColumns, {}}, std::nullopt};
  info(r, "chi", vector_text(chi));
  if (is_absolutely_continuous(alg, chi)) {
    const double lg = log_gamma_cone(alg, chi);
    info(r, "log_gamma_cone", num(lg));
    info(r, "gamma_cone", num(std::exp(lg)));
    const OrbitProductCheck o = orbit_product_check(alg, chi);
    check(r, "orbit_product", std::exp(o.log_closed), std::exp(o.log_product), 0.0, 1e-12, o.rel <= 1e-12);
    for (int j = 0; j < p.size(); ++j)
      check(r, "orbit_exponent[" + p.label(j) + "]", alg.dims().n_below[j], o.exponent_sum[j], 0.0, 0.0,
            o.exponent_sum[j] == alg.dims().n_below[j]);
    r.notes.push_back("Gamma_P(chi) = " + num(std::exp(lg)));
    return r;
  }
  info(r, "gamma_cone", "divergent");
  const auto w = xi_membership(alg, chi);
  if (!w) {
    r.notes.push_back("chi is outside the Gindikin set; no orbit gammas");
    return r;
  }
  for (std::size_t k = 0; k < w->anchors.size(); ++k)
    info(r, "log_gamma_orbit[" + p.label(w->anchors[k]) + "]",
         num(log_gamma_orbit(alg, w->signatures[k], w->components[k])));
  r.notes.push_back("chi is not absolutely continuous; orbit gammas of the first witness listed");
  return r;
}

Report sample(const ConeSpec& spec, const RunConfig& cfg) {
  const AlgebraPtr& alg = spec.alg;
  const Multiplier chi = require_chi(spec, cfg);
  const Element theta = theta_of(spec, cfg);
  const DrawSet draws = sample_riesz(alg, chi, theta, cfg.samples, sampler(cfg));
  Report r{"sample", {}, {kCheckColumns, {}}, Table{}};
  for (int c = 0; c < alg->dim_h(); ++c) r.data->columns.push_back(coordinate_name(*alg, c));
  const std::size_t d = draws.dim();
  for (std::size_t k = 0; k < draws.count; ++k) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < d; ++c) row.push_back(num(draws.coords[k * d + c]));
    r.data->rows.push_back(std::move(row));
  }
  const Family f{alg, chi, classify_measure(*alg, chi)};
  const Element m = mean_map(f, theta);
  const McMoments mc = mc_moments(draws);
  for (int c = 0; c < alg->dim_h(); ++c) {
    const double closed = pairing(m, hermitian_basis_element(alg, c));
    const double se = mc.pairing_mean_stderr[c];
    const bool ok = std::abs(mc.pairing_mean[c] - closed) <= cfg.sigmas * se + 1e-12 * std::max(1.0, std::abs(closed));
    check(r, "mean[" + coordinate_name(*alg, c) + "]", closed, mc.pairing_mean[c], se, cfg.sigmas, ok);
  }
  sampler_notes(r, cfg);
  r.notes.push_back(std::string("measure ") + to_string(f.classification.kind));
  return r;
}

Report verify_laplace(const ConeSpec& spec, const RunConfig& cfg) {
  const AlgebraPtr& alg = spec.alg;
  const Multiplier chi = require_chi(spec, cfg);
  const Element theta = theta_of(spec, cfg);
  const SamplerConfig sc = sampler(cfg);
  const DrawSet draws = sample_riesz(alg, chi, theta, cfg.samples, sc);
  const auto points = random_dual_points(alg, cfg.points, sc.seed);
  const auto res = laplace_checks(*alg, chi, theta, points, draws, cfg.sigmas);
  Report r{"verify-laplace",
           {},
           {{"quantity", "closed", "estimate", "stderr", "z", "tolerance", "pass"}, {}},
           std::nullopt};
  int passed = 0;
  for (std::size_t k = 0; k < res.size(); ++k) {
    const double diff = res[k].estimate - res[k].closed;
    const double z = res[k].stderr_ > 0 ? diff / res[k].stderr_ : (diff == 0 ? 0.0 : std::copysign(INFINITY, diff));
    r.checks.rows.push_back({"laplace[" + std::to_string(k) + "]", num(res[k].closed), num(res[k].estimate),
                             num(res[k].stderr_), num(z), num(cfg.sigmas), flag(res[k].pass)});
    passed += res[k].pass;
  }
  sampler_notes(r, cfg);
  r.notes.push_back(std::to_string(passed) + " of " + std::to_string(res.size()) + " test points within " +
                    num(cfg.sigmas) + " stderr");
  return r;
}

Report verify_moments(const ConeSpec& spec, const RunConfig& cfg) {
  const AlgebraPtr& alg = spec.alg;
  const Family f = make_family(alg, require_chi(spec, cfg));
  const Element theta = theta_of(spec, cfg);
  OracleTolerances tol;
  tol.fd_rel = cfg.fd_rel;
  const auto rows = verification_oracles(f, theta, cfg.samples, sampler(cfg), tol);
  Report r{"verify-moments",
           {},
           {{"quantity", "closed", "fd", "mc", "stderr", "fd_tol", "mc_sigmas", "pass"}, {}},
           std::nullopt};
  int passed = 0;
  for (const auto& row : rows) {
    r.checks.rows.push_back({row.quantity, num(row.closed), num(row.fd), num(row.mc), num(row.stderr_),
                             num(row.fd_tol), num(row.mc_sigmas), flag(row.pass())});
    passed += row.pass();
  }
  sampler_notes(r, cfg);
  r.notes.push_back(std::to_string(passed) + " of " + std::to_string(rows.size()) + " entries agree");
  return r;
}

Report classify(const ConeSpec& spec, const RunConfig& cfg) {
  if (!cfg.z) throw Error(ErrorCode::SpecError, "classify-orbit needs a point (--z)");
  const Element z = hermitian_from(spec.alg, *cfg.z, 0.0);
  Report r{"classify-orbit", {}, {kCheckColumns, {}}, std::nullopt};
  try {
    const OrbitClassification oc = classify_orbit(z);
    info(r, "psi", psi_text(oc.signature.psi));
    const double err = max_abs_diff(z, orbit_point(oc.factor, oc.signature.psi));
    const double tol = 1e-9 * std::max(1.0, max_abs(z));
    check(r, "reconstruction", 0.0, err, 0.0, tol, err <= tol);
    r.notes.push_back("orbit signature " + psi_text(oc.signature.psi));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInClosure) throw;
    r.checks.rows.push_back({"in_closure", "", "", "", "", "0"});
    r.notes.push_back(e.what());
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

bool Report::pass() const {
  const auto& cols = checks.columns;
  const auto it = std::find(cols.begin(), cols.end(), "pass");
  if (it == cols.end()) return true;
  const std::size_t k = static_cast<std::size_t>(it - cols.begin());
  return std::none_of(checks.rows.begin(), checks.rows.end(), [&](const auto& row) { return row[k] == "0"; });
}

Report run(const std::string& command, const ConeSpec& spec, const RunConfig& cfg) {
  if (command == "describe") return describe(spec);
  if (command == "check-axioms") return check_axioms(spec, cfg);
  if (command == "gindikin") return gindikin(spec, cfg);
  if (command == "gamma") return gamma(spec, cfg);
  if (command == "sample") return sample(spec, cfg);
  if (command == "verify-laplace") return verify_laplace(spec, cfg);
  if (command == "verify-moments") return verify_moments(spec, cfg);
  if (command == "classify-orbit") return classify(spec, cfg);
  throw Error(ErrorCode::SpecError, "unknown command '" + command + "'");
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << csv_field(t.columns[k]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
    os << '\n';
  }
}

void write_summary(std::ostream& os, const Report& r) {
  os << r.command << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& n : r.notes) os << "  " << n << '\n';
  std::vector<std::size_t> width(r.checks.columns.size(), 0);
  for (std::size_t k = 0; k < width.size(); ++k) width[k] = r.checks.columns[k].size();
  for (const auto& row : r.checks.rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  auto line = [&](const std::vector<std::string>& row) {
    os << ' ';
    for (std::size_t k = 0; k < row.size(); ++k) os << ' ' << std::left << std::setw(static_cast<int>(width[k])) << row[k];
    os << '\n';
  };
  line(r.checks.columns);
  for (const auto& row : r.checks.rows) line(row);
}

std::vector<Element> random_dual_points(const AlgebraPtr& alg, int count, std::uint64_t seed) {
  std::mt19937_64 rng = block_rng(seed, std::numeric_limits<std::uint64_t>::max());
  std::vector<Element> out;
  for (int k = 0; k < count; ++k) {
    const Element t = random_lower(alg, rng);
    out.push_back(0.5 * multiply(involute(t), t));
  }
  return out;
}

std::vector<LaplaceCheck> laplace_checks(const Algebra& alg, const Multiplier& chi, const Element& theta,
                                         const std::vector<Element>& points, const DrawSet& draws,
                                         double sigmas) {
  const double base = log_laplace_closed(alg, chi, theta);
  std::vector<LaplaceCheck> out;
  for (const auto& s : points) {
    LaplaceCheck c;
    c.closed = std::exp(log_laplace_closed(alg, chi, theta + s) - base);
    const McEstimate e = mc_laplace(draws, s);
    c.estimate = e.estimate;
    c.stderr_ = e.stderr_;
    c.pass = std::abs(c.estimate - c.closed) <= sigmas * c.stderr_ + 1e-12 * std::max(1.0, std::abs(c.closed));
    out.push_back(c);
  }
  return out;
}

}  // namespace vinberg
