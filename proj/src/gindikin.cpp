#include "vinberg/gindikin.hpp"

#include <algorithm>
#include <cmath>

#include "vinberg/error.hpp"

namespace vinberg {

SignatureFamily enumerate_signatures(const Poset& p) {
  const StructureSets s = structure_sets(p);
  SignatureFamily fam;
  fam.anchors = s.anchors();
  for (int i : fam.anchors) {
    std::vector<int> slots;
    for (int j : p.linear_extension())
      if (p.leq(i, j) && !(s.is_root[i] && s.is_separator[j])) slots.push_back(j);
    std::vector<OrbitSignature> sigs;
    const std::size_t count = std::size_t{1} << slots.size();
    for (std::size_t code = 0; code < count; ++code) {
      OrbitSignature sig{i, std::vector<int>(p.size(), 0)};
      for (std::size_t b = 0; b < slots.size(); ++b)
        if ((code >> (slots.size() - 1 - b)) & 1u) sig.psi[slots[b]] = 1;
      sigs.push_back(std::move(sig));
    }
    fam.ones.push_back(ones_signature(p, i));
    fam.free_slots.push_back(std::move(slots));
    fam.signatures.push_back(std::move(sigs));
  }
  return fam;
}

std::optional<ComponentMatch> xi_component_check(const Algebra& alg, int anchor, const Multiplier& chi_i) {
  const Poset& p = alg.poset();
  if (static_cast<int>(chi_i.size()) != p.size())
    throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  for (int j = 0; j < p.size(); ++j)
    if (!p.leq(anchor, j) && chi_i[j] != 0.0)
      throw Error(ErrorCode::SupportViolation, "component multiplier is nonzero off the anchor's up-set");
  const SignatureFamily fam = enumerate_signatures(p);
  const auto it = std::find(fam.anchors.begin(), fam.anchors.end(), anchor);
  if (it == fam.anchors.end())
    throw Error(ErrorCode::SupportViolation, "'" + p.label(anchor) + "' is neither a root nor a separator");
  const auto& sigs = fam.signatures[it - fam.anchors.begin()];
  for (const auto& sig : sigs) {
    const ExponentProfile e = n_profile(anchor, sig.psi, p, alg.dims());
    bool ok = true;
    for (int j = 0; j < p.size() && ok; ++j) {
      if (!p.leq(anchor, j)) continue;
      const double twice = 2.0 * chi_i[j];
      ok = sig.psi[j] ? twice > e.n[j] : twice == e.n[j];
    }
    if (!ok) continue;
    ComponentMatch m{sig, Multiplier(p.size(), 0.0)};
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(anchor, j)) m.tilde[j] = chi_i[j] - (1 - sig.psi[j]) * 0.5 * e.n[j];
    return m;
  }
  return std::nullopt;
}

std::optional<XiWitness> xi_witness_for(const Algebra& alg, const Multiplier& chi,
                                        const std::vector<OrbitSignature>& tuple) {
  const Poset& p = alg.poset();
  const int n = p.size();
  if (static_cast<int>(chi.size()) != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  const std::size_t na = tuple.size();
  std::vector<ExponentProfile> prof;
  prof.reserve(na);
  for (const auto& sig : tuple) prof.push_back(n_profile(sig.anchor, sig.psi, p, alg.dims()));

  XiWitness w;
  for (const auto& sig : tuple) {
    w.anchors.push_back(sig.anchor);
    w.signatures.push_back(sig);
    w.components.emplace_back(n, 0.0);
  }
  for (int j = 0; j < n; ++j) {
    int fixed = 0, strict_sum = 0;
    std::vector<std::size_t> strict;
    for (std::size_t a = 0; a < na; ++a) {
      if (!p.leq(tuple[a].anchor, j)) continue;
      if (tuple[a].psi[j]) {
        strict.push_back(a);
        strict_sum += prof[a].n[j];
      } else {
        fixed += prof[a].n[j];
      }
    }
    const double twice = 2.0 * chi[j];
    if (strict.empty()) {
      if (twice != fixed) return std::nullopt;
    } else if (!(twice > fixed + strict_sum)) {
      return std::nullopt;
    }
    for (std::size_t a = 0; a < na; ++a)
      if (p.leq(tuple[a].anchor, j) && !tuple[a].psi[j]) w.components[a][j] = 0.5 * prof[a].n[j];
    if (strict.empty()) continue;
    const double excess = chi[j] - 0.5 * (fixed + strict_sum);
    const double share = excess / static_cast<double>(strict.size());
    for (std::size_t a : strict) w.components[a][j] = 0.5 * prof[a].n[j] + share;
    // Nudge the last strict slot until the sum in anchor order is exact.
    const std::size_t last = strict.back();
    for (int round = 0; round < 8; ++round) {
      double total = 0;
      for (std::size_t a = 0; a < na; ++a) total += w.components[a][j];
      if (total == chi[j]) break;
      w.components[last][j] += chi[j] - total;
    }
  }
  return w;
}

namespace {

template <class Visit>
void for_each_tuple(const SignatureFamily& fam, Visit&& visit) {
  std::vector<std::size_t> idx(fam.anchors.size(), 0);
  while (true) {
    std::vector<OrbitSignature> tuple;
    for (std::size_t a = 0; a < idx.size(); ++a) tuple.push_back(fam.signatures[a][idx[a]]);
    if (!visit(tuple)) return;
    // Odometer with the last anchor varying fastest.
    std::size_t a = idx.size();
    while (a > 0) {
      --a;
      if (++idx[a] < fam.signatures[a].size()) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (idx.empty()) return;
  }
}

}  // namespace

std::optional<XiWitness> xi_membership(const Algebra& alg, const Multiplier& chi) {
  const SignatureFamily fam = enumerate_signatures(alg.poset());
  std::optional<XiWitness> found;
  for_each_tuple(fam, [&](const std::vector<OrbitSignature>& tuple) {
    found = xi_witness_for(alg, chi, tuple);
    return !found.has_value();
  });
  return found;
}

std::vector<XiWitness> xi_witnesses(const Algebra& alg, const Multiplier& chi) {
  const SignatureFamily fam = enumerate_signatures(alg.poset());
  std::vector<XiWitness> out;
  for_each_tuple(fam, [&](const std::vector<OrbitSignature>& tuple) {
    if (auto w = xi_witness_for(alg, chi, tuple)) out.push_back(std::move(*w));
    return true;
  });
  return out;
}

const char* to_string(MeasureClass c) {
  switch (c) {
    case MeasureClass::NotRiesz: return "not a Riesz measure";
    case MeasureClass::Dirac: return "Dirac";
    case MeasureClass::Singular: return "singular";
    case MeasureClass::AbsolutelyContinuous: return "absolutely continuous";
  }
  return "unknown";
}

bool is_absolutely_continuous(const Algebra& alg, const Multiplier& chi) {
  for (int i = 0; i < alg.size(); ++i)
    if (!(2.0 * chi[i] > alg.dims().n_below[i])) return false;
  return true;
}

Classification classify_measure(const Algebra& alg, const Multiplier& chi) {
  if (static_cast<int>(chi.size()) != alg.size())
    throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from |I|");
  Classification c;
  c.witness = xi_membership(alg, chi);
  if (!c.witness) return c;
  const bool all_zero = std::all_of(chi.begin(), chi.end(), [](double v) { return v == 0.0; });
  if (all_zero) c.kind = MeasureClass::Dirac;
  else if (is_absolutely_continuous(alg, chi)) c.kind = MeasureClass::AbsolutelyContinuous;
  else c.kind = MeasureClass::Singular;
  const StructureSets s = structure_sets(alg.poset());
  c.generates_nef = true;
  for (int i : s.anchors())
    if (chi[i] == 0.0) c.generates_nef = false;
  return c;
}

OrbitProductCheck orbit_product_check(const Algebra& alg, const Multiplier& chi) {
  const Poset& p = alg.poset();
  const SignatureFamily fam = enumerate_signatures(p);
  const auto w = xi_witness_for(alg, chi, fam.ones);
  if (!w) throw Error(ErrorCode::NotInXi, "the all-ones signature tuple has no witness for this multiplier");
  OrbitProductCheck r;
  r.exponent_sum.assign(p.size(), 0);
  for (std::size_t k = 0; k < fam.anchors.size(); ++k) {
    r.log_product += log_gamma_orbit(alg, fam.ones[k], w->components[k]);
    const ExponentProfile e = n_profile(fam.anchors[k], fam.ones[k].psi, p, alg.dims());
    for (int j = 0; j < p.size(); ++j) r.exponent_sum[j] += e.n[j];
  }
  r.log_closed = log_gamma_cone(alg, chi) - p.size() * std::log(2.0);
  r.rel = std::abs(std::expm1(r.log_product - r.log_closed));
  for (int j = 0; j < p.size(); ++j)
    if (r.exponent_sum[j] != alg.dims().n_below[j]) r.exponents_match = false;
  return r;
}

}  // namespace vinberg
