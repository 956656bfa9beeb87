#pragma once

#include <optional>
#include <vector>

#include "vinberg/algebra.hpp"
#include "vinberg/power_gamma.hpp"
#include "vinberg/triangular.hpp"

namespace vinberg {

struct SignatureFamily {
  std::vector<int> anchors;                              // roots, then separators
  std::vector<std::vector<int>> free_slots;              // per anchor, linear-extension order
  std::vector<std::vector<OrbitSignature>> signatures;   // per anchor, counting order over free slots
  std::vector<OrbitSignature> ones;                      // 1_i per anchor
};

// Signatures are listed by binary counting over the free slots, first slot
// most significant, so the all-zero signature comes first.
SignatureFamily enumerate_signatures(const Poset& p);

struct ComponentMatch {
  OrbitSignature signature;
  Multiplier tilde;  // lambda_j - (1 - psi(j)) n_j / 2 on the up-set, 0 elsewhere
};

// The first psi of the anchor's family with chi_i in Xi(i, psi), if any.
// Throws SupportViolation when chi_i is nonzero off the anchor's up-set.
std::optional<ComponentMatch> xi_component_check(const Algebra& alg, int anchor, const Multiplier& chi_i);

struct XiWitness {
  std::vector<int> anchors;
  std::vector<OrbitSignature> signatures;  // per anchor
  std::vector<Multiplier> components;      // per anchor, summing to chi exactly
};

// First feasible tuple of signatures (one per anchor, counting order over the
// concatenated free slots).  Each coordinate j is feasible on its own: with F
// the fixed-slot sum and L the strict-slot sum of n_j over anchors, 2 lambda_j
// must equal F when no slot is strict and exceed F + L otherwise.  The excess
// is split equally over strict slots.
std::optional<XiWitness> xi_membership(const Algebra& alg, const Multiplier& chi);
// Every feasible tuple, in the same order.
std::vector<XiWitness> xi_witnesses(const Algebra& alg, const Multiplier& chi);
// Witness for a prescribed tuple; nullopt when the tuple is infeasible.
std::optional<XiWitness> xi_witness_for(const Algebra& alg, const Multiplier& chi,
                                        const std::vector<OrbitSignature>& tuple);

enum class MeasureClass { NotRiesz, Dirac, Singular, AbsolutelyContinuous };
const char* to_string(MeasureClass c);

struct Classification {
  MeasureClass kind = MeasureClass::NotRiesz;
  bool generates_nef = false;
  std::optional<XiWitness> witness;
};

// AC iff lambda_i > n_{i.}/2 for all i; NEF needs chi in Xi and lambda != 0 on
// roots and separators.
bool is_absolutely_continuous(const Algebra& alg, const Multiplier& chi);
Classification classify_measure(const Algebra& alg, const Multiplier& chi);

// Product of the orbit gammas over the all-ones signatures (components taken
// from the witness for that tuple) against 2^{-|I|} gamma_cone, and the
// per-element sum of the orbit exponents against n_{j.}.  Throws
// NotInXi when the all-ones tuple has no witness, Divergent outside AC.
struct OrbitProductCheck {
  double log_product = 0;
  double log_closed = 0;
  double rel = 0;                     // |product / closed - 1|
  std::vector<int> exponent_sum;      // sum over anchors of n_j^{i, 1_i}
  bool exponents_match = true;
};
OrbitProductCheck orbit_product_check(const Algebra& alg, const Multiplier& chi);

}  // namespace vinberg
