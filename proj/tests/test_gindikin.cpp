#include "doctest.h"
#include "oracles/gindikin_brute.hpp"
#include "oracles/posets.hpp"
#include "vinberg/error.hpp"
#include "vinberg/gindikin.hpp"

using namespace vinberg;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::CheckFailed;
}

void check_witness(const Algebra& alg, const Multiplier& chi, const XiWitness& w) {
  for (int j = 0; j < alg.size(); ++j) {
    double total = 0;
    for (const auto& c : w.components) total += c[j];
    CHECK(total == chi[j]);
  }
  for (std::size_t a = 0; a < w.anchors.size(); ++a) {
    const auto m = xi_component_check(alg, w.anchors[a], w.components[a]);
    REQUIRE(m.has_value());
    CHECK(m->signature.psi == w.signatures[a].psi);
  }
}

// Every lambda in {0, step, ..., 3}^I.
std::vector<Multiplier> grid(int n, double step) {
  std::vector<Multiplier> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Multiplier> next;
    for (const auto& m : out)
      for (double v = 0; v <= 3.0 + 1e-12; v += step) {
        Multiplier e = m;
        e.push_back(v);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("signature families") {
  const SignatureFamily f = enumerate_signatures(oracle::p4());
  CHECK(f.anchors == std::vector<int>{0, 1, 2});
  CHECK(f.free_slots[0] == std::vector<int>{0, 3});
  CHECK(f.signatures[0].size() == 4);
  CHECK(f.signatures[1].size() == 2);
  CHECK(f.signatures[2].size() == 2);
  CHECK(f.signatures[0].front().psi == std::vector<int>{0, 0, 0, 0});
  CHECK(f.signatures[0].back().psi == std::vector<int>{1, 0, 0, 1});
  CHECK(f.signatures[0][1].psi == std::vector<int>{0, 0, 0, 1});
  CHECK(f.ones[2].psi == std::vector<int>{0, 0, 1, 0});
  for (std::size_t a = 0; a < f.anchors.size(); ++a)
    for (const auto& s : f.signatures[a]) {
      CHECK(s.anchor == f.anchors[a]);
      CHECK(s.psi[2] * (a < 2) == 0);
    }

  const SignatureFamily one = enumerate_signatures(oracle::chain(1));
  REQUIRE(one.signatures.size() == 1);
  CHECK(one.signatures[0].size() == 2);
}

TEST_CASE("single-anchor components") {
  const auto alg = build_scalar_algebra(oracle::p4());
  const auto z = xi_component_check(*alg, 0, {0, 0, 0, 0});
  REQUIRE(z);
  CHECK(z->signature.psi == std::vector<int>{0, 0, 0, 0});

  const auto s3 = xi_component_check(*alg, 2, {0, 0, 1.5, 0});
  REQUIRE(s3);
  CHECK(s3->signature.psi == std::vector<int>{0, 0, 1, 0});
  CHECK(s3->tilde == Multiplier{0, 0, 1.5, 0});

  // psi(4) = 1 needs lambda_4 above 1/2, psi(4) = 0 needs exactly 1/2.
  CHECK_FALSE(xi_component_check(*alg, 0, {1, 0, 0.5, 0.4}));
  const auto ok = xi_component_check(*alg, 0, {1, 0, 0.5, 0.6});
  REQUIRE(ok);
  CHECK(ok->signature.psi == std::vector<int>{1, 0, 0, 1});
  CHECK(ok->tilde == Multiplier{1, 0, 0, 0.6});
  const auto half = xi_component_check(*alg, 0, {1, 0, 0.5, 0.5});
  REQUIRE(half);
  CHECK(half->signature.psi == std::vector<int>{1, 0, 0, 0});
  CHECK(half->tilde == Multiplier{1, 0, 0, 0});

  CHECK(code_of([&] { xi_component_check(*alg, 0, {1, 1, 0, 0}); }) == ErrorCode::SupportViolation);
  CHECK(code_of([&] { xi_component_check(*alg, 3, {0, 0, 0, 1}); }) == ErrorCode::SupportViolation);
}

TEST_CASE("membership witnesses") {
  const auto alg = build_scalar_algebra(oracle::p4());
  const auto ac = xi_membership(*alg, {1, 1, 2, 1});
  REQUIRE(ac);
  const SignatureFamily f = enumerate_signatures(alg->poset());
  for (std::size_t a = 0; a < 3; ++a) CHECK(ac->signatures[a].psi == f.ones[a].psi);
  check_witness(*alg, {1, 1, 2, 1}, *ac);

  const auto dirac = xi_membership(*alg, {0, 0, 0, 0});
  REQUIRE(dirac);
  for (const auto& s : dirac->signatures) CHECK(s.weight() == 0);

  const auto sing = xi_membership(*alg, {0, 0, 1.5, 0});
  REQUIRE(sing);
  CHECK(sing->components[0] == Multiplier{0, 0, 0, 0});
  CHECK(sing->components[1] == Multiplier{0, 0, 0, 0});
  CHECK(sing->components[2] == Multiplier{0, 0, 1.5, 0});

  CHECK_FALSE(xi_membership(*alg, {1, 0, 0, 0.3}));
  CHECK_FALSE(xi_membership(*alg, {-1, 0, 0, 0}));

  // Witnesses for a prescribed tuple.
  const std::vector<OrbitSignature> ones = f.ones;
  CHECK(xi_witness_for(*alg, {1, 1, 2, 1}, ones));
  CHECK_FALSE(xi_witness_for(*alg, {0, 0, 1.5, 0}, ones));
}

TEST_CASE("every witness reassembles the multiplier") {
  for (const Poset& p : {oracle::p4(), oracle::chain(3), oracle::tree()}) {
    const auto alg = build_scalar_algebra(p);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> quarter(0, 12);
    for (int k = 0; k < 300; ++k) {
      Multiplier chi(p.size());
      for (double& v : chi) v = 0.25 * quarter(rng);
      // A non-dyadic excess exercises the exact-sum adjustment.
      chi[p.size() - 1] += 0.1;
      for (const XiWitness& w : xi_witnesses(*alg, chi)) check_witness(*alg, chi, w);
    }
  }
}

TEST_CASE("absolutely continuous multipliers are in the set") {
  for (const Poset& p : {oracle::p4(), oracle::chain(4), oracle::tree(), oracle::y_poset()}) {
    const auto alg = build_scalar_algebra(p);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.01, 2.0);
    for (int k = 0; k < 100; ++k) {
      Multiplier chi(p.size());
      for (int i = 0; i < p.size(); ++i) chi[i] = 0.5 * alg->dims().n_below[i] + u(rng);
      REQUIRE(is_absolutely_continuous(*alg, chi));
      const auto w = xi_membership(*alg, chi);
      REQUIRE(w);
      check_witness(*alg, chi, *w);
    }
  }
}

TEST_CASE("classification") {
  const auto alg = build_scalar_algebra(oracle::p4());
  Classification c = classify_measure(*alg, {1, 1, 2, 1});
  CHECK(c.kind == MeasureClass::AbsolutelyContinuous);
  CHECK(c.generates_nef);
  c = classify_measure(*alg, {0, 0, 1.5, 0});
  CHECK(c.kind == MeasureClass::Singular);
  CHECK_FALSE(c.generates_nef);
  c = classify_measure(*alg, {0, 0, 0, 0});
  CHECK(c.kind == MeasureClass::Dirac);
  CHECK_FALSE(c.generates_nef);
  c = classify_measure(*alg, {1, 0, 0, 0.3});
  CHECK(c.kind == MeasureClass::NotRiesz);
  CHECK_FALSE(c.witness);
  // Singular but with every anchor coordinate nonzero.
  c = classify_measure(*alg, {1, 1, 1.5, 0.5});
  CHECK(c.kind == MeasureClass::Singular);
  CHECK(c.generates_nef);
  CHECK(code_of([&] { classify_measure(*alg, {1, 1}); }) == ErrorCode::DimensionMismatch);
  CHECK(std::string(to_string(MeasureClass::AbsolutelyContinuous)) == "absolutely continuous");
}

TEST_CASE("membership agrees with the exhaustive split search") {
  // The half-step grid here; the acceptance run covers quarter steps.
  for (const Poset& p : {oracle::chain(2), oracle::chain(3), oracle::p4()}) {
    const auto alg = build_scalar_algebra(p);
    for (const Multiplier& chi : grid(p.size(), 0.5)) {
      const bool fast = xi_membership(*alg, chi).has_value();
      REQUIRE_MESSAGE(fast == oracle::brute_in_xi(p, chi), "poset size ", p.size());
    }
  }
}
