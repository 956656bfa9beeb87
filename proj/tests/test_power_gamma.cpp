#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles/posets.hpp"
#include "oracles/quadrature.hpp"
#include "vinberg/error.hpp"
#include "vinberg/gindikin.hpp"
#include "vinberg/power_gamma.hpp"

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

Element cone_from(const Element& t) { return multiply(t, involute(t)); }

}  // namespace

TEST_CASE("minors on the four-element example are monomials in the pivots") {
  const auto alg = build_scalar_algebra(oracle::p4());
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const Element t = random_lower(alg, rng);
    const MinorTable m = minors(cone_from(t));
    auto sq = [&](int i) { return t.diag(i) * t.diag(i); };
    CHECK(m.large[0] == doctest::Approx(sq(0)).epsilon(1e-13));
    CHECK(m.large[1] == doctest::Approx(sq(1)).epsilon(1e-13));
    CHECK(m.large[2] == doctest::Approx(sq(0) * sq(1) * sq(2)).epsilon(1e-13));
    CHECK(m.large[3] == doctest::Approx(sq(0) * sq(3)).epsilon(1e-13));
    CHECK(m.strict[0] == 1.0);
    CHECK(m.strict[2] == doctest::Approx(sq(0) * sq(1)).epsilon(1e-13));
    for (int i = 0; i < 4; ++i) CHECK(m.large[i] == doctest::Approx(m.strict[i] * sq(i)).epsilon(1e-13));
    CHECK(m.det == doctest::Approx(sq(0) * sq(1) * sq(2) * sq(3)).epsilon(1e-13));
    CHECK(gen_power(cone_from(t), {1, 1, 1, 1}) ==
          doctest::Approx(sq(0) * sq(1) * sq(2) * sq(3)).epsilon(1e-12));
  }
  const MinorTable e = minors(unit(alg));
  for (int i = 0; i < 4; ++i) CHECK(e.large[i] == 1.0);
}

TEST_CASE("minors of the hand-factored chain element") {
  const auto alg = build_scalar_algebra(oracle::chain(2));
  Element x(alg);
  x.diag(0) = 4;
  x.block(1, 0)[0] = x.block(0, 1)[0] = 2;
  x.diag(1) = 2;
  const MinorTable m = minors(x);
  CHECK(m.large[0] == doctest::Approx(4));
  CHECK(m.large[1] == doctest::Approx(4));
  CHECK(m.strict[1] == doctest::Approx(4));
  CHECK(m.det == doctest::Approx(4));
}

TEST_CASE("generalized power identities") {
  const auto alg = build_scalar_algebra(oracle::p4());
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int k = 0; k < 50; ++k) {
    const Element x = cone_from(random_lower(alg, rng));
    const Multiplier a{g(rng), g(rng), g(rng), g(rng)}, b{g(rng), g(rng), g(rng), g(rng)};
    CHECK(gen_power(x, {0, 0, 0, 0}) == 1.0);
    CHECK(gen_power(x, add(a, b)) == doctest::Approx(gen_power(x, a) * gen_power(x, b)).epsilon(1e-10));
    const double lam = g(rng);
    CHECK(gen_power(x, {lam, lam, lam, lam}) == doctest::Approx(std::pow(minors(x).det, lam)).epsilon(1e-10));

    const Element t = random_lower(alg, rng);
    CHECK(gen_power(group_act(t, x), a) == doctest::Approx(gen_power(cone_from(t), a) * gen_power(x, a)).epsilon(1e-9));

    // Restricting the scope to an up-set drops the other pivots.
    const LowerTriangular f = cholesky(x);
    const double want = std::pow(f.diag(0), 2 * a[0]) * std::pow(f.diag(3), 2 * a[3]);
    CHECK(gen_power(x, a, PowerScope::upset(0)) == doctest::Approx(want * std::pow(f.diag(2), 2 * a[2])).epsilon(1e-10));
    CHECK(gen_power(x, a, PowerScope::upset(3)) == doctest::Approx(std::pow(f.diag(3), 2 * a[3])).epsilon(1e-10));
  }
  CHECK(shift_multiplier(alg->dims()) == Multiplier{-2, -1.5, -2, -1.5});
}

TEST_CASE("orbit-restricted power") {
  const auto alg = build_scalar_algebra(oracle::p4());
  std::mt19937_64 rng(3);
  const Element t = random_lower(alg, rng);
  const OrbitSignature sig{0, {1, 0, 0, 1}};
  const double v = gen_power_orbit(t, sig, {1.5, 0, 0, 0.7});
  CHECK(v == doctest::Approx(std::pow(t.diag(0), 3.0) * std::pow(t.diag(3), 1.4)).epsilon(1e-12));
  // Elements off the anchor's up-set are ignored.
  CHECK(gen_power_orbit(t, sig, {1.5, 9, 0, 0.7}) == doctest::Approx(v));
  CHECK(code_of([&] { gen_power_orbit(t, sig, {1.5, 0, 0.5, 0.7}); }) == ErrorCode::MultiplierOutsideXpsi);
  CHECK(code_of([&] { gen_power(unit(alg), {1, 1, 1}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("exponent profiles") {
  const Poset p = oracle::p4();
  const auto alg = build_scalar_algebra(p);
  const ExponentProfile all = n_profile(-1, {1, 1, 1, 1}, p, alg->dims());
  CHECK(all.n == std::vector<int>{0, 0, 2, 1});
  CHECK(all.total == 3);
  CHECK(all.weight == 4);
  const ExponentProfile none = n_profile(-1, {0, 0, 0, 0}, p, alg->dims());
  CHECK(none.n == std::vector<int>{0, 0, 0, 0});
  const ExponentProfile r = n_profile(0, {1, 0, 0, 1}, p, alg->dims());
  CHECK(r.n[3] == 1);
  CHECK(r.n[0] == 0);
  CHECK(r.n[1] == 0);
}

TEST_CASE("exponents of the all-ones signatures add up to the lower counts") {
  for (const Poset& p : {oracle::p4(), oracle::chain(2), oracle::chain(3), oracle::tree(), oracle::antichain(3)}) {
    const auto alg = build_scalar_algebra(p);
    std::vector<int> sum(p.size(), 0);
    for (int i : structure_sets(p).anchors()) {
      const OrbitSignature s = ones_signature(p, i);
      const ExponentProfile e = n_profile(i, s.psi, p, alg->dims());
      for (int j = 0; j < p.size(); ++j) sum[j] += e.n[j];
    }
    CHECK(sum == alg->dims().n_below);
  }
}

TEST_CASE("orbit gammas against quadrature") {
  const auto one = build_scalar_algebra(oracle::chain(1));
  for (double lam : {0.3, 1.0, 2.7}) {
    const double g = gamma_orbit(*one, {0, {1}}, {lam});
    CHECK(g == doctest::Approx(std::tgamma(lam) / 2).epsilon(1e-13));
    CHECK(g == doctest::Approx(oracle::orbit_gamma_point(lam)).epsilon(1e-9));
  }
  CHECK(gamma_orbit(*one, {0, {0}}, {0.0}) == 1.0);

  const auto c2 = build_scalar_algebra(oracle::chain(2));
  for (auto [a, b] : {std::pair{1.0, 1.0}, {0.7, 2.2}, {2.5, 0.8}}) {
    const double g = gamma_orbit(*c2, {0, {1, 1}}, {a, b});
    CHECK(g == doctest::Approx(0.25 * std::sqrt(std::numbers::pi) * std::tgamma(a) * std::tgamma(b - 0.5)).epsilon(1e-12));
    CHECK(g == doctest::Approx(oracle::orbit_gamma_chain2(a, b)).epsilon(1e-8));
  }
  CHECK(code_of([&] { gamma_orbit(*c2, {0, {1, 1}}, {1.0, 0.5}); }) == ErrorCode::Divergent);
  CHECK(code_of([&] { gamma_orbit(*c2, {1, {1, 1}}, {1.0, 1.0}); }) == ErrorCode::SupportViolation);
}

TEST_CASE("cone gammas against quadrature") {
  const auto one = build_scalar_algebra(oracle::chain(1));
  CHECK(gamma_cone(*one, {2.5}) == doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
  CHECK(gamma_cone(*one, {2.5}) == doctest::Approx(oracle::cone_gamma_point(2.5)).epsilon(1e-9));

  const auto c2 = build_scalar_algebra(oracle::chain(2));
  for (auto [a, b] : {std::pair{1.0, 1.0}, {0.6, 2.5}, {2.0, 2.0}}) {
    const double g = gamma_cone(*c2, {a, b});
    CHECK(g == doctest::Approx(std::sqrt(std::numbers::pi) * std::tgamma(a) * std::tgamma(b - 0.5)).epsilon(1e-12));
    CHECK(g == doctest::Approx(oracle::cone_gamma_chain2(a, b)).epsilon(1e-8));
  }
  // Equal multipliers give Siegel's Gamma_2(a) = pi^{1/2} Gamma(a) Gamma(a - 1/2).
  CHECK(gamma_cone(*c2, {3.0, 3.0}) ==
        doctest::Approx(std::sqrt(std::numbers::pi) * std::tgamma(3.0) * std::tgamma(2.5)).epsilon(1e-12));

  const auto p4 = build_scalar_algebra(oracle::p4());
  const Multiplier l{1.2, 0.9, 2.3, 1.1};
  CHECK(gamma_cone(*p4, l) == doctest::Approx(std::pow(std::numbers::pi, 1.5) * std::tgamma(1.2) * std::tgamma(0.9) *
                                              std::tgamma(1.3) * std::tgamma(0.6))
                                  .epsilon(1e-12));
  CHECK(code_of([&] { gamma_cone(*p4, {1, 1, 1, 1}); }) == ErrorCode::Divergent);
  CHECK(log_gamma_cone(*p4, {400, 400, 400, 400}) > 709);
  CHECK(code_of([&] { gamma_cone(*p4, {400, 400, 400, 400}); }) == ErrorCode::Divergent);
}

TEST_CASE("orbit gammas multiply to the cone gamma") {
  struct Case {
    Poset p;
    Multiplier chi;
  };
  for (const Case& c : {Case{oracle::p4(), {1.5, 1.2, 2.6, 1.4}}, Case{oracle::chain(1), {0.8}},
                        Case{oracle::chain(2), {1.1, 1.7}}, Case{oracle::chain(3), {1.3, 2.1, 3.2}}}) {
    const auto alg = build_scalar_algebra(c.p);
    const OrbitProductCheck o = orbit_product_check(*alg, c.chi);
    CHECK(o.rel <= 1e-12);
    CHECK(o.exponents_match);
  }
  // On the four-chain the exponents still add up, but element 4 is live in two
  // separator signatures and contributes two gamma factors: the identity fails.
  const auto c4 = build_scalar_algebra(oracle::chain(4));
  const OrbitProductCheck o = orbit_product_check(*c4, {1.5, 2.0, 3.0, 4.0});
  CHECK(o.exponents_match);
  CHECK(o.rel > 1e-3);
}
