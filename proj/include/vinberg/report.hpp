#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vinberg/cone_spec.hpp"
#include "vinberg/riesz.hpp"

namespace vinberg {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Check tables use the columns quantity,closed,estimate,stderr,tolerance,pass
// (verify-laplace adds z after stderr; verify-moments uses
// quantity,closed,fd,mc,stderr,fd_tol,mc_sigmas,pass).  The
// pass column is "1", "0", or empty for informational rows.
struct Report {
  std::string command;
  std::vector<std::string> notes;
  Table checks;
  std::optional<Table> data;  // sample: one row per draw

  bool pass() const;
};

struct RunConfig {
  std::optional<std::uint64_t> seed;
  int streams = 1;
  std::size_t samples = 100000;
  int points = 10;
  double sigmas = 4.0;
  double fd_rel = 1e-5;
  double axiom_tol = 1e-9;
  int axiom_samples = 200;
  std::optional<Association> chi;
  std::optional<Association> theta;
  std::optional<Association> z;
};

// Commands: describe, check-axioms, gindikin, gamma, sample, verify-laplace,
// verify-moments, classify-orbit.  Throws SpecError for unknown commands or
// missing inputs; library errors propagate.
Report run(const std::string& command, const ConeSpec& spec, const RunConfig& cfg);

void write_csv(std::ostream& os, const Table& t);
void write_summary(std::ostream& os, const Report& r);

// Dual-cone test points s = T* T / 2 for random lower-triangular T, from the
// seed's dedicated point stream.
std::vector<Element> random_dual_points(const AlgebraPtr& alg, int count, std::uint64_t seed);

struct LaplaceCheck {
  double closed = 0;
  double estimate = 0;
  double stderr_ = 0;
  bool pass = true;
};
// E exp(-<s, Z>) over draws at theta against L(theta + s) / L(theta).
std::vector<LaplaceCheck> laplace_checks(const Algebra& alg, const Multiplier& chi, const Element& theta,
                                         const std::vector<Element>& points, const DrawSet& draws,
                                         double sigmas);

}  // namespace vinberg
