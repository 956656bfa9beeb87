// vinberg: command-line driver over the cone library.
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "vinberg/error.hpp"
#include "vinberg/report.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Riesz measures and exponential families on homogeneous cones"};
  app.require_subcommand(1);

  std::string cone_path, chi_text, theta_text, z_text, out_dir, format = "summary";
  vinberg::RunConfig cfg;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--cone", cone_path, "cone spec (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "directory for <command>.csv and <command>.txt");
    sub->add_option("--format", format, "stdout format")->check(CLI::IsMember({"csv", "summary"}));
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "64-bit seed (required)")->required();
    sub->add_option("--samples", cfg.samples, "number of draws")->check(CLI::PositiveNumber);
    sub->add_option("--streams", cfg.streams, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--sigmas", cfg.sigmas, "Monte Carlo tolerance in standard errors");
  };
  auto chi_opt = [&](CLI::App* sub, bool positional) {
    sub->add_option("--chi", chi_text, "multiplier, e.g. 1=1,2=1,3=2,4=1");
    if (positional) sub->add_option("CHI", chi_text, "multiplier (same as --chi)");
  };
  auto theta_opt = [&](CLI::App* sub, bool positional) {
    sub->add_option("--theta", theta_text, "dual-cone point; unlisted diagonal entries are 1");
    if (positional) sub->add_option("THETA", theta_text, "dual-cone point (same as --theta)");
  };

  auto* describe = app.add_subcommand("describe", "dimensions, structure sets, gamma exponents");
  common(describe);

  auto* axioms = app.add_subcommand("check-axioms", "random checks of the algebra axioms");
  common(axioms);
  axioms->add_option("--seed", seed, "seed for the random instances (default 0)");
  axioms->add_option("--axiom-samples", cfg.axiom_samples, "instances per check")->check(CLI::PositiveNumber);
  axioms->add_option("--tol", cfg.axiom_tol, "relative residual tolerance");

  auto* gind = app.add_subcommand("gindikin", "classify a multiplier and print a witness");
  common(gind);
  chi_opt(gind, true);

  auto* gam = app.add_subcommand("gamma", "generalized gamma and the orbit product identity");
  common(gam);
  chi_opt(gam, true);

  auto* samp = app.add_subcommand("sample", "draw from the Riesz measure tilted by theta");
  common(samp);
  sampling(samp);
  chi_opt(samp, true);
  theta_opt(samp, true);

  auto* lap = app.add_subcommand("verify-laplace", "Monte Carlo Laplace transform at random dual points");
  common(lap);
  sampling(lap);
  chi_opt(lap, false);
  theta_opt(lap, false);
  lap->add_option("--points", cfg.points, "number of test points")->check(CLI::PositiveNumber);

  auto* mom = app.add_subcommand("verify-moments", "mean and covariance against FD and Monte Carlo");
  common(mom);
  sampling(mom);
  chi_opt(mom, false);
  theta_opt(mom, false);
  mom->add_option("--fd-rel", cfg.fd_rel, "relative tolerance for finite differences");

  auto* orb = app.add_subcommand("classify-orbit", "orbit signature of a point of the closed cone");
  common(orb);
  orb->add_option("--z", z_text, "point; unlisted diagonal entries are 0");
  orb->add_option("Z", z_text, "point (same as --z)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help is a ParseError with code 0; usage errors share the error status.
    return app.exit(e) == 0 ? 0 : 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    const vinberg::ConeSpec spec = vinberg::load_cone_spec(cone_path);
    if (const auto* opt = sub->get_option_no_throw("--seed"); opt && opt->count() > 0) cfg.seed = seed;
    if (!chi_text.empty()) cfg.chi = vinberg::parse_association(chi_text);
    if (!theta_text.empty()) cfg.theta = vinberg::parse_association(theta_text);
    if (!z_text.empty()) cfg.z = vinberg::parse_association(z_text);

    const vinberg::Report report = vinberg::run(command, spec, cfg);

    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      std::ofstream csv(fs::path(out_dir) / (command + ".csv"));
      vinberg::write_csv(csv, report.checks);
      std::ofstream txt(fs::path(out_dir) / (command + ".txt"));
      vinberg::write_summary(txt, report);
      if (report.data) {
        std::ofstream draws(fs::path(out_dir) / (command + "_draws.csv"));
        vinberg::write_csv(draws, *report.data);
      }
    }
    if (format == "csv") vinberg::write_csv(std::cout, report.data ? *report.data : report.checks);
    else vinberg::write_summary(std::cout, report);
    return report.pass() ? 0 : 1;
  } catch (const vinberg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
