// gup: experiment runner for the minimal-length (GUP) numerics library.
// Every subcommand writes a deterministic results table (CSV or JSON) plus a
// manifest echoing the resolved configuration; see README for the schemas.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "experiments.hpp"

namespace {

// "-20..20" -> (-20, 20)
bool parse_index_range(const std::string& text, int& lo, int& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gup::cli;

  CLI::App app{"minimal-length GUP numerics experiments"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--beta", common.beta, "deformation parameter (inverse momentum squared)")
      ->capture_default_str();
  app.add_option("--hbar", common.hbar, "reduced Planck constant")->capture_default_str();
  app.add_option("--rel-tol", common.rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--abs-tol", common.abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  app.add_option("--max-subdiv", common.max_subdivisions, "quadrature panel budget")
      ->capture_default_str();
  app.add_option("--out-dir", common.out_dir, "output directory")
      ->envname("GUP_OUT_DIR")
      ->capture_default_str();
  app.add_option("--format", common.format, "table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // gram
  GramOptions gram;
  std::string gram_range;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a lattice family");
  gram_cmd->add_option("--family", gram.family, "sym-eigen | kmm-eigen | maxloc")
      ->capture_default_str();
  gram_cmd->add_option("--measure", gram.measure, "standard | kmm")->capture_default_str();
  gram_cmd->add_option("--eps", gram.eps, "lattice offset in [-1, 1]")->capture_default_str();
  gram_cmd->add_option("--n", gram_range, "index window, e.g. -20..20");

  // parseval
  ParsevalOptions parseval;
  auto* parseval_cmd = app.add_subcommand("parseval", "eigenbasis completeness sums S_N");
  parseval_cmd->add_option("--eps", parseval.eps, "target lattice offset")
      ->capture_default_str();
  parseval_cmd->add_option("--n-list", parseval.truncations, "truncations to evaluate")
      ->delimiter(',');

  // ml-overlaps
  MlOverlapsOptions ml;
  auto* ml_cmd =
      app.add_subcommand("ml-overlaps", "maximally-localized overlaps: closed forms vs quadrature");
  ml_cmd->add_option("--m-max", ml.lattice_m_max, "lattice separations |m| <= m-max")
      ->capture_default_str();

  // profiles
  ProfilesOptions profiles;
  auto* profiles_cmd =
      app.add_subcommand("profiles", "position-space amplitudes vs closed forms");
  profiles_cmd->add_option("--state", profiles.state, "sym-eigen | maxloc")
      ->capture_default_str();
  profiles_cmd->add_option("--xi", profiles.xi, "state center in units of hbar*sqrt(beta)")
      ->capture_default_str();
  profiles_cmd->add_option("--mode", profiles.mode, "exact | linearized | both")
      ->capture_default_str();
  double x_min = 0.0, x_max = 0.0;
  auto* xmin_opt = profiles_cmd->add_option("--x-min", x_min, "left end of the x grid");
  auto* xmax_opt = profiles_cmd->add_option("--x-max", x_max, "right end of the x grid");
  profiles_cmd->add_option("--x-count", profiles.x_count, "grid size")->capture_default_str();

  // gup
  GupCheckOptions gupopt;
  auto* gup_cmd = app.add_subcommand("gup", "uncertainty reports and the GUP bound");
  gup_cmd->add_option("--state", gupopt.state, "maxloc | gaussian")->capture_default_str();
  gup_cmd->add_option("--xi", gupopt.xi, "maxloc center in units of hbar*sqrt(beta)")
      ->capture_default_str();
  gup_cmd->add_option("--sigma-list", gupopt.sigmas, "gaussian widths in units of 1/sqrt(beta)")
      ->delimiter(',');

  // symmetry
  auto* symmetry_cmd =
      app.add_subcommand("symmetry", "symmetry defects across operator/measure/pair corpus");

  // vacuum
  VacuumOptions vacuum;
  auto* vacuum_cmd = app.add_subcommand("vacuum", "vacuum energy density and divergence scan");
  vacuum_cmd->add_option("--mass", vacuum.mass, "field mass (momentum units)")
      ->capture_default_str();
  vacuum_cmd->add_flag_callback("--modified", [&vacuum] { vacuum.which = "modified"; },
                                "GUP-regularized density only");
  vacuum_cmd->add_flag_callback("--unmodified", [&vacuum] { vacuum.which = "unmodified"; },
                                "cutoff density and divergence scan only (needs --cutoff)");
  double vac_cutoff = 0.0;
  auto* vac_cut_opt =
      vacuum_cmd->add_option("--cutoff", vac_cutoff, "extra truncated-density rows at this cutoff");
  vacuum_cmd->add_option("--cutoff-list", vacuum.scan_cutoffs, "divergence-scan cutoffs")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    gup::cli::emit_error_json("config", e.what());
    return kExitConfig;
  }

  if (!gram_range.empty() && !parse_index_range(gram_range, gram.n_min, gram.n_max)) {
    emit_error_json("config", "gram: --n expects the form A..B, e.g. -20..20");
    return kExitConfig;
  }
  if (*xmin_opt) profiles.x_min = x_min;
  if (*xmax_opt) profiles.x_max = x_max;
  if (*vac_cut_opt) vacuum.cutoff = vac_cutoff;

  try {
    if (gram_cmd->parsed()) return run_gram(common, gram);
    if (parseval_cmd->parsed()) return run_parseval(common, parseval);
    if (ml_cmd->parsed()) return run_ml_overlaps(common, ml);
    if (profiles_cmd->parsed()) return run_profiles(common, profiles);
    if (gup_cmd->parsed()) return run_gup_check(common, gupopt);
    if (symmetry_cmd->parsed()) return run_symmetry(common);
    if (vacuum_cmd->parsed()) return run_vacuum(common, vacuum);
  } catch (const std::exception& e) {
    emit_error_json("numerical", e.what());
    return kExitNumerical;
  }
  emit_error_json("config", "no experiment selected");
  return kExitConfig;
}
