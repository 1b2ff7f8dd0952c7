#include "experiments.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "gup/eigenbasis.hpp"
#include "gup/fourier.hpp"
#include "gup/maxloc.hpp"
#include "gup/operators.hpp"
#include "gup/quadrature.hpp"
#include "gup/vacuum.hpp"
#include "table.hpp"

namespace gup::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

struct Context {
  ModelParams params;
  QuadratureConfig cfg;
};

Context make_context(const CommonOptions& common) {
  Context ctx;
  ctx.params = ModelParams{common.beta, common.hbar};
  ctx.params.validate();
  ctx.cfg.rel_tol = common.rel_tol;
  ctx.cfg.abs_tol = common.abs_tol;
  ctx.cfg.max_subdivisions = common.max_subdivisions;
  ctx.cfg.validate();
  return ctx;
}

json common_json(const CommonOptions& common) {
  return json{{"beta", common.beta},
              {"hbar", common.hbar},
              {"rel_tol", common.rel_tol},
              {"abs_tol", common.abs_tol},
              {"max_subdivisions", common.max_subdivisions},
              {"out_dir", common.out_dir},
              {"format", common.format}};
}

// writes the results table and its manifest; returns the table file name
void write_outputs(const CommonOptions& common, const std::string& experiment,
                   const json& config, Table& table) {
  // hash the computation parameters only; where results land is not one
  json hashed = config;
  hashed.erase("out_dir");
  const std::string hash = "fnv1a64:" + std::to_string(fnv1a64(hashed.dump()));
  table.add_metadata("tool", std::string("gup ") + kToolVersion);
  table.add_metadata("experiment", experiment);
  table.add_metadata("config_hash", hash);

  std::filesystem::create_directories(common.out_dir);
  const std::string ext = (common.format == "json") ? ".json" : ".csv";
  const std::string table_name = experiment + ext;
  const auto table_path = std::filesystem::path(common.out_dir) / table_name;
  {
    std::ofstream out(table_path);
    if (!out) throw std::runtime_error("cannot write " + table_path.string());
    if (common.format == "json") {
      out << table.to_json().dump(2) << "\n";
    } else {
      out << table.to_csv();
    }
  }

  json manifest{{"tool", "gup"},
                {"version", kToolVersion},
                {"experiment", experiment},
                {"config", config},
                {"config_hash", hash},
                {"outputs", json::array({table_name})},
                {"columns", table.columns()},
                {"rows", table.row_count()}};
  const auto manifest_path =
      std::filesystem::path(common.out_dir) / (experiment + "_manifest.json");
  std::ofstream mout(manifest_path);
  if (!mout) throw std::runtime_error("cannot write " + manifest_path.string());
  mout << manifest.dump(2) << "\n";
}

StateFamily parse_family(const std::string& name) {
  if (name == "sym-eigen") return StateFamily::SymEigen;
  if (name == "kmm-eigen") return StateFamily::KmmEigen;
  if (name == "maxloc") return StateFamily::MaxLoc;
  throw std::invalid_argument("unknown family '" + name + "' (sym-eigen|kmm-eigen|maxloc)");
}

Measure parse_measure(const std::string& name) {
  if (name == "standard") return Measure::Standard;
  if (name == "kmm") return Measure::KMM;
  throw std::invalid_argument("unknown measure '" + name + "' (standard|kmm)");
}

// even/odd defect corpus shared by `symmetry` and the docs
StateSpec odd_grid_partner(const ModelParams& params) {
  return make_odd_gaussian_grid(Gaussian{1.0, 0.0, 0.0}, params, 12.0, 24001);
}

}  // namespace

void emit_error_json(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

int run_gram(const CommonOptions& common, const GramOptions& opt) {
  Context ctx;
  LatticeSpec lattice;
  try {
    ctx = make_context(common);
    lattice = LatticeSpec{opt.eps, opt.n_min, opt.n_max};
    lattice.validate();
    parse_family(opt.family);
    parse_measure(opt.measure);
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);
  config["family"] = opt.family;
  config["measure"] = opt.measure;
  config["eps"] = opt.eps;
  config["n_min"] = opt.n_min;
  config["n_max"] = opt.n_max;

  Table table({"n", "n_prime", "re", "im", "err"});
  try {
    auto gram = gram_matrix(lattice, parse_family(opt.family), parse_measure(opt.measure),
                            ctx.params, ctx.cfg);
    double max_offdiag = 0.0;
    for (int i = 0; i < gram.size(); ++i) {
      for (int j = 0; j < gram.size(); ++j) {
        const Complex v = gram.at(i, j);
        if (i != j) max_offdiag = std::max(max_offdiag, std::abs(v));
        table.add_row({static_cast<double>(lattice.n_min + i),
                       static_cast<double>(lattice.n_min + j), v.real(), v.imag(),
                       gram.max_error_estimate()});
      }
    }
    table.add_metadata("max_offdiagonal", format_number(max_offdiag));
    table.add_metadata("max_deviation_from_identity",
                       format_number(gram.max_deviation_from_identity()));
    table.add_metadata("evaluations", std::to_string(gram.evaluations()));
    write_outputs(common, "gram", config, table);
  } catch (const QuadratureError& e) {
    Table failed({"n", "n_prime", "re", "im", "err"});
    failed.add_metadata("status", std::string("failed: ") + e.what());
    write_outputs(common, "gram", config, failed);
    emit_error_json("numerical", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

int run_parseval(const CommonOptions& common, const ParsevalOptions& opt) {
  Context ctx;
  try {
    ctx = make_context(common);
    if (opt.truncations.empty()) throw std::invalid_argument("parseval: empty truncation list");
    for (int n : opt.truncations)
      if (n < 0) throw std::invalid_argument("parseval: truncations must be >= 0");
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);
  config["eps"] = opt.eps;
  config["truncations"] = opt.truncations;

  const double target_xi = opt.eps * ctx.params.length_scale();
  Table table({"N", "S_N", "S_N_err", "one_minus_S_N", "tail_bound_3_over_pi2N"});
  table.add_metadata("eps", format_number(opt.eps));
  for (int n : opt.truncations) {
    const double s = parseval_sum(target_xi, n, ctx.params);
    const double bound = (n > 0) ? 3.0 / (kPi * kPi * n) : 1.0;
    // the partial sum is evaluated in closed form; roundoff is the only error
    table.add_row({static_cast<double>(n), s, 1e-15, 1.0 - s, bound});
  }
  write_outputs(common, "parseval", config, table);
  return kExitOk;
}

int run_ml_overlaps(const CommonOptions& common, const MlOverlapsOptions& opt) {
  Context ctx;
  try {
    ctx = make_context(common);
    if (opt.lattice_m_max < 1)
      throw std::invalid_argument("ml-overlaps: lattice_m_max must be >= 1");
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);
  config["lattice_m_max"] = opt.lattice_m_max;

  const double scale = ctx.params.length_scale();
  Table table({"kind", "separation", "quad_re", "quad_im", "quad_err", "closed_form",
               "closed_form_err", "alt_lattice_form", "alt_lattice_form_err"});
  table.add_metadata("separation_units", "hbar*sqrt(beta)");
  table.add_metadata("note",
                     "ml-ml at separation 2 (adjacent lattice sites) is 1/2, not 0; "
                     "alt_lattice_form carries the often-quoted 4m^2-1 denominator, "
                     "which flips the sign the defining integral fixes at m = 0");
  int status = kExitOk;

  // ml-ml overlaps, adjacent-site row included
  for (double sep : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0}) {
    auto quad = inner_product(MaxLoc{0.0}, MaxLoc{sep * scale}, Measure::Standard, ctx.params,
                              ctx.cfg);
    if (!quad.converged) status = kExitNumerical;
    table.add_row({"ml-ml", sep, quad.value.real(), quad.value.imag(), quad.error_estimate,
                   ml_overlap_analytic(0.0, sep * scale, ctx.params), 0.0, Cell{}, Cell{}});
  }

  // ml-eigen overlaps on the lattice: closed form vs the 4m^2-1 transcription
  for (int m = -opt.lattice_m_max; m <= opt.lattice_m_max; ++m) {
    const double sep = 2.0 * m;
    auto quad = inner_product(SymEigen{0.0}, MaxLoc{sep * scale}, Measure::Standard, ctx.params,
                              ctx.cfg);
    if (!quad.converged) status = kExitNumerical;
    const double alt_form =
        2.0 * std::sqrt(2.0) * std::cos(m * kPi) / (kPi * (4.0 * m * m - 1.0));
    table.add_row({"ml-eigen", sep, quad.value.real(), quad.value.imag(), quad.error_estimate,
                   ml_eigen_overlap_analytic(0.0, sep * scale, ctx.params), 0.0, alt_form,
                   0.0});
  }
  // off-lattice ml-eigen samples, including the |separation| = 1 limit point
  for (double sep : {0.5, 1.0, 2.7}) {
    auto quad = inner_product(SymEigen{0.0}, MaxLoc{sep * scale}, Measure::Standard, ctx.params,
                              ctx.cfg);
    if (!quad.converged) status = kExitNumerical;
    table.add_row({"ml-eigen", sep, quad.value.real(), quad.value.imag(), quad.error_estimate,
                   ml_eigen_overlap_analytic(0.0, sep * scale, ctx.params), 0.0, Cell{},
                   Cell{}});
  }

  write_outputs(common, "ml-overlaps", config, table);
  if (status != kExitOk) emit_error_json("numerical", "ml-overlaps: a quadrature did not converge");
  return status;
}

int run_profiles(const CommonOptions& common, const ProfilesOptions& opt) {
  Context ctx;
  try {
    ctx = make_context(common);
    if (opt.state != "sym-eigen" && opt.state != "maxloc")
      throw std::invalid_argument("profiles: state must be sym-eigen or maxloc");
    if (opt.mode != "exact" && opt.mode != "linearized" && opt.mode != "both")
      throw std::invalid_argument("profiles: mode must be exact, linearized or both");
    if (opt.x_count < 2) throw std::invalid_argument("profiles: x_count must be >= 2");
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  const double scale = ctx.params.length_scale();
  const double x_lo = opt.x_min.value_or(opt.xi * scale - 5.0 * scale);
  const double x_hi = opt.x_max.value_or(opt.xi * scale + 5.0 * scale);
  if (!(x_hi > x_lo)) {
    emit_error_json("config", "profiles: x range is empty");
    return kExitConfig;
  }

  json config = common_json(common);
  config["state"] = opt.state;
  config["xi"] = opt.xi;
  config["mode"] = opt.mode;
  config["x_min"] = x_lo;
  config["x_max"] = x_hi;
  config["x_count"] = opt.x_count;

  const double xi = opt.xi * scale;
  const bool is_eigen = (opt.state == "sym-eigen");
  StateSpec state = is_eigen ? StateSpec{SymEigen{xi}} : StateSpec{MaxLoc{xi}};

  std::vector<PhaseMode> modes;
  if (opt.mode != "linearized") modes.push_back(PhaseMode::Exact);
  if (opt.mode != "exact") modes.push_back(PhaseMode::Linearized);

  Table table({"state", "mode", "x", "num_re", "num_im", "num_err", "closed_form",
               "closed_form_err", "abs_gap", "status"});
  table.add_metadata("closed_form",
                     is_eigen ? "sqrt(2)/(beta^(1/4) pi sqrt(hbar)) K0(|x-xi|/(hbar sqrt(beta)))"
                              : "beta^(-1/4) hbar^(-1/2) exp(-|x-xi|/(hbar sqrt(beta)))");
  int status = kExitOk;

  for (PhaseMode mode : modes) {
    for (int k = 0; k < opt.x_count; ++k) {
      const double x = x_lo + (x_hi - x_lo) * k / (opt.x_count - 1);
      if (is_eigen && std::abs(x - xi) < 0.05 * scale) {
        table.add_row({opt.state, phase_mode_name(mode), x, Cell{}, Cell{}, Cell{}, Cell{},
                       Cell{}, Cell{}, "skipped:singular-at-xi"});
        continue;
      }
      const double closed = is_eigen ? eigen_position_closed_form(xi, x, ctx.params)
                                     : ml_position_closed_form(xi, x, ctx.params);
      try {
        auto num = position_amplitude(state, mode, ctx.params, x, ctx.cfg);
        const char* row_status = num.converged ? "ok" : "failed:quadrature";
        if (!num.converged) status = kExitNumerical;
        table.add_row({opt.state, phase_mode_name(mode), x, num.value.real(), num.value.imag(),
                       num.error_estimate, closed, 0.0, std::abs(num.value - closed),
                       row_status});
      } catch (const std::exception& e) {
        status = kExitNumerical;
        table.add_row({opt.state, phase_mode_name(mode), x, Cell{}, Cell{}, Cell{}, closed, 0.0,
                       Cell{}, std::string("failed:") + e.what()});
      }
    }
  }

  write_outputs(common, "profiles", config, table);
  if (status != kExitOk)
    emit_error_json("numerical", "profiles: at least one transform did not converge");
  return status;
}

int run_gup_check(const CommonOptions& common, const GupCheckOptions& opt) {
  Context ctx;
  try {
    ctx = make_context(common);
    if (opt.state != "maxloc" && opt.state != "gaussian")
      throw std::invalid_argument("gup: state must be maxloc or gaussian");
    if (opt.state == "gaussian")
      for (double s : opt.sigmas)
        if (!(s > 0.0)) throw std::invalid_argument("gup: sigmas must be positive");
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);
  config["state"] = opt.state;
  config["xi"] = opt.xi;
  config["sigmas"] = opt.sigmas;

  Table table({"state", "mean_X", "mean_X_err", "mean_p", "mean_p_err", "mean_p2",
               "mean_p2_err", "delta_X", "delta_X_err", "delta_p", "lhs", "rhs",
               "lhs_minus_rhs", "status"});
  int status = kExitOk;

  std::vector<StateSpec> states;
  if (opt.state == "maxloc") {
    states.push_back(MaxLoc{opt.xi * ctx.params.length_scale()});
  } else {
    for (double s : opt.sigmas)
      states.push_back(Gaussian{s * ctx.params.momentum_scale(), 0.0, 0.0});
  }

  for (const auto& s : states) {
    try {
      auto r = gup_check(s, ctx.params, ctx.cfg);
      table.add_row({state_label(s), r.mean_X, r.mean_X_err, r.mean_p, r.mean_p_err, r.mean_p2,
                     r.mean_p2_err, r.delta_X, r.delta_X_err, r.delta_p, r.lhs, r.rhs,
                     r.lhs - r.rhs, "ok"});
    } catch (const MomentError& e) {
      status = kExitNumerical;
      table.add_row({state_label(s), Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                     Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                     std::string("failed:moment ") + e.moment()});
    }
  }

  write_outputs(common, "gup", config, table);
  if (status != kExitOk) emit_error_json("numerical", "gup: a moment integral diverged");
  return status;
}

int run_symmetry(const CommonOptions& common) {
  Context ctx;
  try {
    ctx = make_context(common);
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);

  struct Pair {
    const char* label;
    StateSpec psi;
    StateSpec phi;
  };
  std::vector<Pair> corpus;
  corpus.push_back({"gaussian-widths", Gaussian{1.0, 0.0, 0.0}, Gaussian{2.0, 0.0, 0.0}});
  corpus.push_back({"gaussian-shifted", Gaussian{1.0, 0.7, 0.0}, Gaussian{0.8, -0.4, 1.0}});
  corpus.push_back({"even-odd-grid", Gaussian{1.0, 0.0, 0.0}, odd_grid_partner(ctx.params)});

  Table table({"operator", "measure", "pair", "defect_re", "defect_im", "defect_err",
               "reference_re", "reference_im", "reference_err", "abs_residual"});
  table.add_metadata("reference",
                     "0 for the symmetric combinations; -2 i hbar beta <psi|p|phi> for "
                     "x-kmm under the standard measure");
  int status = kExitOk;

  for (auto op : {OperatorKind::XSym, OperatorKind::XKmm, OperatorKind::P}) {
    for (auto measure : {Measure::Standard, Measure::KMM}) {
      for (const auto& pair : corpus) {
        auto defect = symmetry_defect(op, measure, pair.psi, pair.phi, ctx.params, ctx.cfg);
        if (!defect.converged) status = kExitNumerical;

        // the only combination with a nonzero closed-form prediction
        const bool kmm_under_standard =
            (op == OperatorKind::XKmm && measure == Measure::Standard);
        Cell ref_re{0.0}, ref_im{0.0}, ref_err{0.0}, residual{std::abs(defect.value)};
        if (op == OperatorKind::XSym && measure == Measure::KMM) {
          // no contract for the symmetrized operator under the KMM weight
          ref_re = Cell{};
          ref_im = Cell{};
          ref_err = Cell{};
          residual = Cell{};
        } else if (kmm_under_standard) {
          Integrand p_matrix = [&](double p) {
            return std::conj(evaluate(pair.psi, ctx.params, p)) * p *
                   evaluate(pair.phi, ctx.params, p);
          };
          IntegralResult pme;
          if (auto s = support(pair.phi)) {
            pme = integrate_real_line(p_matrix, ctx.params, ctx.cfg, s->lo, s->hi);
          } else {
            pme = integrate_real_line(p_matrix, ctx.params, ctx.cfg);
          }
          const Complex ref =
              Complex{0.0, -2.0 * ctx.params.hbar * ctx.params.beta} * pme.value;
          ref_re = Cell{ref.real()};
          ref_im = Cell{ref.imag()};
          ref_err = Cell{2.0 * ctx.params.hbar * ctx.params.beta * pme.error_estimate};
          residual = Cell{std::abs(defect.value - ref)};
        }
        table.add_row({operator_name(op), measure_name(measure), pair.label,
                       defect.value.real(), defect.value.imag(), defect.error_estimate, ref_re,
                       ref_im, ref_err, residual});
      }
    }
  }

  write_outputs(common, "symmetry", config, table);
  if (status != kExitOk) emit_error_json("numerical", "symmetry: a defect integral diverged");
  return status;
}

int run_vacuum(const CommonOptions& common, const VacuumOptions& opt) {
  Context ctx;
  VacuumParams vp;
  try {
    ctx = make_context(common);
    vp.mass = opt.mass;
    vp.model = ctx.params;
    vp.validate();
    if (opt.which != "modified" && opt.which != "unmodified" && opt.which != "both")
      throw std::invalid_argument("vacuum: measure selector must be modified|unmodified|both");
    if (opt.which == "unmodified" && !opt.cutoff)
      throw std::invalid_argument(
          "vacuum: the unmodified integral diverges; --unmodified requires --cutoff");
    if (opt.scan_cutoffs.size() < 4)
      throw std::invalid_argument("vacuum: scan needs at least 4 cutoffs");
  } catch (const std::exception& e) {
    emit_error_json("config", e.what());
    return kExitConfig;
  }

  json config = common_json(common);
  config["mass"] = opt.mass;
  config["measure"] = opt.which;
  config["scan_cutoffs"] = opt.scan_cutoffs;
  if (opt.cutoff) config["cutoff"] = *opt.cutoff;

  const bool want_modified = opt.which != "unmodified";
  const bool want_unmodified = opt.which != "modified";

  Table table({"kind", "measure", "cutoff", "rho", "rho_err"});
  table.add_metadata("radial_reduction", "rho = 1/(2 pi^2) int (1/2) sqrt(p^2+m^2) p^2 w(p) dp");
  int status = kExitOk;

  if (want_modified) {
    // the GUP-regularized density needs no cutoff
    auto modified = vacuum_energy_density(vp, /*modified=*/true, ctx.cfg);
    if (!modified.converged) status = kExitNumerical;
    table.add_row({"density", "modified", "inf", modified.value.real(), modified.error_estimate});
  }

  if (opt.which == "both") {
    // side-by-side comparison with a cutoff imposed by hand at the GUP scale
    VacuumParams at_scale = vp;
    at_scale.cutoff = ctx.params.momentum_scale();
    auto by_hand = vacuum_energy_density(at_scale, /*modified=*/false, ctx.cfg);
    table.add_row({"density", "unmodified", *at_scale.cutoff, by_hand.value.real(),
                   by_hand.error_estimate});
  }

  if (opt.cutoff) {
    VacuumParams truncated = vp;
    truncated.cutoff = *opt.cutoff;
    if (want_modified) {
      auto mod_cut = vacuum_energy_density(truncated, true, ctx.cfg);
      table.add_row({"density", "modified", *opt.cutoff, mod_cut.value.real(),
                     mod_cut.error_estimate});
    }
    if (want_unmodified) {
      auto unmod_cut = vacuum_energy_density(truncated, false, ctx.cfg);
      table.add_row({"density", "unmodified", *opt.cutoff, unmod_cut.value.real(),
                     unmod_cut.error_estimate});
    }
  }

  if (want_unmodified) {
    try {
      auto scan = divergence_scan(vp, opt.scan_cutoffs, ctx.cfg);
      for (std::size_t i = 0; i < scan.cutoffs.size(); ++i) {
        if (!scan.densities[i].converged) status = kExitNumerical;
        table.add_row({"scan", "unmodified", scan.cutoffs[i], scan.densities[i].value.real(),
                       scan.densities[i].error_estimate});
      }
      table.add_metadata("scan_slope", format_number(scan.slope));
    } catch (const std::exception& e) {
      emit_error_json("config", e.what());
      return kExitConfig;
    }
  }

  write_outputs(common, "vacuum", config, table);
  if (status != kExitOk) emit_error_json("numerical", "vacuum: an integral did not converge");
  return status;
}

}  // namespace gup::cli
