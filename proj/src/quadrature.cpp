#include "gup/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace gup {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// 15-point Kronrod nodes (nonnegative half) with the embedded 7-point Gauss
// rule; abscissae/weights from the QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  Complex value;
  double error;
};

PanelEstimate gk15(const Integrand& f, double a, double b, long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  Complex fc = f(center);
  Complex kronrod = kWgk[7] * fc;
  Complex gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    Complex fl = f(center - dx);
    Complex fr = f(center + dx);
    kronrod += kWgk[j] * (fl + fr);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fl + fr);
  }
  evaluations += 15;
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Panel {
  double a, b;
  Complex value;
  double error;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

bool splittable(const Panel& p) {
  const double scale = std::max({std::abs(p.a), std::abs(p.b), 1.0});
  return (p.b - p.a) > 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

IntegralResult adaptive(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                        int initial_panels) {
  cfg.validate();
  IntegralResult result;
  if (!(b > a)) return result;

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
  int n0 = std::clamp(initial_panels, 1, std::max(1, cfg.max_subdivisions / 2));
  Complex total{0.0, 0.0};
  double total_err = 0.0;
  long evals = 0;
  const double h0 = (b - a) / n0;
  for (int k = 0; k < n0; ++k) {
    double pa = a + k * h0;
    double pb = (k == n0 - 1) ? b : a + (k + 1) * h0;
    auto est = gk15(f, pa, pb, evals);
    queue.push({pa, pb, est.value, est.error});
    total += est.value;
    total_err += est.error;
  }

  auto within_tol = [&]() {
    return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  };

  int panels = n0;
  std::vector<Panel> frozen;  // panels too narrow to split further
  while (!within_tol() && panels < cfg.max_subdivisions && !queue.empty()) {
    Panel worst = queue.top();
    queue.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15(f, worst.a, mid, evals);
    auto right = gk15(f, mid, worst.b, evals);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error});
    queue.push({mid, worst.b, right.value, right.error});
    ++panels;
  }

  // deterministic final sum, ordered by interval
  std::vector<Panel> all(std::move(frozen));
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  total = Complex{0.0, 0.0};
  total_err = 0.0;
  for (const auto& p : all) {
    total += p.value;
    total_err += p.error;
  }

  result.value = total;
  result.error_estimate = total_err;
  result.evaluations = evals;
  result.converged = total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
                     std::isfinite(total.real()) && std::isfinite(total.imag());
  return result;
}

int initial_panel_count(double a, double b, const QuadratureConfig& cfg, int fallback) {
  if (cfg.oscillation_hint && *cfg.oscillation_hint > 0.0) {
    double n = std::ceil((b - a) * (*cfg.oscillation_hint) / kPi);
    return std::max(fallback, static_cast<int>(std::min(n, 1.0e6)));
  }
  return fallback;
}

}  // namespace

IntegralResult integrate_interval(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg) {
  return adaptive(f, a, b, cfg, initial_panel_count(a, b, cfg, 8));
}

IntegralResult integrate_real_line(const Integrand& f, const ModelParams& params,
                                   const QuadratureConfig& cfg) {
  params.validate();
  const double sb = std::sqrt(params.beta);
  Integrand g = [&f, sb](double t) {
    const double c = std::cos(t);
    const double sec2 = 1.0 / (c * c);
    return f(std::tan(t) / sb) * (sec2 / sb);
  };
  return adaptive(g, -kHalfPi, kHalfPi, cfg, initial_panel_count(-kHalfPi, kHalfPi, cfg, 16));
}

IntegralResult integrate_real_line(const Integrand& f, const ModelParams& params,
                                   const QuadratureConfig& cfg, double p_lo, double p_hi) {
  params.validate();
  const double sb = std::sqrt(params.beta);
  const double t_lo = std::atan(sb * p_lo);
  const double t_hi = std::atan(sb * p_hi);
  Integrand g = [&f, sb](double t) {
    const double c = std::cos(t);
    const double sec2 = 1.0 / (c * c);
    return f(std::tan(t) / sb) * (sec2 / sb);
  };
  return adaptive(g, t_lo, t_hi, cfg, initial_panel_count(t_lo, t_hi, cfg, 16));
}

IntegralResult integrate_half_line(const Integrand& f, double scale,
                                   const QuadratureConfig& cfg) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_half_line: scale must be positive");
  Integrand g = [&f, scale](double t) {
    const double c = std::cos(t);
    const double sec2 = 1.0 / (c * c);
    return f(scale * std::tan(t)) * (scale * sec2);
  };
  return adaptive(g, 0.0, kHalfPi, cfg, initial_panel_count(0.0, kHalfPi, cfg, 16));
}

namespace {

// Wynn's epsilon algorithm on the partial sums of the half-period series.
// Returns the best even-column extrapolant and a difference-based error guess.
struct EpsilonTable {
  std::vector<Complex> row;  // current diagonal
  Complex best{0.0, 0.0};
  double change = std::numeric_limits<double>::infinity();

  void append(Complex s) {
    std::vector<Complex> next(row.size() + 1);
    next[0] = s;
    Complex prev_lower{0.0, 0.0};  // epsilon_{-1} = 0
    for (std::size_t k = 1; k < next.size(); ++k) {
      Complex delta = next[k - 1] - row[k - 1];
      if (std::abs(delta) < 1e-300) {
        next.resize(k);
        break;
      }
      next[k] = prev_lower + 1.0 / delta;
      prev_lower = row[k - 1];
    }
    row = std::move(next);
    // even columns approximate the limit; take the last one
    std::size_t last_even = (row.size() - 1) - ((row.size() - 1) % 2);
    Complex candidate = row[last_even];
    change = std::abs(candidate - best);
    best = candidate;
  }
};

IntegralResult fourier_half_line(const Integrand& g, double omega, bool negative_axis,
                                 const QuadratureConfig& cfg) {
  // integrates int_0^inf g(+-p) exp(+-i*omega*p) dp by half-period segments
  const double sign = negative_axis ? -1.0 : 1.0;
  Integrand h = [&g, omega, sign](double p) {
    const double th = omega * sign * p;
    return g(sign * p) * Complex{std::cos(th), std::sin(th)};
  };

  const double half_period = kPi / std::abs(omega);
  QuadratureConfig seg_cfg = cfg;
  seg_cfg.abs_tol = std::max(cfg.abs_tol * 1e-2, 1e-15);
  seg_cfg.rel_tol = std::min(cfg.rel_tol, 1e-12);
  seg_cfg.max_subdivisions = 200;
  seg_cfg.oscillation_hint.reset();

  constexpr int kMaxSegments = 512;
  IntegralResult out;
  EpsilonTable eps;
  Complex partial{0.0, 0.0};
  double quad_err = 0.0;
  int tiny_streak = 0;

  for (int k = 0; k < kMaxSegments; ++k) {
    const double a = k * half_period;
    const double b = (k + 1) * half_period;
    auto seg = adaptive(h, a, b, seg_cfg, 2);
    out.evaluations += seg.evaluations;
    quad_err += seg.error_estimate;
    partial += seg.value;
    eps.append(partial);

    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(eps.best));
    if (std::abs(seg.value) < 0.01 * tol) {
      if (++tiny_streak >= 3 && quad_err + std::abs(seg.value) <= tol) {
        // envelope died out; the plain sum is the answer
        out.value = partial;
        out.error_estimate = quad_err + std::abs(seg.value);
        out.converged = true;
        return out;
      }
    } else {
      tiny_streak = 0;
    }
    if (k >= 7 && eps.change + quad_err < tol) {
      out.value = eps.best;
      out.error_estimate = quad_err + eps.change;
      out.converged = true;
      return out;
    }
  }
  out.value = eps.best;
  out.error_estimate = quad_err + eps.change;
  out.converged = false;
  return out;
}

}  // namespace

IntegralResult integrate_fourier(const Integrand& envelope, double omega,
                                 const QuadratureConfig& cfg) {
  cfg.validate();
  if (std::abs(omega) < 1e-3) {
    // below ~1e-3 the half periods dwarf an O(1) envelope and the leading
    // segment can sample past it entirely; integrate the product directly
    Integrand h = [&envelope, omega](double p) {
      const double th = omega * p;
      return envelope(p) * Complex{std::cos(th), std::sin(th)};
    };
    return integrate_real_line(h, ModelParams{}, cfg);
  }
  auto plus = fourier_half_line(envelope, omega, false, cfg);
  auto minus = fourier_half_line(envelope, omega, true, cfg);
  IntegralResult out;
  out.value = plus.value + minus.value;
  out.error_estimate = plus.error_estimate + minus.error_estimate;
  out.evaluations = plus.evaluations + minus.evaluations;
  out.converged = plus.converged && minus.converged;
  return out;
}

IntegralResult inner_product(const StateSpec& a, const StateSpec& b, Measure measure,
                             const ModelParams& params, const QuadratureConfig& cfg) {
  params.validate();
  QuadratureConfig local = cfg;
  if (!local.oscillation_hint) {
    double df = std::abs(phase_frequency(a, params) - phase_frequency(b, params));
    if (df > 1.0) local.oscillation_hint = df;
  }
  Integrand f = [&](double p) {
    return std::conj(evaluate(a, params, p)) * evaluate(b, params, p) *
           measure_weight(measure, params, p);
  };

  auto sa = support(a);
  auto sb_ = support(b);
  if (sa || sb_) {
    double lo = std::max(sa ? sa->lo : -std::numeric_limits<double>::infinity(),
                         sb_ ? sb_->lo : -std::numeric_limits<double>::infinity());
    double hi = std::min(sa ? sa->hi : std::numeric_limits<double>::infinity(),
                         sb_ ? sb_->hi : std::numeric_limits<double>::infinity());
    if (!(hi > lo)) return IntegralResult{};  // disjoint supports
    return integrate_real_line(f, params, local, lo, hi);
  }
  return integrate_real_line(f, params, local);
}

}  // namespace gup
