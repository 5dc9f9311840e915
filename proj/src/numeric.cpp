#include "zeromodes/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace zeromodes::numeric {
namespace {

using analytic::SpinorSample;
using analytic::ZeroMode;
using model::PotentialParams;
using Eigen::Vector2d;

constexpr Complex kI{0.0, 1.0};
constexpr double kKyScanStep = 0.01;    // below the smallest mode gap supported
constexpr double kRenormInterval = 5.0; // x-units between rescalings
constexpr double kConfirmWindow = 2.0;  // half-width of the kink-check window
constexpr double kConfirmRelTol = 0.05;

int integer_ratio(double span, double h, const char* what) {
  const double q = span / h;
  const long n = std::lround(q);
  if (n < 1 || std::abs(q - double(n)) > 1e-6 * std::max(1.0, q))
    throw std::invalid_argument(std::string("shoot_spectrum: ") + what +
                                " must be an integer multiple of the spacing");
  return int(n);
}

// Potential sampled once per grid at the nodes and midpoints; the matching
// function is then evaluated for many ky without re-touching libm.  Node
// and midpoint tables also serve any integer stride: an even stride's
// midpoints land on nodes, an odd one's on fine midpoints.
struct PotentialTable {
  Grid grid;
  int zero_index = 0;  // node sitting at x = 0
  std::vector<double> node;
  std::vector<double> mid;

  PotentialTable(const PotentialParams& p, const Grid& g) : grid(g) {
    if (!(g.x_min < 0.0 && g.x_max > 0.0))
      throw std::invalid_argument("shoot_spectrum: grid must straddle x = 0");
    const double h = g.spacing();
    zero_index = integer_ratio(-g.x_min, h, "grid.x_min");
    integer_ratio(g.x_max, h, "grid.x_max");
    node.resize(g.n_points);
    mid.resize(g.n_points - 1);
    for (int i = 0; i < g.n_points; ++i)
      node[i] = model::potential_value(p, g.point(i));
    for (int i = 0; i + 1 < g.n_points; ++i)
      mid[i] = model::potential_value(p, g.point(i) + 0.5 * h);
  }

  double coarse_mid(int i0, int stride, int direction) const {
    const int c2 = 2 * i0 + direction * stride;  // doubled index of midpoint
    return c2 % 2 == 0 ? node[c2 / 2] : mid[(c2 - 1) / 2];
  }
};

// Real form of the zero-energy first-order system with psiA = a and
// psiB = i b:
//   a' =  ky a + V b
//   b' = -V a - ky b
// The matching determinant of two such real solutions is i * real, so the
// sign scan below works on an honestly real function.
Vector2d rhs(double ky, double v, const Vector2d& u) {
  return {ky * u(0) + v * u(1), -v * u(0) - ky * u(1)};
}

void rk4_step(double ky, double v0, double vm, double v1, double h,
              Vector2d& u) {
  const Vector2d k1 = rhs(ky, v0, u);
  const Vector2d k2 = rhs(ky, vm, Vector2d(u + 0.5 * h * k1));
  const Vector2d k3 = rhs(ky, vm, Vector2d(u + 0.5 * h * k2));
  const Vector2d k4 = rhs(ky, v1, Vector2d(u + h * k3));
  u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct WindowSamples {
  std::vector<int> node_index;
  std::vector<Vector2d> value;
};

struct Shooter {
  PotentialTable table;
  double mu;

  Shooter(const PotentialParams& p, const Grid& g) : table(p, g), mu(p.mu) {}

  // Integrates one side toward x = 0 starting from the decaying
  // constant-coefficient direction; returns the unit direction at x = 0.
  // When collecting window samples, rescaling is suppressed inside the
  // window so the stored stretch of the solution stays in one frame.
  Vector2d side_direction(double ky, bool left, int stride,
                          WindowSamples* win = nullptr) const {
    const Grid& g = table.grid;
    const double h = g.spacing() * stride * (left ? 1.0 : -1.0);
    const double kappa = std::sqrt(ky * ky - mu * mu);
    Vector2d u = left ? Vector2d(ky + kappa, mu) : Vector2d(mu, -(ky + kappa));
    u.normalize();
    const int steps = left ? table.zero_index / stride
                           : (g.n_points - 1 - table.zero_index) / stride;
    const int renorm_every =
        std::max(1, int(std::lround(kRenormInterval / std::abs(h))));
    int i = left ? 0 : g.n_points - 1;
    const int di = left ? stride : -stride;
    if (win && std::abs(g.point(i)) <= kConfirmWindow) {
      win->node_index.push_back(i);
      win->value.push_back(u);
    }
    for (int s = 0; s < steps; ++s) {
      const double vm = table.coarse_mid(i, stride, left ? 1 : -1);
      rk4_step(ky, table.node[i], vm, table.node[i + di], h, u);
      i += di;
      const double x = g.point(i);
      const bool in_window = win && std::abs(x) <= kConfirmWindow;
      if (in_window) {
        win->node_index.push_back(i);
        win->value.push_back(u);
      }
      if (s % renorm_every == renorm_every - 1 && !in_window) u.normalize();
    }
    return u.normalized();
  }

  double matching(double ky, int stride) const {
    const Vector2d l = side_direction(ky, true, stride);
    const Vector2d r = side_direction(ky, false, stride);
    return l(0) * r(1) - l(1) * r(0);
  }
};

struct Refined {
  double ky;
  double residual;
  int evals;
};

// Bisection to the requested ky tolerance followed by a short secant polish
// that drives the matching value itself toward zero.
std::optional<Refined> refine_root(const Shooter& sh, double lo, double hi,
                                   double flo, double fhi, double tol) {
  int evals = 0;
  const double width_goal = std::max(tol, 1e-13);
  while (hi - lo > width_goal && evals < 200) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = sh.matching(mid, 1);
    ++evals;
    if (fmid == 0.0) {
      lo = hi = mid;
      flo = fhi = fmid;
      break;
    }
    if ((flo < 0.0) != (fmid < 0.0)) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  double best_ky = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double best_f = std::min(std::abs(flo), std::abs(fhi));
  double a = lo, fa = flo, b = hi, fb = fhi;
  for (int k = 0; k < 4 && fa != fb; ++k) {
    const double c = b - fb * (b - a) / (fb - fa);
    if (!(c >= lo - tol && c <= hi + tol)) break;
    const double fc = sh.matching(c, 1);
    ++evals;
    if (std::abs(fc) < best_f) {
      best_f = std::abs(fc);
      best_ky = c;
    }
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    if (fc == 0.0) break;
  }
  return Refined{best_ky, best_f, evals};
}

// Re-integrates at the converged ky, stitches the two sides at x = 0 and
// checks the first-order residual with finite-difference derivatives over
// a window around the matching point.  A genuine eigenfunction is smooth
// there; a spurious sign change (a pole of the matching function) leaves an
// O(1) kink that this rejects.
bool confirm_root(const PotentialParams& p, const Shooter& sh, double ky) {
  WindowSamples wl, wr;
  sh.side_direction(ky, true, 1, &wl);
  sh.side_direction(ky, false, 1, &wr);
  if (wl.value.empty() || wr.value.empty()) return true;  // window off-grid
  const Vector2d l0 = wl.value.back();   // left side ends at x = 0
  const Vector2d r0 = wr.value.back();   // right side ends at x = 0 as well
  const int c = std::abs(l0(0)) >= std::abs(l0(1)) ? 0 : 1;
  if (r0(c) == 0.0) return false;
  const double scale_r = l0(c) / r0(c);

  const Grid& g = sh.table.grid;
  std::vector<SpinorSample> samples;
  samples.reserve(wl.value.size() + wr.value.size());
  for (std::size_t k = 0; k < wl.value.size(); ++k) {
    const Vector2d& u = wl.value[k];
    samples.push_back({g.point(wl.node_index[k]), Complex{u(0), 0.0},
                       Complex{0.0, u(1)}, 0.0, 0.0});
  }
  // right window was collected from x_max downward; append reversed, skipping
  // the shared x = 0 node
  for (std::size_t k = wr.value.size() - 1; k-- > 0;) {
    const Vector2d u = scale_r * wr.value[k];
    samples.push_back({g.point(wr.node_index[k]), Complex{u(0), 0.0},
                       Complex{0.0, u(1)}, 0.0, 0.0});
  }

  const double h = g.spacing();
  if (samples.size() < 9) return true;
  std::vector<SpinorSample> interior;
  interior.reserve(samples.size() - 4);
  for (std::size_t k = 2; k + 2 < samples.size(); ++k) {
    SpinorSample s = samples[k];
    s.dpsiA = (-samples[k + 2].psiA + 8.0 * samples[k + 1].psiA -
               8.0 * samples[k - 1].psiA + samples[k - 2].psiA) /
              (12.0 * h);
    s.dpsiB = (-samples[k + 2].psiB + 8.0 * samples[k + 1].psiB -
               8.0 * samples[k - 1].psiB + samples[k - 2].psiB) /
              (12.0 * h);
    interior.push_back(s);
  }
  double scale = 0.0;
  for (const SpinorSample& s : interior) {
    const double v = model::potential_value(p, s.x);
    scale = std::max(scale, (std::abs(v) + std::abs(ky)) *
                                (std::abs(s.psiA) + std::abs(s.psiB)));
  }
  if (scale == 0.0) return false;
  return dirac_residual(p, ky, interior) <= kConfirmRelTol * scale;
}

}  // namespace

Eigen::ArrayXd Grid::points() const {
  Eigen::ArrayXd xs(n_points);
  for (int i = 0; i < n_points; ++i) xs(i) = point(i);
  return xs;
}

Grid Grid::make(double x_min, double x_max, int n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
    throw std::invalid_argument("Grid: need finite x_min < x_max");
  if (n_points < 3) throw std::invalid_argument("Grid: need n_points >= 3");
  return Grid{x_min, x_max, n_points};
}

Grid Grid::default_verification() { return make(-25.0, 25.0, 5001); }

std::vector<SpinorSample> sample_spinor(const PotentialParams& p,
                                        const ZeroMode& m,
                                        analytic::KySign sign,
                                        const Grid& grid) {
  std::vector<SpinorSample> out;
  out.reserve(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i)
    out.push_back(analytic::spinor_value(p, m, sign, grid.point(i)));
  return out;
}

double dirac_residual(const PotentialParams& p, double ky,
                      const std::vector<SpinorSample>& samples) {
  if (samples.empty())
    throw std::invalid_argument("dirac_residual: no samples");
  double worst = 0.0;
  for (const SpinorSample& s : samples) {
    const double v = model::potential_value(p, s.x);
    const double r1 = std::abs(v * s.psiA - kI * (s.dpsiB + ky * s.psiB));
    const double r2 = std::abs(v * s.psiB - kI * (s.dpsiA - ky * s.psiA));
    worst = std::max({worst, r1, r2});
  }
  return worst;
}

double schrodinger_residual(const PotentialParams& p, model::Branch br,
                            double ky,
                            const std::vector<std::pair<double, Complex>>& values,
                            const std::vector<Complex>& second_derivs) {
  if (values.size() != second_derivs.size())
    throw std::invalid_argument("schrodinger_residual: length mismatch");
  if (values.empty())
    throw std::invalid_argument("schrodinger_residual: no samples");
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& [x, psi] = values[i];
    const Complex r =
        -second_derivs[i] + model::effective_potential(p, br, ky, x) * psi;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

std::vector<ShootingResult> shoot_spectrum(const PotentialParams& p,
                                           double ky_max, const Grid& grid,
                                           double tol) {
  const model::Regime regime = model::classify_regime(p);
  if (regime == model::Regime::Invalid)
    throw std::invalid_argument(
        "shoot_spectrum: lambda = 0 is the Invalid regime");
  const double mu_abs = std::abs(p.mu);
  if (!(ky_max > mu_abs))
    throw std::invalid_argument("shoot_spectrum: ky_max must exceed |mu|");
  if (!(tol > 0.0))
    throw std::invalid_argument("shoot_spectrum: tol must be positive");

  const Shooter sh(p, grid);

  // Bracketing runs at step max(spacing, 0.01); any stride must divide both
  // side lengths so the coarse walk still lands exactly on x = 0.
  const double h = grid.spacing();
  int stride = std::max(1, int(std::lround(kKyScanStep / h)));
  const int right_steps = grid.n_points - 1 - sh.table.zero_index;
  while (stride > 1 &&
         (sh.table.zero_index % stride || right_steps % stride))
    --stride;

  std::vector<ShootingResult> roots;
  double prev_ky = mu_abs + kKyScanStep;
  double prev_f = sh.matching(prev_ky, stride);
  for (int j = 2;; ++j) {
    const double ky = mu_abs + j * kKyScanStep;
    if (ky > ky_max + 1e-12) break;
    const double f = sh.matching(ky, stride);
    const bool crossing = (prev_f == 0.0) || ((prev_f < 0.0) != (f < 0.0));
    if (crossing) {
      double lo = prev_ky, hi = ky;
      double flo = prev_f, fhi = f;
      int pre_evals = 0;
      if (stride > 1) {
        // brackets found on the coarse walk are re-established at the grid's
        // own step before refinement
        flo = sh.matching(lo, 1);
        fhi = sh.matching(hi, 1);
        pre_evals = 2;
        if (flo != 0.0 && (flo < 0.0) == (fhi < 0.0)) {
          lo = std::max(mu_abs + 0.5 * kKyScanStep, lo - kKyScanStep);
          hi = std::min(ky_max, hi + kKyScanStep);
          flo = sh.matching(lo, 1);
          fhi = sh.matching(hi, 1);
          pre_evals += 2;
        }
      }
      if (flo == 0.0 || (flo < 0.0) != (fhi < 0.0)) {
        const auto refined = refine_root(sh, lo, hi, flo, fhi, tol);
        if (refined && confirm_root(p, sh, refined->ky)) {
          ShootingResult r;
          r.ky = refined->ky;
          r.matching_residual = refined->residual;
          r.iterations = refined->evals + pre_evals;
          r.bracket = {prev_ky, ky};
          roots.push_back(r);
        }
      }
    }
    prev_ky = ky;
    prev_f = f;
  }
  std::sort(roots.begin(), roots.end(),
            [](const ShootingResult& a, const ShootingResult& b) {
              return a.ky < b.ky;
            });
  return roots;
}

double l2_normalize(std::vector<SpinorSample>& samples, const Grid& grid) {
  if (int(samples.size()) != grid.n_points)
    throw std::invalid_argument("l2_normalize: samples do not match grid");
  const double h = grid.spacing();
  const auto density = [&](int i) {
    return std::norm(samples[i].psiA) + std::norm(samples[i].psiB);
  };
  double integral = 0.0;
  if (grid.n_points % 2 == 1) {
    for (int i = 0; i + 2 < grid.n_points; i += 2)
      integral += h / 3.0 * (density(i) + 4.0 * density(i + 1) + density(i + 2));
  } else {
    integral += 0.5 * h * (density(0) + density(grid.n_points - 1));
    for (int i = 1; i + 1 < grid.n_points; ++i) integral += h * density(i);
  }
  const double norm = std::sqrt(integral);
  if (!(norm > 1e-300))
    throw std::invalid_argument("l2_normalize: degenerate (near-zero) input");
  const double inv = 1.0 / norm;
  for (SpinorSample& s : samples) {
    s.psiA *= inv;
    s.psiB *= inv;
    s.dpsiA *= inv;
    s.dpsiB *= inv;
  }
  return norm;
}

double estimate_decay_rate(const std::vector<SpinorSample>& samples,
                           double tail_start) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const SpinorSample& s : samples) {
    if (s.x <= tail_start) continue;
    const double mag = std::abs(s.psiA) + std::abs(s.psiB);
    if (!std::isfinite(mag) || mag < 1e-290)
      throw std::invalid_argument("estimate_decay_rate: underflowed tail");
    xs.push_back(s.x);
    ys.push_back(-std::log(mag));
  }
  if (xs.size() < 8)
    throw std::invalid_argument(
        "estimate_decay_rate: fewer than 8 tail points");
  Eigen::MatrixXd a(xs.size(), 2);
  Eigen::VectorXd y(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a(i, 0) = xs[i];
    a(i, 1) = 1.0;
    y(i) = ys[i];
  }
  const Eigen::Vector2d fit = a.colPivHouseholderQr().solve(y);
  return fit(0);
}

}  // namespace zeromodes::numeric
