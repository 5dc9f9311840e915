#ifndef ZEROMODES_NUMERIC_HPP
#define ZEROMODES_NUMERIC_HPP

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "zeromodes/analytic.hpp"
#include "zeromodes/model.hpp"

namespace zeromodes::numeric {

/// Uniform 1-D sampling of the x axis.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double point(int i) const { return x_min + spacing() * i; }
  Eigen::ArrayXd points() const;

  /// Validates x_min < x_max, n_points >= 3, finite bounds.
  static Grid make(double x_min, double x_max, int n_points);

  /// [-25, 25] at spacing 0.01.
  static Grid default_verification();
};

/// One converged root of the matching function.
struct ShootingResult {
  double ky = 0.0;
  double matching_residual = 0.0;  // |matching determinant| at convergence
  int iterations = 0;              // matching-function evaluations spent refining
  std::pair<double, double> bracket{0.0, 0.0};
};

/// Closed-form spinor sampled on a grid (convenience for the residual and
/// quadrature routines below).
std::vector<analytic::SpinorSample> sample_spinor(
    const model::PotentialParams& p, const analytic::ZeroMode& m,
    analytic::KySign sign, const Grid& grid);

/// Max over samples of the larger of the two coupled first-order equation
/// residuals at zero energy,
///   |V psiA - i(psiB' + ky psiB)|  and  |V psiB - i(psiA' - ky psiA)|,
/// using the derivative fields carried by the samples.
double dirac_residual(const model::PotentialParams& p, double ky,
                      const std::vector<analytic::SpinorSample>& samples);

/// Max |-psi'' + V_branch(x; ky) psi| over aligned (x, psi) samples and
/// supplied second derivatives (the ky^2 term sits inside V_branch; the
/// eigenvalue is zero).
double schrodinger_residual(const model::PotentialParams& p, model::Branch br,
                            double ky,
                            const std::vector<std::pair<double, Complex>>& values,
                            const std::vector<Complex>& second_derivs);

/// Independent spectrum oracle: locates every ky in (|mu|, ky_max] at which
/// the first-order system admits a solution decaying at both ends.  The
/// 2-component system is integrated from each end of the grid with the
/// constant-coefficient decaying initial condition (rate kappa =
/// sqrt(ky^2 - mu^2)), renormalized every ~5 units against under/overflow,
/// and matched at x = 0 through a 2x2 determinant.  Initial phases are
/// chosen with psiA real and psiB imaginary, which makes the determinant
/// purely imaginary, so det/i is a real function of ky scanned for sign
/// changes in steps of 0.01 (smaller than any mode gap in the supported
/// parameter range) and refined by bisection plus a secant polish to
/// |d ky| <= tol.  The scan phase runs the integrator at step
/// max(spacing, 0.01) for bracketing only; every bracket is re-verified and
/// refined at the grid's own spacing.  Each root is confirmed against a
/// finite-difference Dirac residual near the matching point, which rejects
/// spurious sign changes (none are known, but the scan cannot exclude them
/// a priori).  Never calls any closed-form solver routine.
///
/// Requirements: the grid must straddle 0 with both ends integer multiples
/// of the spacing; ky_max > |mu|; lambda != 0.  A no-bound-state regime
/// returns an empty list.  Roots with kappa below ~10/half-width are
/// outside the grid's resolving power (the tails no longer fit) and near
/// the ky = |mu| threshold the scan starts one step in; see README.
std::vector<ShootingResult> shoot_spectrum(const model::PotentialParams& p,
                                           double ky_max, const Grid& grid,
                                           double tol);

/// Quadrature of integral(|psiA|^2 + |psiB|^2) dx over the grid (composite
/// Simpson for an odd point count, trapezoid otherwise); scales the samples
/// so the integral is 1 and returns the original L2 norm.  Throws for a
/// norm below 1e-300.
double l2_normalize(std::vector<analytic::SpinorSample>& samples,
                    const Grid& grid);

/// Least-squares slope of -log(|psiA| + |psiB|) against x over the tail
/// x > tail_start.  Needs at least 8 tail points with nonvanishing,
/// non-underflowed magnitudes.
double estimate_decay_rate(const std::vector<analytic::SpinorSample>& samples,
                           double tail_start);

}  // namespace zeromodes::numeric

#endif
