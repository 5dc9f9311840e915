#ifndef ZEROMODES_VERIFY_HPP
#define ZEROMODES_VERIFY_HPP

#include <string>
#include <vector>

#include "zeromodes/model.hpp"

namespace zeromodes::verify {

/// Tolerance preset for a verification run.  "residual_tol" governs the
/// first-order checks (Dirac system, intertwining); the second-order
/// Schroedinger residual gets 100x that, reflecting the extra cancellation
/// in a second derivative.
struct Profile {
  std::string name;
  double residual_tol;       // Dirac / intertwining residuals
  double schrodinger_tol;    // second-order residual
  double oracle_tol;         // |shooting root - closed-form ky|
  double grid_spacing;       // residual/decay verification grid
  double shoot_spacing;      // integrator step of the spectrum oracle
  double decay_rate_rel_tol = 0.01;

  static Profile fast();    // 1e-8 / 1e-6 / 1e-6, spacings 0.01
  static Profile strict();  // 1e-10 / 1e-8 / 1e-7, spacings 0.002
};

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  model::PotentialParams params;
  std::string profile_name;
  int modes = 0;
  std::vector<Check> checks;

  bool all_passed() const;
};

/// Runs the full invariant suite for one (lambda, mu): the two algebraic
/// routes to the effective potentials, the canonical-form reconstruction
/// for all four parameter cases, branch conjugation, the parity-conjugation
/// identity at mu = 0 (or its violation witness at mu != 0), and per mode
/// the Dirac/Schroedinger/intertwining residuals, the swapped-spinor -ky
/// system, the partner-coefficient convention characterization, decay-rate
/// fits, norm domain stability, and closed-form-versus-shooting spectrum
/// agreement (or the empty-spectrum agreement when no modes exist).
/// Throws std::invalid_argument for lambda = 0.
///
/// half_width_override, if positive, replaces the residual-grid half-width
/// (normally 25).
Report run_verification(const model::PotentialParams& p, const Profile& prof,
                        double half_width_override = 0.0);

}  // namespace zeromodes::verify

#endif
