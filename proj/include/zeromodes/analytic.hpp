#ifndef ZEROMODES_ANALYTIC_HPP
#define ZEROMODES_ANALYTIC_HPP

#include <vector>

#include "zeromodes/model.hpp"
#include "zeromodes/types.hpp"

namespace zeromodes::analytic {

/// One admissible zero-energy mode.  ky is the positive root of the
/// transverse-momentum pair (the negative root is the same mode with the
/// spinor components swapped); kappa = sqrt(ky^2 - mu^2) > 0 is the
/// asymptotic decay rate:
///   electron well: kappa = lambda - 1/2 - n,  n < lambda - 1/2
///   hole well:     kappa = -lambda - 1/2 - n, n < -lambda - 1/2
struct ZeroMode {
  int n = 0;
  double ky = 0.0;
  model::Regime regime = model::Regime::Invalid;
  double kappa = 0.0;
};

/// Pointwise spinor data with closed-form x-derivatives, as needed by the
/// first-order residual checks.
struct SpinorSample {
  double x = 0.0;
  Complex psiA;
  Complex psiB;
  Complex dpsiA;
  Complex dpsiB;
};

/// Sign of the transverse momentum the spinor is assembled for.  Minus is
/// the swapped spinor (psiA <-> psiB), which solves the system with
/// ky -> -ky.
enum class KySign { Plus, Minus };

/// Number of admissible n (strict inequality; the marginal integer case is
/// excluded).  Zero for the no-bound-state band and for lambda = 0.
int zero_mode_count(const model::PotentialParams& p);

/// All admissible modes, n ascending (ky descending).  Empty for the
/// no-bound-state band; throws std::invalid_argument for lambda = 0.
std::vector<ZeroMode> zero_mode_spectrum(const model::PotentialParams& p);

/// Single mode by quantum number; throws with the valid range spelled out
/// if n is inadmissible.
ZeroMode zero_mode(const model::PotentialParams& p, int n);

// First decoupled component (Plus branch) and its partner (Minus branch),
// unnormalized, exactly in closed form:
//   psi1 = (sech x)^s exp[c gd(x)] P_n^{(a,b)}(i sinh x),   gd = atan(sinh)
// with (s, c, a, b) per regime.  psi2 is fixed by the first-order relation
//   (V - i d/dx) psi1 + i ky psi2 = 0,
// which pins its coefficient to i(n - lambda + i mu + 1/2)/ky in the
// electron case and -i(n + lambda + i mu + 1/2)/ky in the hole case.
Complex psi1_value(const model::PotentialParams& p, const ZeroMode& m,
                   double x);
Complex psi1_derivative(const model::PotentialParams& p, const ZeroMode& m,
                        double x);
Complex psi1_second_derivative(const model::PotentialParams& p,
                               const ZeroMode& m, double x);
Complex psi2_value(const model::PotentialParams& p, const ZeroMode& m,
                   double x);
Complex psi2_derivative(const model::PotentialParams& p, const ZeroMode& m,
                        double x);
Complex psi2_second_derivative(const model::PotentialParams& p,
                               const ZeroMode& m, double x);

/// The partner coefficient fixed by the first-order relation (denominator
/// ky).
Complex psi2_coefficient(const model::PotentialParams& p, const ZeroMode& m);

/// Variant with the signed decay rate in place of ky in the denominator
/// (lambda - 1/2 - n electron, lambda + n + 1/2 hole).  Coincides with
/// psi2_coefficient at mu = 0 in the electron case and equals the -ky
/// solution's coefficient at mu = 0 in the hole case; otherwise it is off
/// by the real ratio ky/kappa.  Kept purely as a cross-check of which
/// convention the relation actually fixes; never used to build spinors.
Complex psi2_coefficient_kappa_form(const model::PotentialParams& p,
                                    const ZeroMode& m);

/// Dirac spinor psiA = (psi1 + psi2)/2, psiB = (psi1 - psi2)/2 for the
/// positive ky root; KySign::Minus returns the swapped pair, a solution
/// for -ky.  Derivatives are closed-form.
SpinorSample spinor_value(const model::PotentialParams& p, const ZeroMode& m,
                          KySign sign, double x);

/// Spinor assembled from the kappa-form partner coefficient, evaluated in
/// the prefactor-times-bracket structure
///   1/2 (sech x)^s exp[c2 gd] [exp(+-i gd) P_n^{(a,b)} +- C_kappa P_n^{(a',b')}].
/// Cross-check only: equals spinor_value at mu = 0 (electron case) and is
/// otherwise detuned by the ky/kappa factor on the partner term.
SpinorSample spinor_value_kappa_form(const model::PotentialParams& p,
                                     const ZeroMode& m, KySign sign, double x);

}  // namespace zeromodes::analytic

#endif
