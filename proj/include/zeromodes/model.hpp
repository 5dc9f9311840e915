#ifndef ZEROMODES_MODEL_HPP
#define ZEROMODES_MODEL_HPP

#include <array>

#include "zeromodes/types.hpp"

namespace zeromodes::model {

/// The confining well V(x) = -lambda sech x + mu tanh x (dimensionless).
/// lambda > 0 is a well for electrons, lambda < 0 for holes; mu tilts the
/// asymptotes to -+mu.
struct PotentialParams {
  double lambda = 0.0;
  double mu = 0.0;
};

/// Which of the two decoupled Schroedinger-like equations a component obeys:
/// Plus carries -i dV/dx, Minus +i dV/dx.
enum class Branch { Plus, Minus };

enum class ScarfCase { A, B, C, D };

/// Parameters of the canonical complex sech-squared form
///   U_S(x) = -(B^2 + A^2 + A) sech^2 x + i B (2A + 1) sech x tanh x.
struct ScarfParams {
  Complex A;
  Complex B;
  ScarfCase case_label = ScarfCase::A;
};

/// Partition of the lambda axis by bound-state content.
enum class Regime { ElectronBound, HoleBound, NoBoundStates, Invalid };

const char* to_string(Regime r);
const char* to_string(ScarfCase c);

/// Throws std::invalid_argument if lambda or mu is not finite.
void validate(const PotentialParams& p);

/// ElectronBound iff lambda > 1/2, HoleBound iff lambda < -1/2,
/// Invalid iff lambda == 0, NoBoundStates otherwise (boundaries included).
Regime classify_regime(const PotentialParams& p);

/// V(x) = -lambda sech x + mu tanh x.
double potential_value(const PotentialParams& p, double x);

/// dV/dx = lambda sech x tanh x + mu sech^2 x (analytic).
double potential_derivative(const PotentialParams& p, double x);

/// The mu = 0 reduction -lambda sech x (the symmetric single well).
double potential_tilde_value(const PotentialParams& p, double x);

/// Effective complex potential of the chosen branch, in the explicit
/// sech^2 / sech tanh coefficient form:
///   (mu^2 -+ i mu - lambda^2) sech^2 x
///   + lambda (2 mu -+ i) sech x tanh x + ky^2 - mu^2.
Complex effective_potential(const PotentialParams& p, Branch br, double ky,
                            double x);

/// Same quantity from its defining combination -V^2 -+ i dV/dx + ky^2.
/// Must agree with effective_potential to roundoff; kept as the second
/// algebraic route for cross-checking.
Complex effective_potential_from_definition(const PotentialParams& p,
                                            Branch br, double ky, double x);

/// U_S(x) for given (A, B).
Complex scarf_potential_value(const ScarfParams& s, double x);

/// The four (A, B) assignments that reproduce the Plus-branch effective
/// potential (up to the constant ky^2 - mu^2):
///   (a) A = lambda - 1/2,  B = -1/2 - i mu
///   (b) A = -lambda - 1/2, B = 1/2 + i mu
///   (c) A = i mu,          B = -lambda
///   (d) A = -1 - i mu,     B = lambda
/// For the Minus branch the parameter sets (conj A, -conj B) are returned,
/// which is what reproduces the conjugated potential (the cross term of the
/// canonical form carries an explicit i).  No admissibility filtering
/// happens here.
std::array<ScarfParams, 4> scarf_parameters(const PotentialParams& p,
                                            Branch br);

}  // namespace zeromodes::model

#endif
