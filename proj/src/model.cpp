#include "zeromodes/model.hpp"

#include <cmath>
#include <stdexcept>

namespace zeromodes::model {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::ElectronBound: return "ElectronBound";
    case Regime::HoleBound: return "HoleBound";
    case Regime::NoBoundStates: return "NoBoundStates";
    case Regime::Invalid: return "Invalid";
  }
  return "Invalid";
}

const char* to_string(ScarfCase c) {
  switch (c) {
    case ScarfCase::A: return "a";
    case ScarfCase::B: return "b";
    case ScarfCase::C: return "c";
    case ScarfCase::D: return "d";
  }
  return "?";
}

void validate(const PotentialParams& p) {
  if (!std::isfinite(p.lambda) || !std::isfinite(p.mu))
    throw std::invalid_argument("potential parameters must be finite");
}

Regime classify_regime(const PotentialParams& p) {
  validate(p);
  if (p.lambda == 0.0) return Regime::Invalid;
  if (p.lambda > 0.5) return Regime::ElectronBound;
  if (p.lambda < -0.5) return Regime::HoleBound;
  return Regime::NoBoundStates;
}

double potential_value(const PotentialParams& p, double x) {
  return -p.lambda / std::cosh(x) + p.mu * std::tanh(x);
}

double potential_derivative(const PotentialParams& p, double x) {
  const double sech = 1.0 / std::cosh(x);
  return p.lambda * sech * std::tanh(x) + p.mu * sech * sech;
}

double potential_tilde_value(const PotentialParams& p, double x) {
  return -p.lambda / std::cosh(x);
}

Complex effective_potential(const PotentialParams& p, Branch br, double ky,
                            double x) {
  // Branch enters only through the sign of the imaginary parts, so the
  // Minus value is the exact floating-point conjugate of the Plus value.
  const double im = br == Branch::Plus ? -1.0 : 1.0;
  const Complex sech2_coeff{p.mu * p.mu - p.lambda * p.lambda, im * p.mu};
  const Complex mix_coeff = p.lambda * Complex{2.0 * p.mu, im};
  const double sech = 1.0 / std::cosh(x);
  const double tanh = std::tanh(x);
  return sech2_coeff * (sech * sech) + mix_coeff * (sech * tanh) +
         (ky * ky - p.mu * p.mu);
}

Complex effective_potential_from_definition(const PotentialParams& p,
                                            Branch br, double ky, double x) {
  const double v = potential_value(p, x);
  const double dv = potential_derivative(p, x);
  const double im = br == Branch::Plus ? -1.0 : 1.0;
  return Complex{-v * v + ky * ky, im * dv};
}

Complex scarf_potential_value(const ScarfParams& s, double x) {
  const double sech = 1.0 / std::cosh(x);
  const double tanh = std::tanh(x);
  const Complex i{0.0, 1.0};
  return -(s.B * s.B + s.A * s.A + s.A) * (sech * sech) +
         i * s.B * (2.0 * s.A + 1.0) * (sech * tanh);
}

std::array<ScarfParams, 4> scarf_parameters(const PotentialParams& p,
                                            Branch br) {
  validate(p);
  const double l = p.lambda;
  const double m = p.mu;
  std::array<ScarfParams, 4> out{{
      {{l - 0.5, 0.0}, {-0.5, -m}, ScarfCase::A},
      {{-l - 0.5, 0.0}, {0.5, m}, ScarfCase::B},
      {{0.0, m}, {-l, 0.0}, ScarfCase::C},
      {{-1.0, -m}, {l, 0.0}, ScarfCase::D},
  }};
  if (br == Branch::Minus) {
    // Conjugating the potential maps the canonical-form parameters to
    // (conj A, -conj B): the cross term carries an explicit factor i, so a
    // bare conjugate of B would flip its sign.
    for (auto& s : out) {
      s.A = std::conj(s.A);
      s.B = -std::conj(s.B);
    }
  }
  return out;
}

}  // namespace zeromodes::model
