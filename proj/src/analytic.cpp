#include "zeromodes/analytic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zeromodes/specfun.hpp"

namespace zeromodes::analytic {
namespace {

using model::PotentialParams;
using model::Regime;
using specfun::JacobiParams;

constexpr Complex kI{0.0, 1.0};

// log(cosh x) without overflow: |x| + log1p(e^{-2|x|}) - log 2.
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - 0.6931471805599453094172321215;
}

double admissibility_bound(const PotentialParams& p) {
  return std::abs(p.lambda) - 0.5;
}

void check_mode(const PotentialParams& p, const ZeroMode& m) {
  const Regime r = model::classify_regime(p);
  if (m.regime != r || r == Regime::Invalid || r == Regime::NoBoundStates)
    throw std::invalid_argument("zero mode does not belong to this potential");
  if (m.n < 0 || double(m.n) >= admissibility_bound(p))
    throw std::invalid_argument("zero mode quantum number out of range");
}

// Closed-form building block (sech x)^s exp[c gd(x)] P_n^{(a,b)}(i sinh x),
// times an overall scale.
struct ComponentBasis {
  double sech_power = 0.0;
  Complex phase_coeff;
  JacobiParams poly;
  Complex scale{1.0, 0.0};
};

ComponentBasis psi1_basis(const PotentialParams& p, const ZeroMode& m) {
  ComponentBasis b;
  if (m.regime == Regime::ElectronBound) {
    b.sech_power = p.lambda - 0.5;
    b.phase_coeff = Complex{-p.mu, 0.5};
    b.poly = {{-p.lambda - 0.5, -p.mu}, {-p.lambda + 0.5, p.mu}, m.n};
  } else {
    b.sech_power = -p.lambda - 0.5;
    b.phase_coeff = Complex{p.mu, -0.5};
    b.poly = {{p.lambda + 0.5, p.mu}, {p.lambda - 0.5, -p.mu}, m.n};
  }
  return b;
}

Complex partner_coefficient(const PotentialParams& p, const ZeroMode& m,
                            double denominator) {
  if (m.regime == Regime::ElectronBound)
    return kI * (Complex{m.n - p.lambda + 0.5, p.mu}) / denominator;
  return -kI * (Complex{m.n + p.lambda + 0.5, p.mu}) / denominator;
}

ComponentBasis psi2_basis(const PotentialParams& p, const ZeroMode& m,
                          double denominator) {
  ComponentBasis b = psi1_basis(p, m);
  // Partner phase is shifted by -+i gd and the superscripts ladder by
  // (+1, -1) (electron) or (-1, +1) (hole).
  if (m.regime == Regime::ElectronBound) {
    b.phase_coeff -= kI;
    b.poly.a += 1.0;
    b.poly.b -= 1.0;
  } else {
    b.phase_coeff += kI;
    b.poly.a -= 1.0;
    b.poly.b += 1.0;
  }
  b.scale = partner_coefficient(p, m, denominator);
  return b;
}

struct Eval {
  Complex value;
  Complex d1;
  Complex d2;
};

Eval evaluate(const ComponentBasis& b, double x, int order) {
  const double gd = specfun::gudermannian_phase(x);
  const double tanhx = std::tanh(x);
  const double sechx = 1.0 / std::cosh(x);
  const Complex env =
      b.scale * std::exp(b.phase_coeff * gd - b.sech_power * log_cosh(x));
  const Complex z{0.0, std::sinh(x)};
  const Complex poly = specfun::jacobi_poly(b.poly, z);
  Eval out;
  out.value = env * poly;
  if (order < 1) return out;
  // envelope log-derivative g and chain rule through z = i sinh x
  const Complex g = b.phase_coeff * sechx - b.sech_power * tanhx;
  const Complex dz{0.0, std::cosh(x)};
  const Complex dpoly = specfun::jacobi_poly_derivative(b.poly, z);
  out.d1 = env * (g * poly + dz * dpoly);
  if (order < 2) return out;
  const Complex dg =
      -b.phase_coeff * (sechx * tanhx) - b.sech_power * (sechx * sechx);
  const Complex d2poly = specfun::jacobi_poly_second_derivative(b.poly, z);
  // z'' = z and (z')^2 = -cosh^2 x
  out.d2 = env * ((g * g + dg) * poly + (2.0 * g * dz + z) * dpoly -
                  (std::cosh(x) * std::cosh(x)) * d2poly);
  return out;
}

double signed_decay_rate(const PotentialParams& p, const ZeroMode& m) {
  return m.regime == Regime::ElectronBound ? p.lambda - 0.5 - m.n
                                           : p.lambda + m.n + 0.5;
}

}  // namespace

int zero_mode_count(const PotentialParams& p) {
  const Regime r = model::classify_regime(p);
  if (r != Regime::ElectronBound && r != Regime::HoleBound) return 0;
  // strict inequality n < |lambda| - 1/2: ceil counts both the integer and
  // non-integer threshold correctly
  return int(std::ceil(admissibility_bound(p)));
}

ZeroMode zero_mode(const PotentialParams& p, int n) {
  const Regime r = model::classify_regime(p);
  if (r == Regime::Invalid)
    throw std::invalid_argument(
        "lambda = 0 is the Invalid regime: no sech well to bind to");
  const double bound = admissibility_bound(p);
  if (r == Regime::NoBoundStates || n < 0 || double(n) >= bound) {
    std::ostringstream msg;
    if (zero_mode_count(p) == 0)
      msg << "no admissible modes for lambda = " << p.lambda
          << " (" << model::to_string(r) << ")";
    else
      msg << "n = " << n << " is inadmissible: n must satisfy n < " << bound;
    throw std::invalid_argument(msg.str());
  }
  ZeroMode m;
  m.n = n;
  m.regime = r;
  m.kappa = bound - n;
  m.ky = std::hypot(p.mu, m.kappa);
  return m;
}

std::vector<ZeroMode> zero_mode_spectrum(const PotentialParams& p) {
  const Regime r = model::classify_regime(p);
  if (r == Regime::Invalid)
    throw std::invalid_argument(
        "lambda = 0 is the Invalid regime: no sech well to bind to");
  std::vector<ZeroMode> modes;
  const int count = zero_mode_count(p);
  modes.reserve(count);
  for (int n = 0; n < count; ++n) modes.push_back(zero_mode(p, n));
  return modes;
}

Complex psi1_value(const PotentialParams& p, const ZeroMode& m, double x) {
  check_mode(p, m);
  return evaluate(psi1_basis(p, m), x, 0).value;
}

Complex psi1_derivative(const PotentialParams& p, const ZeroMode& m,
                        double x) {
  check_mode(p, m);
  return evaluate(psi1_basis(p, m), x, 1).d1;
}

Complex psi1_second_derivative(const PotentialParams& p, const ZeroMode& m,
                               double x) {
  check_mode(p, m);
  return evaluate(psi1_basis(p, m), x, 2).d2;
}

Complex psi2_value(const PotentialParams& p, const ZeroMode& m, double x) {
  check_mode(p, m);
  return evaluate(psi2_basis(p, m, m.ky), x, 0).value;
}

Complex psi2_derivative(const PotentialParams& p, const ZeroMode& m,
                        double x) {
  check_mode(p, m);
  return evaluate(psi2_basis(p, m, m.ky), x, 1).d1;
}

Complex psi2_second_derivative(const PotentialParams& p, const ZeroMode& m,
                               double x) {
  check_mode(p, m);
  return evaluate(psi2_basis(p, m, m.ky), x, 2).d2;
}

Complex psi2_coefficient(const PotentialParams& p, const ZeroMode& m) {
  check_mode(p, m);
  return partner_coefficient(p, m, m.ky);
}

Complex psi2_coefficient_kappa_form(const PotentialParams& p,
                                    const ZeroMode& m) {
  check_mode(p, m);
  return partner_coefficient(p, m, signed_decay_rate(p, m));
}

SpinorSample spinor_value(const PotentialParams& p, const ZeroMode& m,
                          KySign sign, double x) {
  check_mode(p, m);
  const Eval e1 = evaluate(psi1_basis(p, m), x, 1);
  const Eval e2 = evaluate(psi2_basis(p, m, m.ky), x, 1);
  SpinorSample s;
  s.x = x;
  s.psiA = 0.5 * (e1.value + e2.value);
  s.psiB = 0.5 * (e1.value - e2.value);
  s.dpsiA = 0.5 * (e1.d1 + e2.d1);
  s.dpsiB = 0.5 * (e1.d1 - e2.d1);
  if (sign == KySign::Minus) {
    std::swap(s.psiA, s.psiB);
    std::swap(s.dpsiA, s.dpsiB);
  }
  return s;
}

SpinorSample spinor_value_kappa_form(const PotentialParams& p,
                                     const ZeroMode& m, KySign sign,
                                     double x) {
  check_mode(p, m);
  // Literal prefactor-times-bracket structure: the shared envelope carries
  // the partner's phase and the leading term restores its own through
  // exp(+-i gd).
  ComponentBasis b2 = psi2_basis(p, m, signed_decay_rate(p, m));
  const Complex coeff = b2.scale;
  b2.scale = 1.0;
  const double gd = specfun::gudermannian_phase(x);
  const double electron = m.regime == Regime::ElectronBound ? 1.0 : -1.0;
  const Complex prefactor =
      0.5 * std::exp(b2.phase_coeff * gd - b2.sech_power * log_cosh(x));
  const ComponentBasis b1 = psi1_basis(p, m);
  const Complex lead = std::exp(electron * kI * gd) *
                       specfun::jacobi_poly(b1.poly, Complex{0.0, std::sinh(x)});
  const Complex partner =
      coeff * specfun::jacobi_poly(b2.poly, Complex{0.0, std::sinh(x)});
  SpinorSample s;
  s.x = x;
  s.psiA = prefactor * (lead + partner);
  s.psiB = prefactor * (lead - partner);
  if (sign == KySign::Minus) std::swap(s.psiA, s.psiB);
  return s;
}

}  // namespace zeromodes::analytic
