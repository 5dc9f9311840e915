#ifndef ZEROMODES_SPECFUN_HPP
#define ZEROMODES_SPECFUN_HPP

#include "zeromodes/types.hpp"

namespace zeromodes::specfun {

/// Degree and (possibly complex) superscript pair of a Jacobi polynomial
/// P_n^{(a,b)}.  The closed-form spinor components of the sech/tanh well
/// need superscripts like -lambda - i mu - 1/2, so nothing here assumes
/// a, b > -1 or even real.
struct JacobiParams {
  Complex a;
  Complex b;
  int n = 0;  // degree, >= 0
};

/// tan^-1(sinh x), the accumulated phase of the closed-form wavefunctions.
/// Odd in x, saturates at +-pi/2.  Total on finite inputs: sinh overflow is
/// short-circuited for |x| > 700, where the phase equals +-pi/2 to machine
/// precision anyway.
double gudermannian_phase(double x);

/// Value of P_n^{(a,b)}(z) via the three-term recurrence in the degree.
/// Exact polynomial evaluation, no truncation.  If a recurrence step
/// degenerates (k + a + b or 2k + a + b - 2 numerically zero, which can
/// happen when a + b is a negative integer), the evaluation falls back to
/// the finite hypergeometric sum, which has no parameter denominators.
Complex jacobi_poly(const JacobiParams& p, Complex z);

/// d/dz P_n^{(a,b)}(z) = ((n + a + b + 1) / 2) P_{n-1}^{(a+1,b+1)}(z);
/// zero for n = 0.
Complex jacobi_poly_derivative(const JacobiParams& p, Complex z);

/// Second z-derivative, by applying the derivative ladder twice.
Complex jacobi_poly_second_derivative(const JacobiParams& p, Complex z);

}  // namespace zeromodes::specfun

#endif
