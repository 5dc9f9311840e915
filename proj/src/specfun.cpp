#include "zeromodes/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace zeromodes::specfun {
namespace {

constexpr double kHalfPi = 1.57079632679489661923;

void check(const JacobiParams& p) {
  if (p.n < 0) throw std::invalid_argument("jacobi_poly: degree n must be >= 0");
  if (!std::isfinite(p.a.real()) || !std::isfinite(p.a.imag()) ||
      !std::isfinite(p.b.real()) || !std::isfinite(p.b.imag()))
    throw std::invalid_argument("jacobi_poly: superscripts must be finite");
}

// Integer power by repeated multiplication; pow(0, 0) = 1 by convention,
// which std::pow(Complex, double) would turn into NaN.
Complex ipow(Complex base, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Finite double-binomial sum,
//   P_n^{(a,b)}(z) = sum_s C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^{n-s},
// with the generalized binomials expanded as Pochhammer products so that no
// parameter combination ever lands in a denominator.
Complex jacobi_sum(const JacobiParams& p, Complex z) {
  const Complex zm = 0.5 * (z - 1.0);
  const Complex zp = 0.5 * (z + 1.0);
  Complex total = 0.0;
  for (int s = 0; s <= p.n; ++s) {
    Complex term = ipow(zm, s) * ipow(zp, p.n - s);
    for (int j = 0; j < p.n - s; ++j) term *= p.a + double(s + 1 + j);
    for (int j = 2; j <= p.n - s; ++j) term /= double(j);
    for (int j = 0; j < s; ++j) term *= p.b + double(p.n - s + 1 + j);
    for (int j = 2; j <= s; ++j) term /= double(j);
    total += term;
  }
  return total;
}

}  // namespace

double gudermannian_phase(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("gudermannian_phase: x must be finite");
  if (x > 700.0) return kHalfPi;
  if (x < -700.0) return -kHalfPi;
  return std::atan(std::sinh(x));
}

Complex jacobi_poly(const JacobiParams& p, Complex z) {
  check(p);
  if (p.n == 0) return 1.0;
  const Complex a = p.a;
  const Complex b = p.b;
  const Complex apb = a + b;
  Complex prev = 1.0;
  Complex cur = 0.5 * (a - b) + 0.5 * (apb + 2.0) * z;
  for (int k = 2; k <= p.n; ++k) {
    const Complex t = 2.0 * k + apb;  // 2k + a + b
    const Complex c0 = 2.0 * k * (double(k) + apb) * (t - 2.0);
    const double scale =
        2.0 * k * (k + std::abs(apb)) * (2.0 * k + std::abs(apb) + 2.0) + 1.0;
    if (std::abs(c0) < 1e-12 * scale) return jacobi_sum(p, z);
    const Complex c1 = (t - 1.0) * (a * a - b * b);
    const Complex cz = (t - 2.0) * (t - 1.0) * t;
    const Complex c3 = 2.0 * (double(k) + a - 1.0) * (double(k) + b - 1.0) * t;
    const Complex next = ((c1 + cz * z) * cur - c3 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex jacobi_poly_derivative(const JacobiParams& p, Complex z) {
  check(p);
  if (p.n == 0) return 0.0;
  const JacobiParams up{p.a + 1.0, p.b + 1.0, p.n - 1};
  return 0.5 * (double(p.n) + p.a + p.b + 1.0) * jacobi_poly(up, z);
}

Complex jacobi_poly_second_derivative(const JacobiParams& p, Complex z) {
  check(p);
  if (p.n < 2) return 0.0;
  const JacobiParams up{p.a + 2.0, p.b + 2.0, p.n - 2};
  const Complex npab = double(p.n) + p.a + p.b;
  return 0.25 * (npab + 1.0) * (npab + 2.0) * jacobi_poly(up, z);
}

}  // namespace zeromodes::specfun
