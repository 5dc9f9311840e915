// Test-only reference implementations, deliberately independent of the
// production evaluation paths.
#ifndef ZEROMODES_TESTS_ORACLES_HPP
#define ZEROMODES_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <random>

namespace oracles {

using Complex = std::complex<double>;

inline Complex ipow(Complex b, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Finite hypergeometric double sum with Pochhammer-product binomials; the
// production code uses the three-term recurrence instead.
inline Complex jacobi_series(Complex a, Complex b, int n, Complex z) {
  const Complex zm = 0.5 * (z - 1.0);
  const Complex zp = 0.5 * (z + 1.0);
  Complex total = 0.0;
  for (int s = 0; s <= n; ++s) {
    Complex c1 = 1.0;
    for (int j = 0; j < n - s; ++j) c1 *= a + double(s + 1 + j);
    for (int j = 2; j <= n - s; ++j) c1 /= double(j);
    Complex c2 = 1.0;
    for (int j = 0; j < s; ++j) c2 *= b + double(n - s + 1 + j);
    for (int j = 2; j <= s; ++j) c2 /= double(j);
    total += c1 * c2 * ipow(zm, s) * ipow(zp, n - s);
  }
  return total;
}

// sinh by its power series (converges fast for |x| <= 3).
inline double sinh_series(double x) {
  double term = x, sum = x;
  for (int k = 1; k < 40; ++k) {
    term *= x * x / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

// arctangent by argument halving plus the Maclaurin series; no std::atan.
inline double atan_series(double t) {
  if (t < 0.0) return -atan_series(-t);
  if (t > 0.25) {
    const double half = t / (1.0 + std::sqrt(1.0 + t * t));
    return 2.0 * atan_series(half);
  }
  double sum = 0.0, power = t;
  for (int k = 0; k < 60; ++k) {
    sum += (k % 2 == 0 ? 1.0 : -1.0) * power / (2.0 * k + 1.0);
    power *= t * t;
  }
  return sum;
}

inline double gudermannian_series(double x) { return atan_series(sinh_series(x)); }

// integer binomial via factorial products
inline double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= double(n - k + j) / double(j);
  return r;
}

// central difference of a complex function of a complex argument along the
// real direction
template <typename F>
Complex central_diff(F f, Complex z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20250811u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex(double radius) {
  return {uniform(-radius, radius), uniform(-radius, radius)};
}

}  // namespace oracles

#endif
