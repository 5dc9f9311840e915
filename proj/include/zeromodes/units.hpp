#ifndef ZEROMODES_UNITS_HPP
#define ZEROMODES_UNITS_HPP

namespace zeromodes::units {

// hbar = 6.582e-16 eV s, Fermi velocity 1e6 m/s -> hbar v_F in meV nm.
inline constexpr double kHbarEvS = 6.582e-16;
inline constexpr double kFermiVelocityMps = 1.0e6;
inline constexpr double kHbarVfMevNm =
    kHbarEvS * kFermiVelocityMps * 1.0e3 * 1.0e9;  // 658.2

struct PhysicalMode {
  double energy_mev = 0.0;
  double ky_per_nm = 0.0;
};

/// Dimensionless ky -> (E in meV, ky in 1/nm) for a well of the given
/// length scale in nm.  Throws for a nonpositive scale.
PhysicalMode convert_units(double ky_dimensionless, double length_scale_nm);

}  // namespace zeromodes::units

#endif
