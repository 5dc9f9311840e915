#include "zeromodes/units.hpp"

#include <cmath>
#include <stdexcept>

namespace zeromodes::units {

PhysicalMode convert_units(double ky_dimensionless, double length_scale_nm) {
  if (!(length_scale_nm > 0.0) || !std::isfinite(length_scale_nm))
    throw std::invalid_argument("convert_units: length scale must be positive");
  PhysicalMode out;
  out.ky_per_nm = ky_dimensionless / length_scale_nm;
  out.energy_mev = kHbarVfMevNm * out.ky_per_nm;
  return out;
}

}  // namespace zeromodes::units
