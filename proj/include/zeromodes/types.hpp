#ifndef ZEROMODES_TYPES_HPP
#define ZEROMODES_TYPES_HPP

#include <complex>

namespace zeromodes {

using Complex = std::complex<double>;

}  // namespace zeromodes

#endif
