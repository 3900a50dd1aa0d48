#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "recip/radiation.hpp"

namespace recip {

/// Shortest decimal string that parses back to exactly `x` (at most 17
/// significant digits). Infinities print as "inf"/"-inf", NaN as "nan".
std::string format_number(double x);

/// "re+imi" / "re-imi" using format_number for both parts.
std::string format_complex(std::complex<double> z);

/// Header `omega,avg_energy,intensity`, then one row per point.
void write_csv(std::ostream& out, const SpectralSeries<double>& series);

}  // namespace recip
