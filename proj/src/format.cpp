#include "recip/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace recip {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return std::signbit(x) ? "-0" : "0";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_complex(std::complex<double> z) {
  std::string im = format_number(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_number(z.real()) + im + "i";
}

void write_csv(std::ostream& out, const SpectralSeries<double>& series) {
  out << "omega,avg_energy,intensity\n";
  for (const auto& row : series.rows) {
    out << format_number(row.omega) << ',' << format_number(row.avg_energy) << ','
        << format_number(row.intensity) << '\n';
  }
}

}  // namespace recip
