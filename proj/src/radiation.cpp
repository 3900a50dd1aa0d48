#include "recip/radiation.hpp"

#include <string>

namespace recip {

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::planck: return "planck";
    case Statistics::bounded: return "bounded";
    case Statistics::fermi_odd: return "fermi-odd";
    case Statistics::fermi_even: return "fermi-even";
  }
  return "unknown";
}

Statistics parse_statistics(std::string_view name) {
  for (const Statistics s : {Statistics::planck, Statistics::bounded, Statistics::fermi_odd, Statistics::fermi_even}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown statistics '" + std::string(name) + "'");
}

}  // namespace recip
