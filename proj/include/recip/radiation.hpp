#pragma once

// Average oscillator energies under classical (Planck), bounded-energy and
// Fermi-analogue statistics, and the spectral intensity built on them:
//
//   I(w) = <E> w^2 / (pi^2 c^p),   p = 2 by default.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "recip/errors.hpp"
#include "recip/scalar_algebra.hpp"
#include "recip/symmetric_difference.hpp"

namespace recip {

enum class Statistics { planck, bounded, fermi_odd, fermi_even };
enum class Parity { odd, even };

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view name);

template <std::floating_point S>
struct ThermalParams {
  S hbar_omega;
  S kT;
  /// Energy bound W; required by bounded statistics.
  std::optional<S> bound;

  ThermalParams(S hbar_omega, S kT, std::optional<S> bound = std::nullopt)
      : hbar_omega(hbar_omega), kT(kT), bound(bound) {
    if (!(hbar_omega > S(0)) || !(kT > S(0))) throw DomainError("thermal parameters must be positive");
    if (bound && !(*bound > S(0))) throw DomainError("energy bound W must be positive");
  }
};

/// hw / (exp(hw/kT) - 1).
template <std::floating_point S>
S average_energy_planck(const ThermalParams<S>& p) {
  return p.hbar_omega / std::expm1(p.hbar_omega / p.kT);
}

/// Mean of E_n = n hw weighted by the bounded-decay solution at s = 1/kT,
/// over the admissible levels n = 0 .. floor(2W/hw).
template <std::floating_point S>
S average_energy_bounded(const ThermalParams<S>& p) {
  if (!p.bound) throw DomainError("bounded statistics need an energy bound W");
  const S bound = *p.bound;
  if (!(p.hbar_omega < S(2) * bound)) throw DomainError("bounded statistics require hw < 2W");

  const S s = S(1) / p.kT;
  const S n_max = std::floor(S(2) * bound / p.hbar_omega);
  // Each weight is at most g^n with g = exp(-hw/kT), which bounds the tail.
  const S g = std::exp(-p.hbar_omega / p.kT);
  const S tail_scale = S(1) / ((S(1) - g) * (S(1) - g));
  const S eps = std::numeric_limits<S>::epsilon() / S(16);

  S weighted = 0;
  S total = 0;
  for (S n = 0; n <= n_max; n += S(1)) {
    const S energy = std::min(n * p.hbar_omega, S(2) * bound);
    const S w = decay_weight(energy, bound, s);
    weighted += energy * w;
    total += w;
    const S tail = (n + S(2)) * std::pow(g, n + S(1)) * tail_scale;
    if (w == S(0) || (tail < eps * total && tail * p.hbar_omega < eps * weighted)) break;
  }
  return weighted / total;
}

/// odd: hw / (exp(hw/kT) + 1); even: -hw / (exp(hw/kT) - 1).
template <std::floating_point S>
S average_energy_fermi(const ThermalParams<S>& p, Parity parity) {
  const S x = p.hbar_omega / p.kT;
  if (parity == Parity::odd) return p.hbar_omega / (std::exp(x) + S(1));
  return -p.hbar_omega / std::expm1(x);
}

template <std::floating_point S>
S average_energy(Statistics statistics, const ThermalParams<S>& p) {
  switch (statistics) {
    case Statistics::planck: return average_energy_planck(p);
    case Statistics::bounded: return average_energy_bounded(p);
    case Statistics::fermi_odd: return average_energy_fermi(p, Parity::odd);
    case Statistics::fermi_even: return average_energy_fermi(p, Parity::even);
  }
  throw DomainError("unknown statistics");
}

/// Power of c in the denominator of the intensity prefactor. The default
/// keeps w^2/(pi^2 c^2); 3 gives the density-of-modes form w^2/(pi^2 c^3).
template <std::floating_point S>
struct SpectralPrefactor {
  S light_speed_exponent = S(2);
};

template <std::floating_point S>
S spectral_intensity(S omega, S avg_energy, LightSpeed<S> c = LightSpeed<S>{},
                     SpectralPrefactor<S> prefactor = SpectralPrefactor<S>{}) {
  if (!(omega > S(0))) throw DomainError("spectral intensity requires omega > 0");
  constexpr S pi2 = std::numbers::pi_v<S> * std::numbers::pi_v<S>;
  return avg_energy * omega * omega / (pi2 * std::pow(c.value(), prefactor.light_speed_exponent));
}

template <std::floating_point S>
struct SpectralRow {
  S omega;
  S avg_energy;
  S intensity;
};

template <std::floating_point S>
struct SpectralSeries {
  Statistics statistics;
  std::vector<SpectralRow<S>> rows;
};

template <std::floating_point S>
struct SpectrumRequest {
  S omega_min;
  S omega_max;
  std::size_t points;
  S kT;
  Statistics statistics = Statistics::planck;
  std::optional<S> bound;
  LightSpeed<S> c{};
  S hbar = S(1);
  SpectralPrefactor<S> prefactor{};
};

/// omega_min * (omega_max/omega_min)^(i/(points-1)); endpoints are exact.
template <std::floating_point S>
std::vector<S> geometric_grid(S omega_min, S omega_max, std::size_t points) {
  if (!(omega_min > S(0)) || !(omega_min < omega_max) || !std::isfinite(omega_max)) {
    throw DomainError("frequency range must satisfy 0 < omega_min < omega_max");
  }
  if (points < 2) throw DomainError("a spectrum needs at least two points");
  const S ratio = omega_max / omega_min;
  const S last = static_cast<S>(points - 1);
  std::vector<S> out(points);
  for (std::size_t i = 0; i < points; ++i) out[i] = omega_min * std::pow(ratio, static_cast<S>(i) / last);
  out.front() = omega_min;
  out.back() = omega_max;
  return out;
}

template <std::floating_point S>
SpectralSeries<S> spectrum_table(const SpectrumRequest<S>& req) {
  if (req.statistics == Statistics::bounded && !req.bound) {
    throw DomainError("bounded statistics need an energy bound W");
  }
  if (!(req.hbar > S(0))) throw DomainError("hbar must be positive");
  SpectralSeries<S> series{req.statistics, {}};
  const auto omegas = geometric_grid(req.omega_min, req.omega_max, req.points);
  series.rows.reserve(omegas.size());
  for (const S omega : omegas) {
    const ThermalParams<S> p(req.hbar * omega, req.kT, req.bound);
    const S avg = average_energy(req.statistics, p);
    series.rows.push_back({omega, avg, spectral_intensity(omega, avg, req.c, req.prefactor)});
  }
  return series;
}

}  // namespace recip
