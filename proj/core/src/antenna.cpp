#include "swbeam/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace swbeam {

double sector_beam_length(double theta, double r) {
  if (!(theta > 0.0) || theta > kTwoPi) {
    throw std::invalid_argument("sector_beam_length: theta must be in (0, 2pi]");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("sector_beam_length: range must be positive");
  }
  return r * std::sqrt(kTwoPi / theta);
}

RegionWeights region_weights(double theta, double r, double n) {
  const double length = sector_beam_length(theta, r);
  if (n < 0.0) {
    throw std::invalid_argument("region_weights: neighborhood size must be >= 0");
  }
  const double disc_area = kPi * r * r;

  RegionWeights w;
  w.area_first = 0.5 * theta * r * r;
  const double inner = std::max(length - r, 0.0);
  w.area_last = std::min(0.5 * theta * (length * length - inner * inner), disc_area);
  w.p_first = 1.0 - std::pow(1.0 - w.area_first / disc_area, n);
  w.p_last = 1.0 - std::pow(1.0 - w.area_last / disc_area, n);
  return w;
}

double weighted_beam_length(double theta, double r, double n) {
  const RegionWeights w = region_weights(theta, r, n);
  return sector_beam_length(theta, r) * w.p_first * w.p_last;
}

double optimal_beamwidth(std::span<const double> candidates, double r, double n) {
  if (candidates.empty()) {
    throw std::invalid_argument("optimal_beamwidth: empty candidate set");
  }
  double best_theta = 0.0;
  double best_value = -1.0;
  for (const double theta : candidates) {
    const double value = weighted_beam_length(theta, r, n);
    if (value > best_value ||
        (value == best_value && theta < best_theta)) {
      best_value = value;
      best_theta = theta;
    }
  }
  return best_theta;
}

std::vector<double> default_beamwidth_grid() {
  std::vector<double> grid;
  grid.reserve(8);
  for (int k = 1; k <= 8; ++k) {
    grid.push_back(kTwoPi / (static_cast<double>(k) * k));
  }
  return grid;
}

bool sector_covers(Point origin, double orientation, double theta,
                   double length, Point target) {
  if (target.x == origin.x && target.y == origin.y) {
    return true;
  }
  if (!within_range(origin, target, length)) {
    return false;
  }
  const double diff = angle_difference(bearing(origin, target), orientation);
  return std::abs(diff) <= 0.5 * theta;
}

double ula_gain(int elements, double boresight, double phi) {
  if (elements < 1) {
    throw std::invalid_argument("ula_gain: element count must be >= 1");
  }
  const double m = static_cast<double>(elements);
  const double psi = kPi * (std::cos(phi) - std::cos(boresight));
  const double s = std::sin(0.5 * psi);
  const double s2 = s * s;
  // psi -> 2*pi*k limit (boresight and grating lobes): gain is exactly m.
  if (s2 < 1e-24) {
    return m;
  }
  const double num = std::sin(0.5 * m * psi);
  return (num * num) / (m * s2);
}

double ula_reach(int elements, double boresight, double phi, double r,
                 double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("ula_reach: path loss exponent must be positive");
  }
  return r * std::pow(ula_gain(elements, boresight, phi), 1.0 / alpha);
}

int map_sector_to_ula(double beam_length, double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("map_sector_to_ula: range must be positive");
  }
  const long m = std::lround(beam_length / r);
  return static_cast<int>(std::max(1L, m));
}

namespace {

bool ula_covers(const UlaAntenna& ula, Point origin, double base_range,
                Point target) {
  if (target.x == origin.x && target.y == origin.y) {
    return true;
  }
  const double phi = bearing(origin, target);
  double reach;
  if (ula.peak_reach > 0.0) {
    const double m = static_cast<double>(ula.elements);
    const double g = ula_gain(ula.elements, ula.boresight, phi);
    reach = ula.peak_reach * std::pow(g / m, 1.0 / ula.path_loss_exponent);
  } else {
    reach = ula_reach(ula.elements, ula.boresight, phi, base_range,
                      ula.path_loss_exponent);
  }
  return within_range(origin, target, reach);
}

}  // namespace

bool antenna_covers(const AntennaConfig& config, Point origin,
                    double base_range, Point target) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, OmniAntenna>) {
          return within_range(origin, target, c.range);
        } else if constexpr (std::is_same_v<T, SectorAntenna>) {
          return sector_covers(origin, c.orientation, c.width, c.length, target);
        } else {
          return ula_covers(c, origin, base_range, target);
        }
      },
      config);
}

}  // namespace swbeam
