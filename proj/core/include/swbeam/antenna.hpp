#pragma once

#include <span>
#include <variant>
#include <vector>

#include "swbeam/geometry.hpp"

namespace swbeam {

// Per-node radio modes. A sector beam keeps the area of the omni disc while
// trading width for length; a ULA trades element count for main-lobe gain.
struct OmniAntenna {
  double range = 1.0;
};

struct SectorAntenna {
  double width = kTwoPi;        // radians, (0, 2pi]
  double length = 1.0;          // beam reach
  double orientation = 0.0;     // radians, normalized to [0, 2pi)
};

struct UlaAntenna {
  int elements = 1;                  // m >= 1
  double boresight = 0.0;            // radians
  double path_loss_exponent = 2.0;   // alpha > 0
  // When > 0, reach is rescaled so the boresight reach equals this value
  // instead of following r * G^(1/alpha).
  double peak_reach = 0.0;
};

using AntennaConfig = std::variant<OmniAntenna, SectorAntenna, UlaAntenna>;

struct RegionWeights {
  double area_first = 0.0;   // A_f
  double area_last = 0.0;    // A_l
  double p_first = 0.0;      // p_nf
  double p_last = 0.0;       // p_nl
};

// Equal-area beam length r * sqrt(2pi / theta). Throws on theta outside
// (0, 2pi] or r <= 0.
double sector_beam_length(double theta, double r);

// First/last region areas (radial bands of depth r at both ends of the
// sector) and the probabilities that at least one of n neighbors falls in
// each, for a node of neighborhood size n.
RegionWeights region_weights(double theta, double r, double n);

// Connectivity-weighted beam length r(theta) * p_nf * p_nl.
double weighted_beam_length(double theta, double r, double n);

// Argmax of weighted_beam_length over the candidate set; ties broken toward
// the smaller width (longer raw beam). Throws on empty candidates.
double optimal_beamwidth(std::span<const double> candidates, double r, double n);

// Default candidate grid {2pi/k^2 : k = 1..8}; beam lengths are exactly k*r.
std::vector<double> default_beamwidth_grid();

// True iff target lies in the closed sector of half-angle theta/2 around
// `orientation` at distance <= length. The origin itself is covered.
bool sector_covers(Point origin, double orientation, double theta,
                   double length, Point target);

// Normalized ULA power gain with half-wavelength spacing:
//   G(phi) = sin^2(m psi / 2) / (m sin^2(psi / 2)),  psi = pi (cos phi - cos theta_b)
// with the limit value m at psi -> 0. Peak gain is m; m = 1 is omni.
double ula_gain(int elements, double boresight, double phi);

// Gain-to-range mapping: reach(phi) = r * G(phi)^(1/alpha).
double ula_reach(int elements, double boresight, double phi, double r,
                 double alpha);

// Element count equivalent to a sector beam of the given length:
// max(1, round(length / r)).
int map_sector_to_ula(double beam_length, double r);

// DTOR transmit-coverage predicate: does a transmitter at `origin` using
// `config` reach `target`? `base_range` is the topology omni range used by
// the ULA gain-to-range mapping.
bool antenna_covers(const AntennaConfig& config, Point origin,
                    double base_range, Point target);

}  // namespace swbeam
