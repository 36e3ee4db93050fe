#pragma once

#include <random>
#include <utility>
#include <Eigen/Dense>

#include "risbeam/oracle.hpp"

namespace risbeam {

/// Search-space dimensions shared by every optimizer: DFBS array size,
/// RIS element count and the transmit power budget. Deliberately excludes
/// any channel knowledge.
struct SearchSpace {
  Eigen::Index num_antennas = 1;
  Eigen::Index num_ris_elements = 1;
  double transmit_power = 1.0;

  static SearchSpace from_scenario(const Scenario& sc) {
    return {sc.num_antennas, sc.num_ris_elements(), sc.transmit_power};
  }
};

/// One candidate solution in raw coordinates: per-antenna amplitudes in
/// [0, sqrt(P)], per-antenna transmit phases in [-pi, pi), and per-element
/// RIS phases in [0, 2pi].
struct AFPosition {
  Eigen::VectorXd amplitude;  // M
  Eigen::VectorXd phase;      // M
  Eigen::VectorXd ris_phase;  // N
};

/// Wraps x into [-pi, pi).
double wrap_phase(double x);

/// Active part as a complex vector, amplitude .* exp(j*phase), without
/// power normalization.
Eigen::VectorXcd raw_weights(const AFPosition& p);

/// Re-extracts (amplitude, phase) from a moved complex weight vector and
/// projects: amplitudes clamp to [0, sqrt(P)], phases wrap to [-pi, pi).
void set_weights(AFPosition& p, const Eigen::VectorXcd& w, double transmit_power);

/// Clamps amplitudes to [0, sqrt(P)] and RIS phases to [0, 2pi]; transmit
/// phases wrap rather than clamp since they are circular. In-range
/// positions come back unchanged.
AFPosition project_bounds(AFPosition p, double transmit_power);

/// Maps a position to a constraint-satisfying beam pair: w_m =
/// amplitude_m * exp(j*phase_m) rescaled so ||w||^2 = P exactly, xi_n =
/// exp(j*ris_phase_n). An all-zero amplitude vector is replaced by uniform
/// sqrt(P/M) before scaling.
BeamPair decode(const AFPosition& p, double transmit_power);

/// (active, passive) distances between two positions: Euclidean norm of
/// the raw complex weight difference, and of the RIS phase difference on
/// the raw clamped coordinates (phases 2pi apart count as far).
std::pair<double, double> position_distance(const AFPosition& a, const AFPosition& b);

/// Uniform random position: amplitudes on [0, sqrt(P)), transmit phases on
/// [-pi, pi), RIS phases on [0, 2pi).
AFPosition random_position(const SearchSpace& space, std::mt19937_64& rng);

}  // namespace risbeam
