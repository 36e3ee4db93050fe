#include "risbeam/position.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risbeam {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double wrap_phase(double x) {
  double y = x - kTwoPi * std::floor((x + kPi) / kTwoPi);
  if (y >= kPi) y = -kPi;  // guard against rounding at the seam
  return y;
}

Eigen::VectorXcd raw_weights(const AFPosition& p) {
  Eigen::VectorXcd w(p.amplitude.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w[i] = std::polar(p.amplitude[i], p.phase[i]);
  return w;
}

void set_weights(AFPosition& p, const Eigen::VectorXcd& w, double transmit_power) {
  const double amp_max = std::sqrt(transmit_power);
  p.amplitude.resize(w.size());
  p.phase.resize(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    p.amplitude[i] = std::min(std::abs(w[i]), amp_max);
    p.phase[i] = wrap_phase(std::arg(w[i]));
  }
}

AFPosition project_bounds(AFPosition p, double transmit_power) {
  const double amp_max = std::sqrt(transmit_power);
  p.amplitude = p.amplitude.cwiseMax(0.0).cwiseMin(amp_max);
  for (Eigen::Index i = 0; i < p.phase.size(); ++i) p.phase[i] = wrap_phase(p.phase[i]);
  p.ris_phase = p.ris_phase.cwiseMax(0.0).cwiseMin(kTwoPi);
  return p;
}

BeamPair decode(const AFPosition& p, double transmit_power) {
  if (p.amplitude.size() != p.phase.size())
    throw std::invalid_argument("decode: amplitude/phase size mismatch");
  BeamPair beam;
  beam.w = raw_weights(p);
  const double norm_sq = beam.w.squaredNorm();
  if (norm_sq == 0.0) {
    // Degenerate all-zero amplitudes: fall back to uniform split.
    const double amp = std::sqrt(transmit_power / static_cast<double>(p.amplitude.size()));
    for (Eigen::Index i = 0; i < beam.w.size(); ++i)
      beam.w[i] = std::polar(amp, p.phase[i]);
  } else {
    beam.w *= std::sqrt(transmit_power / norm_sq);
  }
  beam.xi.resize(p.ris_phase.size());
  for (Eigen::Index i = 0; i < beam.xi.size(); ++i)
    beam.xi[i] = std::polar(1.0, p.ris_phase[i]);
  return beam;
}

std::pair<double, double> position_distance(const AFPosition& a, const AFPosition& b) {
  if (a.amplitude.size() != b.amplitude.size() || a.ris_phase.size() != b.ris_phase.size())
    throw std::invalid_argument("position_distance: dimension mismatch");
  const double d_active = (raw_weights(a) - raw_weights(b)).norm();
  const double d_passive = (a.ris_phase - b.ris_phase).norm();
  return {d_active, d_passive};
}

AFPosition random_position(const SearchSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.0, std::sqrt(space.transmit_power));
  std::uniform_real_distribution<double> phs(-kPi, kPi);
  std::uniform_real_distribution<double> ris(0.0, kTwoPi);
  AFPosition p;
  p.amplitude.resize(space.num_antennas);
  p.phase.resize(space.num_antennas);
  p.ris_phase.resize(space.num_ris_elements);
  for (Eigen::Index i = 0; i < space.num_antennas; ++i) p.amplitude[i] = amp(rng);
  for (Eigen::Index i = 0; i < space.num_antennas; ++i) p.phase[i] = phs(rng);
  for (Eigen::Index i = 0; i < space.num_ris_elements; ++i) p.ris_phase[i] = ris(rng);
  return p;
}

}  // namespace risbeam
