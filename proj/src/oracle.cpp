#include "risbeam/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace risbeam {

void BeamPair::validate(double transmit_power) const {
  constexpr double kTol = 1e-9;
  const double p = w.squaredNorm();
  if (!(std::abs(p - transmit_power) <= kTol * transmit_power))
    throw std::invalid_argument("BeamPair: ||w||^2 != transmit power");
  for (Eigen::Index i = 0; i < xi.size(); ++i)
    if (!(std::abs(std::abs(xi[i]) - 1.0) <= kTol))
      throw std::invalid_argument("BeamPair: |xi_n| != 1");
}

FeedbackOracle::FeedbackOracle(const Scenario& scenario)
    : FeedbackOracle(scenario, generate_channels(scenario)) {}

FeedbackOracle::FeedbackOracle(const Scenario& scenario, ChannelSet channels)
    : scenario_(scenario), channels_(std::move(channels)), noise_rng_(scenario.rng_seed) {
  scenario_.validate();
  if (channels_.dfbs_to_ris.rows() != scenario_.num_ris_elements() ||
      channels_.dfbs_to_ris.cols() != scenario_.num_antennas ||
      channels_.dfbs_to_user.size() != scenario_.num_antennas ||
      channels_.ris_to_user.size() != scenario_.num_ris_elements() ||
      channels_.ris_to_target.size() != scenario_.num_ris_elements())
    throw std::invalid_argument("FeedbackOracle: channel dimensions do not match scenario");
}

void FeedbackOracle::check_dims(const BeamPair& beam) const {
  if (beam.w.size() != scenario_.num_antennas ||
      beam.xi.size() != scenario_.num_ris_elements())
    throw std::invalid_argument("FeedbackOracle: beam dimensions do not match scenario");
}

std::complex<double> FeedbackOracle::draw_noise(double variance) {
  const double s = std::sqrt(variance / 2.0);
  const double re = gauss_(noise_rng_);
  const double im = gauss_(noise_rng_);
  return {s * re, s * im};
}

double FeedbackOracle::measure_user_power(const BeamPair& beam) {
  check_dims(beam);
  beam.validate(scenario_.transmit_power);
  ++user_evals_;
  const std::complex<double> rx = effective_channel(channels_, beam.xi).dot(beam.w);
  if (noise_enabled_) return std::norm(rx + draw_noise(scenario_.user_noise_variance));
  return std::norm(rx) + scenario_.user_noise_variance;
}

double FeedbackOracle::measure_echo_power(const BeamPair& beam) {
  check_dims(beam);
  beam.validate(scenario_.transmit_power);
  ++echo_evals_;
  Eigen::VectorXcd noise = Eigen::VectorXcd::Zero(scenario_.num_antennas);
  if (noise_enabled_)
    for (Eigen::Index i = 0; i < noise.size(); ++i)
      noise[i] = draw_noise(scenario_.echo_noise_variance);
  return echo_signal(channels_, scenario_.echo_coeffs, beam.w, beam.xi, noise).squaredNorm();
}

double FeedbackOracle::user_snr(const BeamPair& beam) {
  check_dims(beam);
  beam.validate(scenario_.transmit_power);
  if (!(scenario_.user_noise_variance > 0.0))
    throw std::invalid_argument("user_snr: user noise variance must be > 0");
  ++user_evals_;
  const std::complex<double> rx = effective_channel(channels_, beam.xi).dot(beam.w);
  return std::norm(rx) / scenario_.user_noise_variance;
}

bool FeedbackOracle::feasibility(const BeamPair& beam, double eta_min, double eta_max) {
  if (!(eta_min <= eta_max))
    throw std::invalid_argument("feasibility: eta_min > eta_max");
  const double p = measure_user_power(beam);
  return p >= eta_min && p <= eta_max;
}

}  // namespace risbeam
