#pragma once

#include <cstdint>
#include <random>
#include <Eigen/Dense>

#include "risbeam/channel.hpp"
#include "risbeam/scenario.hpp"

namespace risbeam {

/// One candidate: active beamforming weights w (||w||^2 = P) and per-element
/// RIS reflection coefficients xi (|xi_n| = 1).
struct BeamPair {
  Eigen::VectorXcd w;
  Eigen::VectorXcd xi;

  /// Throws std::invalid_argument when the power or unit-modulus
  /// constraints are violated beyond 1e-9 relative tolerance.
  void validate(double transmit_power) const;
};

/// Measurement interface standing in for the physical layer. All channel
/// state stays private; optimizers only ever see the two scalar feedbacks
/// the DFBS would actually obtain: user received power and echo power at
/// the DFBS. Each measurement bumps its counter by exactly one.
///
/// With measurement noise disabled (the default) measurements are pure
/// functions of the beam pair. One oracle instance belongs to one logical
/// thread; independent instances may run in parallel.
class FeedbackOracle {
 public:
  explicit FeedbackOracle(const Scenario& scenario);
  FeedbackOracle(const Scenario& scenario, ChannelSet channels);

  /// Received power at the user in watts: |h_u^H w|^2 + sigma_c^2 noiseless,
  /// or |h_u^H w + n_c|^2 for one AWGN draw when noise is enabled.
  double measure_user_power(const BeamPair& beam);

  /// Echo power ||y_s||^2 at the DFBS in watts; the fitness the swarm
  /// maximizes. Noise vector is zero unless measurement noise is enabled.
  double measure_echo_power(const BeamPair& beam);

  /// Idealized SNR at the user, |h_u^H w|^2 / sigma_c^2. Requires a
  /// strictly positive user noise variance.
  double user_snr(const BeamPair& beam);

  /// True iff one fresh user-power measurement lands in
  /// [eta_min, eta_max] (closed interval). Shares the user counter.
  bool feasibility(const BeamPair& beam, double eta_min, double eta_max);

  void set_measurement_noise(bool enabled) { noise_enabled_ = enabled; }
  bool measurement_noise() const { return noise_enabled_; }

  std::uint64_t echo_evals() const { return echo_evals_; }
  std::uint64_t user_evals() const { return user_evals_; }

  const Scenario& scenario() const { return scenario_; }

 private:
  void check_dims(const BeamPair& beam) const;
  std::complex<double> draw_noise(double variance);

  Scenario scenario_;
  ChannelSet channels_;  // never exposed
  std::uint64_t echo_evals_ = 0;
  std::uint64_t user_evals_ = 0;
  bool noise_enabled_ = false;
  std::mt19937_64 noise_rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace risbeam
