#pragma once

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace risbeam {

/// One physical setup: node geometry, array sizes and power/noise/echo
/// parameters. Everything a channel realization and an oracle need.
///
/// Conventions: the DFBS carries a ULA along the global x axis; the RIS
/// carries a URA whose row axis (ris_rows) lies along global y and whose
/// column axis (ris_cols) lies along global z. Powers are linear watts.
struct Scenario {
  Eigen::Vector3d dfbs_pos{0.0, 0.0, 15.0};
  Eigen::Vector3d ris_pos{30.0, 0.0, 10.0};
  Eigen::Vector3d target_pos{15.0, -25.0, 0.0};
  Eigen::Vector3d user_pos{15.0, 30.0, 0.0};

  Eigen::Index num_antennas = 8;  // DFBS ULA size
  Eigen::Index ris_rows = 8;      // URA rows, along y
  Eigen::Index ris_cols = 8;      // URA cols, along z

  double wavelength = 0.01;                // meters (30 GHz default)
  double dfbs_spacing_wavelengths = 0.5;   // element spacing / wavelength
  double ris_spacing_wavelengths = 0.5;

  double pathloss_exponent_los = 2.0;
  double ref_pathloss_db = 30.0;  // pathloss at 1 m, dB

  double transmit_power = 1.0;       // watts
  double user_noise_variance = 1e-9; // AWGN variance at the user, watts
  double echo_noise_variance = 1e-16;// AWGN variance per DFBS rx antenna, watts

  /// Complex gains of the five echo paths, in order: RIS-target-RIS,
  /// RIS-user-RIS, RIS-user-direct, direct-user-direct, direct-user-RIS.
  Eigen::Vector<std::complex<double>, 5> echo_coeffs{
      {1.0, 0.0}, {0.3, 0.0}, {0.3, 0.0}, {0.3, 0.0}, {0.3, 0.0}};

  std::uint64_t rng_seed = 1;

  Eigen::Index num_ris_elements() const { return ris_rows * ris_cols; }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

}  // namespace risbeam
