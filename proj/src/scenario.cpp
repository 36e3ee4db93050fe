#include "risbeam/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risbeam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("scenario: " + what);
}

}  // namespace

void Scenario::validate() const {
  require(num_antennas >= 1, "num_antennas must be >= 1");
  require(ris_rows >= 1 && ris_cols >= 1, "ris_rows and ris_cols must be >= 1");
  require(transmit_power > 0.0, "transmit_power must be > 0");
  require(user_noise_variance >= 0.0, "user_noise_variance must be >= 0");
  require(echo_noise_variance >= 0.0, "echo_noise_variance must be >= 0");
  require(wavelength > 0.0, "wavelength must be > 0");
  require(dfbs_spacing_wavelengths > 0.0 && ris_spacing_wavelengths > 0.0,
          "element spacings must be > 0");
  require(std::isfinite(pathloss_exponent_los) && std::isfinite(ref_pathloss_db),
          "pathloss parameters must be finite");
  require(echo_coeffs.allFinite(), "echo_coeffs must be finite");

  const Eigen::Vector3d* nodes[] = {&dfbs_pos, &ris_pos, &target_pos, &user_pos};
  const char* names[] = {"dfbs_pos", "ris_pos", "target_pos", "user_pos"};
  for (int i = 0; i < 4; ++i) {
    require(nodes[i]->allFinite(), std::string(names[i]) + " must be finite");
    for (int j = i + 1; j < 4; ++j) {
      require((*nodes[i] - *nodes[j]).norm() > 0.0,
              std::string(names[i]) + " and " + names[j] + " coincide");
    }
  }
}

}  // namespace risbeam
