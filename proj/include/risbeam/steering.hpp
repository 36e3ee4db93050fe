#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <Eigen/Dense>

namespace risbeam {

template <typename Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// ULA response for a given direction cosine along the array axis.
/// Element m gets phase 2*pi*spacing*m*dir_cos.
template <typename Scalar>
ComplexVector<Scalar> ula_response(Scalar dir_cos, Eigen::Index num_elements,
                                   Scalar spacing_over_wavelength) {
  if (num_elements < 1)
    throw std::invalid_argument("ula_response: num_elements must be >= 1");
  if (!std::isfinite(static_cast<double>(dir_cos)))
    throw std::invalid_argument("ula_response: non-finite direction");
  const Scalar k = Scalar(2) * std::numbers::pi_v<Scalar> *
                   spacing_over_wavelength * dir_cos;
  ComplexVector<Scalar> v(num_elements);
  for (Eigen::Index m = 0; m < num_elements; ++m)
    v[m] = std::polar(Scalar(1), k * Scalar(m));
  return v;
}

/// URA response for direction cosines along the two array axes, flattened
/// row-major over (rows, cols): index = n1 * cols + n2.
template <typename Scalar>
ComplexVector<Scalar> ura_response(Scalar row_dir_cos, Scalar col_dir_cos,
                                   Eigen::Index rows, Eigen::Index cols,
                                   Scalar spacing_over_wavelength) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("ura_response: rows and cols must be >= 1");
  if (!std::isfinite(static_cast<double>(row_dir_cos)) ||
      !std::isfinite(static_cast<double>(col_dir_cos)))
    throw std::invalid_argument("ura_response: non-finite direction");
  const ComplexVector<Scalar> a = ula_response(row_dir_cos, rows, spacing_over_wavelength);
  const ComplexVector<Scalar> b = ula_response(col_dir_cos, cols, spacing_over_wavelength);
  ComplexVector<Scalar> v(rows * cols);
  for (Eigen::Index n1 = 0; n1 < rows; ++n1)
    for (Eigen::Index n2 = 0; n2 < cols; ++n2) v[n1 * cols + n2] = a[n1] * b[n2];
  return v;
}

/// Steering vector of a ULA towards a plane-wave angle measured from
/// broadside, unit-modulus entries.
template <typename Scalar>
ComplexVector<Scalar> steering_vector_ula(Scalar angle, Eigen::Index num_elements,
                                          Scalar spacing_over_wavelength) {
  if (!std::isfinite(static_cast<double>(angle)))
    throw std::invalid_argument("steering_vector_ula: non-finite angle");
  return ula_response(std::sin(angle), num_elements, spacing_over_wavelength);
}

/// Steering vector of a URA for azimuth/elevation measured from broadside.
/// The row axis sees sin(az)*cos(el), the column axis sees sin(el).
template <typename Scalar>
ComplexVector<Scalar> steering_vector_ura(Scalar azimuth, Scalar elevation,
                                          Eigen::Index rows, Eigen::Index cols,
                                          Scalar spacing_over_wavelength) {
  if (!std::isfinite(static_cast<double>(azimuth)) ||
      !std::isfinite(static_cast<double>(elevation)))
    throw std::invalid_argument("steering_vector_ura: non-finite angle");
  return ura_response(std::sin(azimuth) * std::cos(elevation), std::sin(elevation),
                      rows, cols, spacing_over_wavelength);
}

}  // namespace risbeam
