#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <Eigen/Dense>

#include "risbeam/scenario.hpp"
#include "risbeam/steering.hpp"

namespace risbeam {

/// The four link channels of one realization. dfbs_to_ris is rank one by
/// construction (single LoS path per link).
template <typename Scalar>
struct ChannelSetT {
  ComplexMatrix<Scalar> dfbs_to_ris;   // N x M
  ComplexVector<Scalar> dfbs_to_user;  // M
  ComplexVector<Scalar> ris_to_user;   // N
  ComplexVector<Scalar> ris_to_target; // N
};

using ChannelSet = ChannelSetT<double>;

namespace detail {

template <typename Scalar>
Scalar link_amplitude(Scalar distance, Scalar ref_pathloss_db, Scalar exponent) {
  // sqrt of the power gain 10^(-L0/10) * d^(-exponent)
  return std::sqrt(std::pow(Scalar(10), -ref_pathloss_db / Scalar(10))) *
         std::pow(distance, -exponent / Scalar(2));
}

}  // namespace detail

/// Deterministic LoS geometric channels: each link is a path amplitude times
/// the steering response at the link's angles, all derived from Scenario
/// geometry. Two calls with the same Scenario give bit-identical results.
template <typename Scalar = double>
ChannelSetT<Scalar> generate_channels(const Scenario& sc) {
  sc.validate();
  using Vec3 = Eigen::Vector3d;
  const Scalar exponent = static_cast<Scalar>(sc.pathloss_exponent_los);
  const Scalar ref_db = static_cast<Scalar>(sc.ref_pathloss_db);
  const Scalar s_dfbs = static_cast<Scalar>(sc.dfbs_spacing_wavelengths);
  const Scalar s_ris = static_cast<Scalar>(sc.ris_spacing_wavelengths);

  auto unit_and_dist = [](const Vec3& from, const Vec3& to) {
    const Vec3 d = to - from;
    const double dist = d.norm();
    if (!(dist > 0.0))
      throw std::invalid_argument("generate_channels: degenerate geometry, coincident nodes");
    return std::pair<Vec3, double>{d / dist, dist};
  };

  // DFBS ULA responds to the x direction cosine; the RIS URA row/col axes
  // respond to the y and z direction cosines.
  auto dfbs_response = [&](const Vec3& u) {
    return ula_response<Scalar>(static_cast<Scalar>(u.x()), sc.num_antennas, s_dfbs);
  };
  auto ris_response = [&](const Vec3& u) {
    return ura_response<Scalar>(static_cast<Scalar>(u.y()), static_cast<Scalar>(u.z()),
                                sc.ris_rows, sc.ris_cols, s_ris);
  };

  const auto [u_bu, d_bu] = unit_and_dist(sc.dfbs_pos, sc.user_pos);
  const auto [u_br, d_br] = unit_and_dist(sc.dfbs_pos, sc.ris_pos);
  const auto [u_ru, d_ru] = unit_and_dist(sc.ris_pos, sc.user_pos);
  const auto [u_rt, d_rt] = unit_and_dist(sc.ris_pos, sc.target_pos);

  ChannelSetT<Scalar> ch;
  ch.dfbs_to_user = detail::link_amplitude<Scalar>(static_cast<Scalar>(d_bu), ref_db, exponent) *
                    dfbs_response(u_bu);
  ch.ris_to_user = detail::link_amplitude<Scalar>(static_cast<Scalar>(d_ru), ref_db, exponent) *
                   ris_response(u_ru);
  ch.ris_to_target = detail::link_amplitude<Scalar>(static_cast<Scalar>(d_rt), ref_db, exponent) *
                     ris_response(u_rt);
  // Arrival response at the RIS times departure response at the DFBS.
  ch.dfbs_to_ris = detail::link_amplitude<Scalar>(static_cast<Scalar>(d_br), ref_db, exponent) *
                   (ris_response(-u_br) * dfbs_response(u_br).adjoint());
  return ch;
}

/// Combined user channel h_u such that the user receives h_u^H * w: the
/// direct link plus the RIS-assisted cascade under reflection pattern xi.
template <typename Scalar>
ComplexVector<Scalar> effective_channel(const ChannelSetT<Scalar>& ch,
                                        const ComplexVector<Scalar>& xi) {
  const Eigen::Index n = ch.dfbs_to_ris.rows();
  if (xi.size() != n || ch.ris_to_user.size() != n ||
      ch.dfbs_to_user.size() != ch.dfbs_to_ris.cols())
    throw std::invalid_argument("effective_channel: dimension mismatch");
  // h_u = h_bu + (h_ru^H diag(xi) H_br)^H = h_bu + H_br^H (xi^* .* h_ru)
  return ch.dfbs_to_user +
         ch.dfbs_to_ris.adjoint() * xi.conjugate().cwiseProduct(ch.ris_to_user);
}

/// Superimposed echo at the DFBS for a unit pilot: the target path plus the
/// four user-echo interference paths, each weighted by its complex
/// coefficient, plus the supplied receiver noise vector.
template <typename Scalar>
ComplexVector<Scalar> echo_signal(const ChannelSetT<Scalar>& ch,
                                  const Eigen::Vector<std::complex<Scalar>, 5>& rho,
                                  const ComplexVector<Scalar>& w,
                                  const ComplexVector<Scalar>& xi,
                                  const ComplexVector<Scalar>& noise) {
  const Eigen::Index n = ch.dfbs_to_ris.rows();
  const Eigen::Index m = ch.dfbs_to_ris.cols();
  if (w.size() != m || xi.size() != n || noise.size() != m ||
      ch.dfbs_to_user.size() != m || ch.ris_to_user.size() != n ||
      ch.ris_to_target.size() != n)
    throw std::invalid_argument("echo_signal: dimension mismatch");

  using CVec = ComplexVector<Scalar>;
  // Cascades through the RIS, seen from the DFBS: diag(g^H) H_br.
  const ComplexMatrix<Scalar> via_target =
      ch.ris_to_target.conjugate().asDiagonal() * ch.dfbs_to_ris;
  const ComplexMatrix<Scalar> via_user =
      ch.ris_to_user.conjugate().asDiagonal() * ch.dfbs_to_ris;

  const CVec xi_conj = xi.conjugate();
  // xi^T v without conjugation
  const std::complex<Scalar> fwd_target = xi.cwiseProduct(via_target * w).sum();
  const std::complex<Scalar> fwd_user = xi.cwiseProduct(via_user * w).sum();
  const std::complex<Scalar> direct_user = ch.dfbs_to_user.dot(w);  // h_bu^H w

  CVec y = rho[0] * (via_target.adjoint() * xi_conj) * fwd_target;
  y += rho[1] * (via_user.adjoint() * xi_conj) * fwd_user;
  y += rho[2] * ch.dfbs_to_user * fwd_user;
  y += rho[3] * ch.dfbs_to_user * direct_user;
  y += rho[4] * (via_user.adjoint() * xi_conj) * direct_user;
  y += noise;
  return y;
}

}  // namespace risbeam
