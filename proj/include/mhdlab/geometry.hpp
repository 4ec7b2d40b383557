#ifndef MHDLAB_GEOMETRY_HPP
#define MHDLAB_GEOMETRY_HPP

#include <Eigen/Core>
#include <Eigen/Dense>

#include "mhdlab/errors.hpp"

namespace mhdlab {

/// Pointwise derivatives of the lifted front and of the diffeomorphism
/// Phi = (x1 + Psi, x2, x3). At the wall d1phi1 = 1 and dpsi_k equal the
/// front gradient.
template <typename Scalar = double>
struct InterfaceGeometry {
    Scalar dpsi_t = 0; // d_t Psi
    Scalar dpsi2  = 0; // d_2 Psi
    Scalar dpsi3  = 0; // d_3 Psi
    Scalar d1phi1 = 1; // d_1 Phi_1 >= 1/2

    static InterfaceGeometry flat() { return {}; }
};

/// eta maps plain vector components to (normal, scaled tangential) ones:
/// u = eta v = (v_N, v2 d1Phi1, v3 d1Phi1), and likewise h = eta H.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> build_eta(const InterfaceGeometry<Scalar>& g) {
    Eigen::Matrix<Scalar, 3, 3> eta;
    eta << Scalar(1), -g.dpsi2, -g.dpsi3,
           Scalar(0), g.d1phi1, Scalar(0),
           Scalar(0), Scalar(0), g.d1phi1;
    return eta;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> eta_inverse(const InterfaceGeometry<Scalar>& g) {
    const Scalar J = g.d1phi1;
    Eigen::Matrix<Scalar, 3, 3> inv;
    inv << Scalar(1), g.dpsi2 / J, g.dpsi3 / J,
           Scalar(0), Scalar(1) / J, Scalar(0),
           Scalar(0), Scalar(0), Scalar(1) / J;
    return inv;
}

/// a0 = (eta^{-1})^T eta^{-1}, symmetric positive definite.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> build_a0(const InterfaceGeometry<Scalar>& g) {
    const Eigen::Matrix<Scalar, 3, 3> inv = eta_inverse(g);
    return inv.transpose() * inv;
}

template <typename Scalar>
void require_jacobian(const InterfaceGeometry<Scalar>& g) {
    if (!(g.d1phi1 >= Scalar(0.5))) throw DegenerateJacobian(static_cast<double>(g.d1phi1));
}

} // namespace mhdlab

#endif
