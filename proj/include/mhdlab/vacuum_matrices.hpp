#ifndef MHDLAB_VACUUM_MATRICES_HPP
#define MHDLAB_VACUUM_MATRICES_HPP

#include <Eigen/Core>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <functional>

#include "mhdlab/errors.hpp"
#include "mhdlab/geometry.hpp"

namespace mhdlab::vacuum {

/// Hyperbolic regularization parameters: eps restores a scaled displacement
/// current (wave speed 1/eps), nu parameterizes the secondary symmetrization.
template <typename Scalar = double>
struct RegularizationParams {
    Scalar epsilon = Scalar(0.1);
    Eigen::Matrix<Scalar, 3, 1> nu = Eigen::Matrix<Scalar, 3, 1>::Zero();

    bool hyperbolic() const { return epsilon * nu.norm() < Scalar(1); }
};

/// Curved vacuum unknown W = (frakH, frakE), stacked 6-vector.
template <typename Scalar = double>
struct VacuumField {
    Eigen::Matrix<Scalar, 3, 1> frakH = Eigen::Matrix<Scalar, 3, 1>::Zero();
    Eigen::Matrix<Scalar, 3, 1> frakE = Eigen::Matrix<Scalar, 3, 1>::Zero();

    Eigen::Matrix<Scalar, 6, 1> vec() const {
        Eigen::Matrix<Scalar, 6, 1> w;
        w << frakH, frakE;
        return w;
    }
};

/// Maxwell-type flux matrices of the regularized vacuum system; constant,
/// entries +-1/eps. For eps = 1 these are the vacuum Maxwell matrices.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_B(int j, Scalar eps) {
    const Scalar s = Scalar(1) / eps;
    Eigen::Matrix<Scalar, 6, 6> B = Eigen::Matrix<Scalar, 6, 6>::Zero();
    switch (j) {
        case 1:
            B(1, 5) = -s; B(2, 4) = s;
            B(4, 2) = s;  B(5, 1) = -s;
            break;
        case 2:
            B(0, 5) = s;  B(2, 3) = -s;
            B(3, 2) = -s; B(5, 0) = s;
            break;
        case 3:
            B(0, 4) = -s; B(1, 3) = s;
            B(3, 1) = s;  B(4, 0) = -s;
            break;
        default: throw std::invalid_argument("build_B: j must be 1..3");
    }
    return B;
}

/// Secondary symmetrizer frakB_0: identity plus eps-scaled couplings between
/// the magnetic and electric blocks. Positive definite iff eps |nu| < 1.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_frakB0(const RegularizationParams<Scalar>& p) {
    const Scalar e = p.epsilon;
    const auto& n = p.nu;
    Eigen::Matrix<Scalar, 3, 3> cross;
    cross << Scalar(0), -n[2], n[1],
             n[2], Scalar(0), -n[0],
             -n[1], n[0], Scalar(0);
    Eigen::Matrix<Scalar, 6, 6> B = Eigen::Matrix<Scalar, 6, 6>::Identity();
    B.template block<3, 3>(0, 3) = e * cross.transpose();
    B.template block<3, 3>(3, 0) = e * cross;
    return B;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_frakB(int alpha, const RegularizationParams<Scalar>& p) {
    if (alpha == 0) return build_frakB0(p);
    const Scalar s  = Scalar(1) / p.epsilon;
    const Scalar n1 = p.nu[0], n2 = p.nu[1], n3 = p.nu[2];
    Eigen::Matrix<Scalar, 6, 6> B;
    switch (alpha) {
        case 1:
            B << n1, n2, n3, 0, 0, 0,
                 n2, -n1, 0, 0, 0, -s,
                 n3, 0, -n1, 0, s, 0,
                 0, 0, 0, n1, n2, n3,
                 0, 0, s, n2, -n1, 0,
                 0, -s, 0, n3, 0, -n1;
            break;
        case 2:
            B << -n2, n1, 0, 0, 0, s,
                 n1, n2, n3, 0, 0, 0,
                 0, n3, -n2, -s, 0, 0,
                 0, 0, -s, -n2, n1, 0,
                 0, 0, 0, n1, n2, n3,
                 s, 0, 0, 0, n3, -n2;
            break;
        case 3:
            B << -n3, 0, n1, 0, -s, 0,
                 0, -n3, n2, s, 0, 0,
                 n1, n2, n3, 0, 0, 0,
                 0, s, 0, -n3, 0, n1,
                 -s, 0, 0, 0, -n3, n2,
                 0, 0, 0, n1, n2, n3;
            break;
        default: throw std::invalid_argument("build_frakB: alpha must be 0..3");
    }
    return B;
}

/// Divergence recombination columns of the secondary symmetrization.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 1> build_R1(const RegularizationParams<Scalar>& p) {
    Eigen::Matrix<Scalar, 6, 1> r = Eigen::Matrix<Scalar, 6, 1>::Zero();
    r.template head<3>() = p.nu;
    return r;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 1> build_R2(const RegularizationParams<Scalar>& p) {
    Eigen::Matrix<Scalar, 6, 1> r = Eigen::Matrix<Scalar, 6, 1>::Zero();
    r.template tail<3>() = p.nu;
    return r;
}

/// det(frakB_1) = nu_1^2 (|nu|^2 - 1/eps^2)^2, closed form.
template <typename Scalar>
Scalar det_frakB1_closed(const RegularizationParams<Scalar>& p) {
    const Scalar n2 = p.nu.squaredNorm();
    const Scalar d  = n2 - Scalar(1) / (p.epsilon * p.epsilon);
    return p.nu[0] * p.nu[0] * d * d;
}

/// K = I_2 (x) eta, the block lift of the interface map to 6-vectors.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_K(const InterfaceGeometry<Scalar>& g) {
    const Eigen::Matrix<Scalar, 3, 3> eta = build_eta(g);
    Eigen::Matrix<Scalar, 6, 6> K = Eigen::Matrix<Scalar, 6, 6>::Zero();
    K.template block<3, 3>(0, 0) = eta;
    K.template block<3, 3>(3, 3) = eta;
    return K;
}

/// B_0 = K K^T / d1Phi1 relating (frakh, frake) = B_0 W.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_B0_geom(const InterfaceGeometry<Scalar>& g) {
    const Eigen::Matrix<Scalar, 6, 6> K = build_K(g);
    return K * K.transpose() / g.d1phi1;
}

/// frakBtilde_1 = (frakB_1 - frakB_2 d2Psi - frakB_3 d3Psi) / d1Phi1.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_frakBtilde1(const RegularizationParams<Scalar>& p,
                                              const InterfaceGeometry<Scalar>& g) {
    Eigen::Matrix<Scalar, 6, 6> B = build_frakB(1, p);
    B -= g.dpsi2 * build_frakB(2, p);
    B -= g.dpsi3 * build_frakB(3, p);
    return B / g.d1phi1;
}

/// Curved secondary-symmetrized matrices: M_0 = K frakB_0 K^T / d1Phi1 (> 0
/// in the hyperbolicity region), M_1 uses frakBtilde_1, M_2 and M_3 the flat
/// symmetrizers. M_4 is the derivative expression and lives in build_M4.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_M(int alpha, const RegularizationParams<Scalar>& p,
                                    const InterfaceGeometry<Scalar>& g) {
    require_jacobian(g);
    if (!p.hyperbolic())
        throw HyperbolicityViolated("eps|nu| >= 1 outside the vacuum hyperbolicity region");
    const Eigen::Matrix<Scalar, 6, 6> K = build_K(g);
    Eigen::Matrix<Scalar, 6, 6> core;
    switch (alpha) {
        case 0: core = build_frakB0(p); break;
        case 1: core = build_frakBtilde1(p, g); break;
        case 2: core = build_frakB(2, p); break;
        case 3: core = build_frakB(3, p); break;
        default: throw std::invalid_argument("build_M: alpha must be 0..3");
    }
    return K * core * K.transpose() / g.d1phi1;
}

/// Geometry as a function of (t, x); used to difference the matrix fields.
template <typename Scalar>
using GeometryField = std::function<InterfaceGeometry<Scalar>(Scalar t, const Eigen::Matrix<Scalar, 3, 1>& x)>;

/// M_4 = K (frakB_0 d_t + frakBtilde_1 d_1 + frakB_2 d_2 + frakB_3 d_3
///          + frakB_0 B_4) (K^T / d1Phi1),
/// with B_4 = d_t B_0. The derivatives of the matrix fields are taken with
/// fourth-order central differences of the geometry.
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> build_M4(const RegularizationParams<Scalar>& p,
                                     const GeometryField<Scalar>& geom, Scalar t,
                                     const Eigen::Matrix<Scalar, 3, 1>& x,
                                     Scalar step = Scalar(1e-3)) {
    using Mat6 = Eigen::Matrix<Scalar, 6, 6>;
    const InterfaceGeometry<Scalar> g0 = geom(t, x);
    require_jacobian(g0);

    const auto KT_over_J = [&](Scalar tt, const Eigen::Matrix<Scalar, 3, 1>& xx) -> Mat6 {
        const auto g = geom(tt, xx);
        return build_K(g).transpose() / g.d1phi1;
    };
    const auto B0_at = [&](Scalar tt, const Eigen::Matrix<Scalar, 3, 1>& xx) -> Mat6 {
        return build_B0_geom(geom(tt, xx));
    };
    // 4th-order central difference of a matrix field along one coordinate.
    const auto d4 = [&](auto&& f, int axis) -> Mat6 {
        auto at = [&](Scalar offset) {
            Scalar tt = t;
            Eigen::Matrix<Scalar, 3, 1> xx = x;
            if (axis < 0) tt += offset; else xx[axis] += offset;
            return f(tt, xx);
        };
        return (-at(2 * step) + 8 * at(step) - 8 * at(-step) + at(-2 * step)) / (12 * step);
    };

    const Mat6 K = build_K(g0);
    Mat6 M4 = build_frakB0(p) * d4(KT_over_J, -1);
    M4 += build_frakBtilde1(p, g0) * d4(KT_over_J, 0);
    M4 += build_frakB(2, p) * d4(KT_over_J, 1);
    M4 += build_frakB(3, p) * d4(KT_over_J, 2);
    M4 += build_frakB0(p) * d4(B0_at, -1) * KT_over_J(t, x);
    return K * M4;
}

/// det(M_1) in closed form: at general interior points
///   det = J^{-4} (nu . n)^2 |n|^4 (|nu|^2 - 1/eps^2)^2
/// with n = (1, -d2Psi, -d3Psi); on the boundary (J = 1, dPsi = front
/// gradient) this is the displayed noncharacteristicity formula.
template <typename Scalar>
Scalar det_M1_closed(const RegularizationParams<Scalar>& p, const InterfaceGeometry<Scalar>& g) {
    const Eigen::Matrix<Scalar, 3, 1> n(Scalar(1), -g.dpsi2, -g.dpsi3);
    const Scalar ndotnu = p.nu.dot(n);
    const Scalar n2 = n.squaredNorm();
    const Scalar d  = p.nu.squaredNorm() - Scalar(1) / (p.epsilon * p.epsilon);
    const Scalar J4 = std::pow(g.d1phi1, Scalar(4));
    return ndotnu * ndotnu * n2 * n2 * d * d / J4;
}

/// Secondary-symmetrization coefficients of Eq. (nu):
/// nu_1 = v2 d2phi + v3 d3phi, nu_k = v_k.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> choose_nu(const Eigen::Matrix<Scalar, 3, 1>& vhat, Scalar d2phi,
                                      Scalar d3phi) {
    return {vhat[1] * d2phi + vhat[2] * d3phi, vhat[1], vhat[2]};
}

/// Boundary-coefficient choice Ehat = Hcal_hat x nu; makes Ehat_1 cancel the
/// tangential velocity coupling and the tau-components vanish when
/// Hcal_hat_N = 0.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> choose_Ehat(const Eigen::Matrix<Scalar, 3, 1>& Hcal,
                                        const Eigen::Matrix<Scalar, 3, 1>& nu) {
    return Hcal.cross(nu);
}

/// Determinant by LU with partial pivoting.
template <typename Scalar, int N>
Scalar lu_determinant(const Eigen::Matrix<Scalar, N, N>& m) {
    return Eigen::PartialPivLU<Eigen::Matrix<Scalar, N, N>>(m).determinant();
}

/// Sorted eigenvalues of a symmetric matrix.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, 1> symmetric_spectrum(const Eigen::Matrix<Scalar, N, N>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, N, N>> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

/// Number of eigenvalues with |lambda| < tol_rel * max|lambda|.
template <typename Scalar, int N>
int count_zero_eigenvalues(const Eigen::Matrix<Scalar, N, 1>& spectrum,
                           Scalar tol_rel = Scalar(1e-9)) {
    const Scalar scale = spectrum.cwiseAbs().maxCoeff();
    if (scale == Scalar(0)) return N;
    int count = 0;
    for (int i = 0; i < N; ++i)
        if (std::abs(spectrum[i]) < tol_rel * scale) ++count;
    return count;
}

} // namespace mhdlab::vacuum

#endif
