#ifndef MHDLAB_PLASMA_MATRICES_HPP
#define MHDLAB_PLASMA_MATRICES_HPP

#include <Eigen/Core>
#include <Eigen/Dense>
#include <string>

#include "mhdlab/eos.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/geometry.hpp"

namespace mhdlab::plasma {

/// State vector U = (q, v, H, S): total pressure, velocity, magnetic field,
/// entropy. Component order fixed as indices 0, 1..3, 4..6, 7.
template <typename Scalar = double>
struct State {
    Scalar q = 1;
    Eigen::Matrix<Scalar, 3, 1> v = Eigen::Matrix<Scalar, 3, 1>::Zero();
    Eigen::Matrix<Scalar, 3, 1> H = Eigen::Matrix<Scalar, 3, 1>::Zero();
    Scalar S = 0;

    Eigen::Matrix<Scalar, 8, 1> vec() const {
        Eigen::Matrix<Scalar, 8, 1> u;
        u << q, v, H, S;
        return u;
    }
    static State from_vec(const Eigen::Matrix<Scalar, 8, 1>& u) {
        State s;
        s.q = u[0];
        s.v = u.template segment<3>(1);
        s.H = u.template segment<3>(4);
        s.S = u[7];
        return s;
    }
};

enum class MatrixTag {
    A0, A1, A2, A3, Atilde1,
    CalA0, CalA1, CalA2, CalA3,
    E12, E13, E14,
    B1eps, B2eps, B3eps,
    FrakB0, FrakB1, FrakB2, FrakB3,
    M0, M1, M2, M3, M4,
};

std::string tag_name(MatrixTag t);

/// Assembled system matrix with its provenance tag. All entry layouts are
/// dense row-major in the dump format; storage here is plain Eigen.
template <typename Scalar = double>
struct MatrixBundle {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> entries;
    MatrixTag tag;
    bool symmetric_expected = true;
};

namespace detail {

template <typename Scalar>
struct Thermo {
    Scalar rho;
    Scalar rp; // rho_p / rho
};

template <typename Scalar>
Thermo<Scalar> thermo_at(const State<Scalar>& U, const eos::Params<Scalar>& eosp) {
    eos::ThermoPoint<Scalar> t;
    try {
        t = eos::density_from_total_pressure(eosp, U.q, U.H, U.S);
    } catch (const NonPositivePressure&) {
        throw HyperbolicityViolated("p = q - |H|^2/2 not positive");
    }
    if (!(t.rho > Scalar(0)) || !(t.rho_p > Scalar(0)))
        throw HyperbolicityViolated("rho or rho_p not positive");
    return {t.rho, t.rho_p / t.rho};
}

} // namespace detail

/// A_0 of the q-based symmetric system: block structure
///   [ rp        0      -rp H^T  0 ]
///   [ 0       rho I3      0     0 ]
///   [ -rp H     0     I3+rp HH^T 0]
///   [ 0         0         0     1 ]
/// with rp = rho_p/rho.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> build_A0(const State<Scalar>& U, const eos::Params<Scalar>& eosp) {
    const auto th = detail::thermo_at(U, eosp);
    Eigen::Matrix<Scalar, 8, 8> A = Eigen::Matrix<Scalar, 8, 8>::Zero();
    A(0, 0) = th.rp;
    A.template block<1, 3>(0, 4) = -th.rp * U.H.transpose();
    A.template block<3, 1>(4, 0) = -th.rp * U.H;
    A.template block<3, 3>(1, 1) = th.rho * Eigen::Matrix<Scalar, 3, 3>::Identity();
    A.template block<3, 3>(4, 4) = Eigen::Matrix<Scalar, 3, 3>::Identity() +
                                   th.rp * U.H * U.H.transpose();
    A(7, 7) = Scalar(1);
    return A;
}

/// A_j, j = 1..3: the advective matrix of the q-based system with
/// v.grad -> v_j, div -> e_j^T, grad -> e_j, H.grad -> H_j.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> build_Aj(int j, const State<Scalar>& U,
                                     const eos::Params<Scalar>& eosp) {
    const auto th = detail::thermo_at(U, eosp);
    const Scalar vj = U.v[j - 1];
    const Scalar Hj = U.H[j - 1];
    Eigen::Matrix<Scalar, 3, 1> ej = Eigen::Matrix<Scalar, 3, 1>::Zero();
    ej[j - 1] = Scalar(1);
    const Eigen::Matrix<Scalar, 3, 3> I3 = Eigen::Matrix<Scalar, 3, 3>::Identity();

    Eigen::Matrix<Scalar, 8, 8> A = Eigen::Matrix<Scalar, 8, 8>::Zero();
    A(0, 0) = th.rp * vj;
    A.template block<1, 3>(0, 1) = ej.transpose();
    A.template block<3, 1>(1, 0) = ej;
    A.template block<1, 3>(0, 4) = -th.rp * vj * U.H.transpose();
    A.template block<3, 1>(4, 0) = -th.rp * vj * U.H;
    A.template block<3, 3>(1, 1) = th.rho * vj * I3;
    A.template block<3, 3>(1, 4) = -Hj * I3;
    A.template block<3, 3>(4, 1) = -Hj * I3;
    A.template block<3, 3>(4, 4) = vj * (I3 + th.rp * U.H * U.H.transpose());
    A(7, 7) = vj;
    return A;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> build_A(int alpha, const State<Scalar>& U,
                                    const eos::Params<Scalar>& eosp) {
    return alpha == 0 ? build_A0(U, eosp) : build_Aj(alpha, U, eosp);
}

/// Atilde_1 = (A_1 - A_0 d_t Psi - A_2 d_2 Psi - A_3 d_3 Psi) / d_1 Phi_1.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> build_Atilde1(const State<Scalar>& U,
                                          const InterfaceGeometry<Scalar>& g,
                                          const eos::Params<Scalar>& eosp) {
    require_jacobian(g);
    Eigen::Matrix<Scalar, 8, 8> A = build_Aj(1, U, eosp);
    A -= g.dpsi_t * build_A0(U, eosp);
    A -= g.dpsi2 * build_Aj(2, U, eosp);
    A -= g.dpsi3 * build_Aj(3, U, eosp);
    return A / g.d1phi1;
}

/// Constant coupling matrices of the compact (q,u,h,S) system: a single
/// symmetric unit pair at (0, j-1) for j = 2, 3, 4.
template <typename Scalar = double>
Eigen::Matrix<Scalar, 8, 8> constant_E(int j) {
    Eigen::Matrix<Scalar, 8, 8> E = Eigen::Matrix<Scalar, 8, 8>::Zero();
    E(0, j - 1) = Scalar(1);
    E(j - 1, 0) = Scalar(1);
    return E;
}

namespace detail {

template <typename Scalar>
struct CalCoeffs {
    Scalar rho, rp;
    Eigen::Matrix<Scalar, 3, 1> h, w;
    Eigen::Matrix<Scalar, 3, 3> a0;
    Scalar J;
};

/// Hat quantities entering the (q,u,h,S) system, derived from the state in
/// the ORIGINAL (q,v,H,S) variables plus pointwise geometry.
template <typename Scalar>
CalCoeffs<Scalar> cal_coeffs(const State<Scalar>& U, const InterfaceGeometry<Scalar>& g,
                             const eos::Params<Scalar>& eosp) {
    require_jacobian(g);
    const auto th = thermo_at(U, eosp);
    const Eigen::Matrix<Scalar, 3, 3> eta = build_eta(g);
    CalCoeffs<Scalar> c;
    c.rho = th.rho;
    c.rp  = th.rp;
    c.h   = eta * U.H;
    c.w   = eta * U.v;
    c.w[0] -= g.dpsi_t;
    c.a0 = build_a0(g);
    c.J  = g.d1phi1;
    return c;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> cal_block(const CalCoeffs<Scalar>& c, Scalar qq,
                                      const Eigen::Matrix<Scalar, 3, 3>& vv,
                                      const Eigen::Matrix<Scalar, 3, 3>& hh,
                                      const Eigen::Matrix<Scalar, 3, 3>& vh, Scalar ss) {
    Eigen::Matrix<Scalar, 8, 8> A = Eigen::Matrix<Scalar, 8, 8>::Zero();
    A(0, 0) = qq;
    A.template block<1, 3>(0, 4) = -qq * c.h.transpose();
    A.template block<3, 1>(4, 0) = -qq * c.h;
    A.template block<3, 3>(1, 1) = vv;
    A.template block<3, 3>(1, 4) = vh;
    A.template block<3, 3>(4, 1) = vh.transpose();
    A.template block<3, 3>(4, 4) = hh + qq * c.h * c.h.transpose();
    A(7, 7) = ss;
    return A;
}

} // namespace detail

/// Coefficient matrices of the transformed system for calU = (q, u, h, S):
/// alpha = 0 gives the d_t coefficient, alpha = 1..3 the hat-advective part
/// of the d_j coefficient (the constant couplings live in constant_E).
/// At any point with w1 = h1 = 0 the alpha = 1 matrix vanishes.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> build_calA(int alpha, const State<Scalar>& U,
                                       const InterfaceGeometry<Scalar>& g,
                                       const eos::Params<Scalar>& eosp) {
    const auto c = detail::cal_coeffs(U, g, eosp);
    const Eigen::Matrix<Scalar, 3, 3> Z = Eigen::Matrix<Scalar, 3, 3>::Zero();
    if (alpha == 0) {
        return c.J * detail::cal_block<Scalar>(c, c.rp, c.rho * c.a0, c.a0, Z, Scalar(1));
    }
    const Scalar wj = c.w[alpha - 1];
    const Scalar hj = c.h[alpha - 1];
    return c.J * detail::cal_block<Scalar>(c, c.rp * wj, c.rho * c.a0 * wj, c.a0 * wj,
                                           -c.a0 * hj, wj);
}

/// Zero-order matrix of the frozen-coefficient system, built by central
/// finite differencing of the assembly maps along each state coordinate:
/// column i of the result is sum_alpha (dA_alpha/dU_i)(U) * grad_alpha,
/// where grad_alpha are the space-time derivatives of the coefficient state.
template <typename Scalar, typename Builder>
Eigen::Matrix<Scalar, 8, 8> state_differential(Builder&& build, const State<Scalar>& U,
                                               const Eigen::Matrix<Scalar, 8, 1>& direction,
                                               Scalar step = Scalar(1e-6)) {
    Eigen::Matrix<Scalar, 8, 1> u = U.vec();
    Eigen::Matrix<Scalar, 8, 8> diff = Eigen::Matrix<Scalar, 8, 8>::Zero();
    for (int i = 0; i < 8; ++i) {
        if (direction[i] == Scalar(0)) continue;
        Eigen::Matrix<Scalar, 8, 1> up = u, um = u;
        up[i] += step;
        um[i] -= step;
        diff += direction[i] *
                (build(State<Scalar>::from_vec(up)) - build(State<Scalar>::from_vec(um))) /
                (Scalar(2) * step);
    }
    return diff;
}

template <typename Scalar>
MatrixBundle<Scalar> bundle(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
                            MatrixTag tag, bool symmetric_expected = true) {
    return {m, tag, symmetric_expected};
}

inline std::string tag_name(MatrixTag t) {
    switch (t) {
        case MatrixTag::A0: return "A0";
        case MatrixTag::A1: return "A1";
        case MatrixTag::A2: return "A2";
        case MatrixTag::A3: return "A3";
        case MatrixTag::Atilde1: return "Atilde1";
        case MatrixTag::CalA0: return "calA0";
        case MatrixTag::CalA1: return "calA1";
        case MatrixTag::CalA2: return "calA2";
        case MatrixTag::CalA3: return "calA3";
        case MatrixTag::E12: return "E12";
        case MatrixTag::E13: return "E13";
        case MatrixTag::E14: return "E14";
        case MatrixTag::B1eps: return "B1eps";
        case MatrixTag::B2eps: return "B2eps";
        case MatrixTag::B3eps: return "B3eps";
        case MatrixTag::FrakB0: return "frakB0";
        case MatrixTag::FrakB1: return "frakB1";
        case MatrixTag::FrakB2: return "frakB2";
        case MatrixTag::FrakB3: return "frakB3";
        case MatrixTag::M0: return "M0";
        case MatrixTag::M1: return "M1";
        case MatrixTag::M2: return "M2";
        case MatrixTag::M3: return "M3";
        case MatrixTag::M4: return "M4";
    }
    return "?";
}

} // namespace mhdlab::plasma

#endif
