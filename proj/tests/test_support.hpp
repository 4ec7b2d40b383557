#ifndef MHDLAB_TEST_SUPPORT_HPP
#define MHDLAB_TEST_SUPPORT_HPP

#include <Eigen/Core>
#include <random>

#include "mhdlab/geometry.hpp"
#include "mhdlab/plasma_matrices.hpp"
#include "mhdlab/vacuum_matrices.hpp"

namespace mhdlab::testing {

inline std::mt19937& rng(unsigned seed = 0) {
    static std::mt19937 gen(12345);
    if (seed) gen.seed(seed);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Random admissible plasma state: p = q - |H|^2/2 kept well positive.
inline plasma::State<double> random_state() {
    plasma::State<double> U;
    U.v = Eigen::Vector3d::NullaryExpr([] { return uniform(-1.5, 1.5); });
    U.H = Eigen::Vector3d::NullaryExpr([] { return uniform(-1.0, 1.0); });
    U.S = uniform(-1.0, 1.0);
    U.q = 0.5 * U.H.squaredNorm() + uniform(0.5, 3.0);
    return U;
}

/// Random geometry respecting the diffeomorphism bound.
inline InterfaceGeometry<double> random_geometry() {
    InterfaceGeometry<double> g;
    g.dpsi_t = uniform(-0.4, 0.4);
    g.dpsi2  = uniform(-0.4, 0.4);
    g.dpsi3  = uniform(-0.4, 0.4);
    g.d1phi1 = uniform(0.6, 1.5);
    return g;
}

inline vacuum::RegularizationParams<double> random_reg(double eps_lo = 0.05,
                                                       double eps_hi = 0.8) {
    vacuum::RegularizationParams<double> p;
    p.epsilon = uniform(eps_lo, eps_hi);
    // keep eps |nu| < 1 with margin
    const double cap = 0.8 / p.epsilon;
    const double scale = std::min(2.0, cap / std::sqrt(3.0));
    p.nu = Eigen::Vector3d::NullaryExpr([&] { return uniform(-scale, scale); });
    return p;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
double rel_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    const double scale = std::max(max_abs(a), max_abs(b));
    if (scale == 0.0) return 0.0;
    return max_abs(a - b) / scale;
}

template <typename Derived>
double asymmetry(const Eigen::MatrixBase<Derived>& m) {
    const double scale = max_abs(m);
    if (scale == 0.0) return 0.0;
    return max_abs(m - m.transpose()) / scale;
}

} // namespace mhdlab::testing

#endif
