#ifndef MHDLAB_EOS_HPP
#define MHDLAB_EOS_HPP

#include <Eigen/Core>
#include <cmath>

#include "mhdlab/errors.hpp"

namespace mhdlab::eos {

/// Ideal-gas-like closure rho = rho_ref * (p * exp(-S))^(1/Gamma).
/// Smooth on p > 0, any S, with rho > 0 and rho_p = rho/(Gamma p) > 0,
/// so the hyperbolicity region is the whole admissible domain.
template <typename Scalar = double>
struct Params {
    Scalar adiabatic_exponent = Scalar(5) / Scalar(3); // Gamma > 1
    Scalar reference_density  = Scalar(1);             // rho_ref > 0
};

template <typename Scalar = double>
struct ThermoPoint {
    Scalar pressure;
    Scalar entropy;
    Scalar rho;
    Scalar rho_p; // d(rho)/dp at fixed S
};

template <typename Scalar>
ThermoPoint<Scalar> density(const Params<Scalar>& params, Scalar p, Scalar S) {
    if (!(p > Scalar(0))) throw NonPositivePressure(static_cast<double>(p));
    using std::exp;
    using std::pow;
    const Scalar rho = params.reference_density *
                       pow(p * exp(-S), Scalar(1) / params.adiabatic_exponent);
    return {p, S, rho, rho / (params.adiabatic_exponent * p)};
}

/// Evaluates the closure at p = q - |H|^2/2 (total pressure variables).
template <typename Scalar, typename Derived>
ThermoPoint<Scalar> density_from_total_pressure(const Params<Scalar>& params, Scalar q,
                                                const Eigen::MatrixBase<Derived>& H, Scalar S) {
    const Scalar p = q - H.squaredNorm() / Scalar(2);
    if (!(p > Scalar(0))) throw NonPositivePressure(static_cast<double>(p));
    return density(params, p, S);
}

} // namespace mhdlab::eos

#endif
