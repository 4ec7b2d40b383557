#ifndef MHDLAB_ERRORS_HPP
#define MHDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhdlab {

struct NonPositivePressure : std::domain_error {
    explicit NonPositivePressure(double p)
        : std::domain_error("non-positive pressure p=" + std::to_string(p)) {}
};

struct HyperbolicityViolated : std::domain_error {
    explicit HyperbolicityViolated(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateJacobian : std::domain_error {
    explicit DegenerateJacobian(double d1phi1)
        : std::domain_error("d1Phi1=" + std::to_string(d1phi1) + " below 1/2") {}
};

struct InvalidSupport : std::domain_error {
    explicit InvalidSupport(double M)
        : std::domain_error("cutoff support bound M=" + std::to_string(M) + " must exceed 1") {}
};

struct NotADiffeomorphism : std::runtime_error {
    explicit NotADiffeomorphism(double min_d1phi1)
        : std::runtime_error("min d1Phi1=" + std::to_string(min_d1phi1) + " below 1/2"),
          min_d1phi1(min_d1phi1) {}
    double min_d1phi1;
};

struct ConstraintViolated : std::runtime_error {
    ConstraintViolated(const std::string& which, double residual)
        : std::runtime_error("basic-state constraint " + which + " violated, residual=" +
                             std::to_string(residual)),
          which(which), residual(residual) {}
    std::string which;
    double residual;
};

struct StabilityViolated : std::runtime_error {
    StabilityViolated(double margin, int i2, int i3)
        : std::runtime_error("stability margin " + std::to_string(margin) +
                             " at boundary point (" + std::to_string(i2) + "," +
                             std::to_string(i3) + ")"),
          margin(margin), i2(i2), i3(i3) {}
    double margin;
    int i2, i3;
};

struct SingularFrontSystem : std::runtime_error {
    explicit SingularFrontSystem(double det)
        : std::runtime_error("front gradient system singular, |det|=" + std::to_string(det)) {}
};

struct CflViolated : std::runtime_error {
    CflViolated(double dt, double dt_max)
        : std::runtime_error("dt=" + std::to_string(dt) + " exceeds CFL limit " +
                             std::to_string(dt_max)) {}
};

struct NanDetected : std::runtime_error {
    explicit NanDetected(long step)
        : std::runtime_error("non-finite value at step " + std::to_string(step)), step(step) {}
    long step;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& key)
        : std::runtime_error("config error: " + key), key(key) {}
    std::string key;
};

} // namespace mhdlab

#endif
