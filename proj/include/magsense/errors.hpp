#pragma once

#include <stdexcept>
#include <string>

namespace magsense {

/// Bad user or caller input: non-physical parameters, malformed grids, unknown ids.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A linear-response denominator vanished at a real frequency.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& kind, double omega)
        : std::runtime_error(kind + " at omega=" + std::to_string(omega)),
          kind_(kind),
          omega_(omega) {}

    const std::string& kind() const noexcept { return kind_; }
    double omega() const noexcept { return omega_; }

private:
    std::string kind_;
    double omega_;
};

/// |A|² + |B|² = 0: the magnon channel does not reach the output, so noise
/// cannot be referred to it.
class NoTransductionError : public std::runtime_error {
public:
    explicit NoTransductionError(double omega)
        : std::runtime_error("no-transduction at omega=" + std::to_string(omega)), omega_(omega) {}

    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

/// The linearized dynamics has an eigenvalue with non-negative real part.
class InstabilityError : public std::runtime_error {
public:
    explicit InstabilityError(double max_real_part)
        : std::runtime_error("unstable operating point: max Re(lambda)=" +
                             std::to_string(max_real_part)),
          max_real_part_(max_real_part) {}

    double max_real_part() const noexcept { return max_real_part_; }

private:
    double max_real_part_;
};

}  // namespace magsense
