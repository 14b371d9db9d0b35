#ifndef NANORING_OBSERVABLES_HPP
#define NANORING_OBSERVABLES_HPP

#include <stdexcept>
#include <vector>

#include "nanoring/trajectory.hpp"

namespace nanoring {

struct EmptyWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Dipole {
    double x = 0.0;
    double y = 0.0;
};

/// m = gamma * L_z for a ring (or a laser spot summed over rings).
struct MagneticMoment {
    double value = 0.0;
    double gamma = kGyromagneticRatio;
};

/// D_x = e R sum_m Re(a*_{m-1} a_m), D_y = e R sum_m Im(a*_m a_{m-1});
/// equal to e R <cos phi> and e R <sin phi>.
Dipole dipole(const WaveFunction& state, const RingConfig& ring);

/// L_z = sum_m |a_m|^2 m, units of hbar.
double angular_momentum(const WaveFunction& state);

/// (1/T) integral of L_z over [t0, t1], trapezoidal quadrature on the
/// sampled series.
double time_avg_Lz(const Trajectory& traj, double t0, double t1);

/// gamma * sum of per-ring L_z values inside the laser spot.
MagneticMoment array_moment(const std::vector<double>& lz_values,
                            double gamma = kGyromagneticRatio);

}  // namespace nanoring

#endif
