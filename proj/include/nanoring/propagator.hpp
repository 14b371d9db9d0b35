#ifndef NANORING_PROPAGATOR_HPP
#define NANORING_PROPAGATOR_HPP

#include <stdexcept>

#include "nanoring/trajectory.hpp"

namespace nanoring {

struct NormDrift : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Population piling up at the basis edge: m_max too small for the drive.
struct TruncationPressure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PumpFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PropagatorOptions {
    int steps_per_oc = 2048;
    int samples_per_oc = 64;
    bool store_states = false;
    double norm_tol = 1e-6;
    double truncation_tol = 1e-8;
    bool check_truncation = true;
};

/// Integrates the TDSE over the schedule by operator splitting: exact
/// diagonal free-phase half-step, Crank-Nicolson solve of the tridiagonal
/// interaction with the field at the step midpoint, free half-step.
/// Unconditionally norm-stable, O(m_max) per step.
Trajectory propagate(const WaveFunction& initial, const PulseSchedule& schedule,
                     const RingConfig& ring, const PropagatorOptions& opt = {});

/// Propagates |0> under a circular pulse (beta = 45 deg) and returns the
/// final state; sign = +1 yields L_z > 0. Throws PumpFailed when the pump
/// leaves |L_z| < 1e-3.
WaveFunction prepare_pump(const RingConfig& ring, double intensity,
                          double photon_energy, int sign, double duration_oc,
                          double ramp_oc = 2.0, const PropagatorOptions& opt = {});

/// Circular pump pulse used by prepare_pump and the pumped truth tables.
LaserPulse pump_pulse(double intensity, double photon_energy, int sign,
                      double duration_oc, double ramp_oc = 2.0);

}  // namespace nanoring

#endif
